"""Text embedding providers.

Embeddings are numpy float64 vectors. The hashing provider is a
deterministic bag-of-words stand-in for a trained encoder. The HTTP
provider delegates to an external encoder service.

"""

# Standard imports
import threading
from abc import ABC, abstractmethod

# PIP3 libraries
import more_itertools as mit
import numpy as np
import requests

# Application imports
from claimcheck import EMBEDDING_DIMENSION, EMBEDDER_TIMEOUT, EMBEDDER_RETRIES
from claimcheck.core import log
from claimcheck.core import rest
from claimcheck.core import general
from claimcheck.core.errors import EmbeddingError

# 64-bit FNV-1a
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data):
    """Hash bytes with 64-bit FNV-1a.

    Args:
        data: bytes

    Returns:
        result: Unsigned 64-bit integer

    """
    # Process
    result = FNV_OFFSET
    for byte in data:
        result ^= byte
        result = (result * FNV_PRIME) & _MASK
    return result


class EmbeddingProvider(ABC):
    """Map text to fixed-dimension vectors."""

    name = "abstract"

    @property
    @abstractmethod
    def dimension(self):
        """Get the vector dimension.

        Args:
            None

        Returns:
            result: Positive integer

        """

    @abstractmethod
    def embed_many(self, texts):
        """Embed several texts.

        Args:
            texts: List of strings

        Returns:
            result: List of numpy vectors

        """

    def embed(self, text):
        """Embed one text.

        Args:
            text: String

        Returns:
            result: numpy vector

        """
        # Return
        result = self.embed_many([text])[0]
        return result


class HashingEmbeddingProvider(EmbeddingProvider):
    """Hashed bag-of-words vectors, L2-normalized."""

    name = "fallback"

    def __init__(self, dimension=EMBEDDING_DIMENSION):
        """Initialize the class.

        Args:
            dimension: Vector dimension

        Returns:
            None

        """
        # Initialize key variables
        if int(dimension) < 1:
            raise EmbeddingError("Dimension must be positive")
        self._dimension = int(dimension)

    @property
    def dimension(self):
        """Get the vector dimension.

        Args:
            None

        Returns:
            result: Positive integer

        """
        return self._dimension

    def embed_many(self, texts):
        """Embed several texts.

        Args:
            texts: List of strings

        Returns:
            result: List of numpy vectors. Texts without tokens map to the
                zero vector

        """
        # Return
        result = [self._embed(_) for _ in texts]
        return result

    def _embed(self, text):
        """Embed one text.

        Args:
            text: String

        Returns:
            result: numpy vector

        """
        # Count hashed tokens
        result = np.zeros(self._dimension, dtype=np.float64)
        for token in general.tokens(text):
            result[fnv1a_64(token.encode("utf-8")) % self._dimension] += 1.0

        # Normalize
        norm = np.linalg.norm(result)
        if norm > 0:
            result /= norm
        return result


class HttpEmbeddingProvider(EmbeddingProvider):
    """Embeddings from an HTTP encoder service.

    The service receives {"texts": [...]} and replies with
    {"embeddings": [[...], ...]}. The dimension is learned from the first
    reply and enforced afterwards.

    """

    name = "http"

    def __init__(
        self,
        url,
        timeout=EMBEDDER_TIMEOUT,
        retries=EMBEDDER_RETRIES,
        batch_size=32,
    ):
        """Initialize the class.

        Args:
            url: Service URL
            timeout: Timeout in seconds per request
            retries: Attempts per request
            batch_size: Texts per request

        Returns:
            None

        """
        # Initialize key variables
        self.url = url
        self.timeout = timeout
        self.retries = retries
        self.batch_size = max(1, int(batch_size))
        self._dimension = None
        self._lock = threading.Lock()
        self._session = requests.Session()

    def __getstate__(self):
        """Get the picklable state for worker processes.

        Args:
            None

        Returns:
            state: dict

        """
        state = self.__dict__.copy()
        del state["_lock"]
        del state["_session"]
        return state

    def __setstate__(self, state):
        """Restore state in a worker process.

        Args:
            state: dict

        Returns:
            None

        """
        self.__dict__.update(state)
        self._lock = threading.Lock()
        self._session = requests.Session()

    @property
    def dimension(self):
        """Get the vector dimension.

        Args:
            None

        Returns:
            result: Positive integer, None until the first reply

        """
        return self._dimension

    def embed_many(self, texts):
        """Embed several texts.

        Args:
            texts: List of strings

        Returns:
            result: List of numpy vectors

        """
        # Initialize key variables
        result = []

        for batch in _batches(list(texts), self.batch_size):
            with self._lock:
                reply = rest.post(
                    self.url,
                    {"texts": batch},
                    timeout=self.timeout,
                    retries=self.retries,
                    session=self._session,
                )
            if reply.success is False:
                log_message = "Embedding service failed: {}".format(
                    reply.response
                )
                log.log2warning(1026, log_message)
                raise EmbeddingError(log_message)
            result.extend(self._vectors(reply.response, len(batch)))

        # Return
        return result

    def _vectors(self, reply, expected):
        """Validate a service reply.

        Args:
            reply: Decoded JSON reply
            expected: Number of texts sent

        Returns:
            result: List of numpy vectors

        """
        # Check layout
        embeddings = None
        if isinstance(reply, dict) is True:
            embeddings = reply.get("embeddings")
        if not isinstance(embeddings, list) or len(embeddings) != expected:
            raise EmbeddingError(
                "Embedding service returned {} vectors for {} texts".format(
                    len(embeddings) if isinstance(embeddings, list) else 0,
                    expected,
                )
            )

        # Convert
        result = []
        for item in embeddings:
            try:
                vector = np.asarray(item, dtype=np.float64)
            except (TypeError, ValueError):
                raise EmbeddingError("Embedding is not a list of numbers")
            if vector.ndim != 1 or vector.size == 0:
                raise EmbeddingError("Embedding is not a flat vector")
            if not np.all(np.isfinite(vector)):
                raise EmbeddingError("Embedding has non-finite components")

            # Learn, then enforce, the dimension
            with self._lock:
                if self._dimension is None:
                    self._dimension = int(vector.size)
            if vector.size != self._dimension:
                raise EmbeddingError(
                    "Embedding dimension {} differs from {}".format(
                        vector.size, self._dimension
                    )
                )
            result.append(vector)

        # Return
        return result


def provider_from_spec(
    spec, timeout=EMBEDDER_TIMEOUT, retries=EMBEDDER_RETRIES
):
    """Create a provider from a selection string.

    Args:
        spec: "fallback", "http:<url>" or a bare http(s) URL
        timeout: Timeout in seconds for HTTP providers
        retries: Attempts per request for HTTP providers

    Returns:
        result: EmbeddingProvider

    """
    # Initialize key variables
    spec = str(spec).strip()

    # Select
    if spec == "fallback":
        return HashingEmbeddingProvider()
    if spec.startswith(("http://", "https://")):
        return HttpEmbeddingProvider(spec, timeout=timeout, retries=retries)
    if spec.startswith("http:") and bool(spec[5:]) is True:
        return HttpEmbeddingProvider(
            spec[5:], timeout=timeout, retries=retries
        )
    raise EmbeddingError(
        'Unknown embedder "{}", use "fallback" or "http:<url>"'.format(spec)
    )


def _batches(items, size):
    """Split a list into batches.

    Args:
        items: List
        size: Batch size

    Returns:
        result: List of lists

    """
    # Return
    result = [list(_) for _ in mit.chunked(items, size)]
    return result
