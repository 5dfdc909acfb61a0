"""Exceptions raised by the claimcheck library."""


class ClaimCheckError(Exception):
    """Base class for all claimcheck errors."""


class CorpusError(ClaimCheckError):
    """Patent record or annotation files cannot be read."""


class ClaimParseError(ClaimCheckError):
    """Raw claim text has no recognizable claim numbering."""


class AncestryError(ClaimCheckError):
    """A dependency chain cannot be followed to an independent claim."""


class UndefinedCoverageError(ClaimCheckError):
    """Coverage has an empty denominator."""


class EmbeddingError(ClaimCheckError):
    """Embedding vectors are unusable or the provider failed."""


class ScoringError(ClaimCheckError):
    """A metric was called with input outside its contract."""


class DegenerateVarianceError(ClaimCheckError):
    """A label sequence has no variance so tau-b is undefined."""


class HarnessError(ClaimCheckError):
    """The evaluation protocol cannot produce a result."""


class RankingError(HarnessError):
    """A metric failed on one of the outputs of an annotated pair."""

    def __init__(self, pair_id, message):
        """Initialize the class.

        Args:
            pair_id: Identifier of the pair that failed
            message: Reason for the failure

        Returns:
            None

        """
        # Initialize key variables
        self.pair_id = pair_id
        self.reason = message
        ClaimCheckError.__init__(
            self, "Pair {}: {}".format(pair_id, message)
        )

    def __reduce__(self):
        """Rebuild the exception when passed between processes."""
        return (RankingError, (self.pair_id, self.reason))
