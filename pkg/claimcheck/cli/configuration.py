"""claimcheck classes that manage the command line configuration."""

# Standard imports
import os

# Import project libraries
from claimcheck.core.configuration import ConfigCore
from claimcheck.core import log
from claimcheck import (
    ABSTRACT_WORD_LIMIT,
    COPY_RATIO_THRESHOLD,
    REPETITION_MIN_LENGTH,
    REPETITION_MIN_REPEATS,
    CONTAINMENT_WEIGHT,
    CONTAINED_WEIGHT,
    NGRAM_MAX,
    EMBEDDER_TIMEOUT,
    EMBEDDER_RETRIES,
    TIE_EPSILON,
)

# Environment variables that override the configured endpoints
EMBEDDER_URL_VARIABLE = "CLAIMCHECK_EMBEDDER_URL"
GENERATOR_URL_VARIABLE = "CLAIMCHECK_GENERATOR_URL"
GENERATOR_KEY_VARIABLE = "CLAIMCHECK_GENERATOR_KEY"


class ConfigCLI(ConfigCore):
    """Class gathers all configuration information."""

    def __init__(self):
        """Intialize the class.

        Args:
            None

        Returns:
            None

        """
        # Instantiate sub class
        ConfigCore.__init__(self)

        # Get sections
        self._config_lint = self._section("lint")
        self._config_terms = self._section("terms")
        self._config_scorer = self._section("scorer")
        self._config_harness = self._section("harness")

    def abstract_word_limit(self):
        """Get abstract_word_limit.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_lint,
            "lint",
            "abstract_word_limit",
            ABSTRACT_WORD_LIMIT,
            int,
        )
        return result

    def copy_ratio_threshold(self):
        """Get copy_ratio_threshold.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_lint,
            "lint",
            "copy_ratio_threshold",
            COPY_RATIO_THRESHOLD,
            float,
        )
        return result

    def repetition_min_length(self):
        """Get repetition_min_length.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_lint,
            "lint",
            "repetition_min_length",
            REPETITION_MIN_LENGTH,
            int,
        )
        return result

    def repetition_min_repeats(self):
        """Get repetition_min_repeats.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_lint,
            "lint",
            "repetition_min_repeats",
            REPETITION_MIN_REPEATS,
            int,
        )
        return result

    def vagueness_lexicon(self):
        """Get the vagueness lexicon path.

        Args:
            None

        Returns:
            result: Path, None for the packaged lexicon

        """
        return _path(self._config_lint.get("vagueness_lexicon"))

    def stopwords(self):
        """Get the stopword list path.

        Args:
            None

        Returns:
            result: Path, None for the packaged list

        """
        return _path(self._config_terms.get("stopwords"))

    def containment_weight(self):
        """Get containment_weight.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_terms,
            "terms",
            "containment_weight",
            CONTAINMENT_WEIGHT,
            float,
        )
        return result

    def contained_weight(self):
        """Get contained_weight.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_terms,
            "terms",
            "contained_weight",
            CONTAINED_WEIGHT,
            float,
        )
        return result

    def ngram_max(self):
        """Get ngram_max.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_scorer, "scorer", "ngram_max", NGRAM_MAX, int
        )
        return result

    def embedder(self):
        """Get the embedder selection.

        The embedder URL, from the environment or the configuration,
        selects the HTTP provider.

        Args:
            None

        Returns:
            result: "fallback" or "http:<url>"

        """
        # Get result
        url = self.embedder_url()
        if bool(url) is True:
            return "http:{}".format(url)
        result = self._config_scorer.get("embedder", "fallback")
        return str(result)

    def embedder_url(self):
        """Get embedder_url.

        Args:
            None

        Returns:
            result: URL, None if not configured

        """
        # Get result
        result = os.environ.get(EMBEDDER_URL_VARIABLE)
        if bool(result) is False:
            result = self._config_scorer.get("embedder_url")
        return result or None

    def embedder_timeout(self):
        """Get embedder_timeout.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_scorer,
            "scorer",
            "embedder_timeout",
            EMBEDDER_TIMEOUT,
            float,
        )
        return result

    def embedder_retries(self):
        """Get embedder_retries.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_scorer,
            "scorer",
            "embedder_retries",
            EMBEDDER_RETRIES,
            int,
        )
        return result

    def tie_epsilon(self):
        """Get tie_epsilon.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = _number(
            self._config_harness, "harness", "tie_epsilon", TIE_EPSILON, float
        )
        return result

    def generator_url(self):
        """Get generator_url.

        Args:
            None

        Returns:
            result: URL, None if not configured

        """
        # Get result
        result = os.environ.get(GENERATOR_URL_VARIABLE)
        if bool(result) is False:
            result = self._config_harness.get("generator_url")
        return result or None

    def generator_model(self):
        """Get generator_model.

        Args:
            None

        Returns:
            result: Model name, None if not configured

        """
        return self._config_harness.get("generator_model")

    def generator_key(self):
        """Get the generator API key from the environment.

        Args:
            None

        Returns:
            result: Key, None if not set

        """
        return os.environ.get(GENERATOR_KEY_VARIABLE) or None


def _number(section, name, key, default, kind):
    """Read a number from a configuration section.

    Args:
        section: dict of the section
        name: Section name for messages
        key: Key to read
        default: Value when the key is absent or invalid
        kind: int or float

    Returns:
        result: Number

    """
    # Get result
    value = section.get(key, default)
    try:
        result = kind(value)
    except (TypeError, ValueError):
        log_message = '{}: "{}" must be a number, using {}'.format(
            name, key, default
        )
        log.log2warning(1031, log_message)
        result = default
    return result


def _path(value):
    """Expand a configured path.

    Args:
        value: Path or None

    Returns:
        result: Absolute path, None if not configured

    """
    if bool(value) is False:
        return None
    return os.path.abspath(os.path.expanduser(str(value)))
