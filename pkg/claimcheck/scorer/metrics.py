"""Rule-based, coverage and similarity metrics."""

# Standard imports
import math
from statistics import fmean

# PIP3 libraries
import numpy as np

# Application imports
from claimcheck import NGRAM_MAX, REPETITION_MIN_LENGTH, REPETITION_MIN_REPEATS
from claimcheck.core import general
from claimcheck.core.errors import (
    ClaimParseError,
    EmbeddingError,
    ScoringError,
    UndefinedCoverageError,
)
from claimcheck.claims import ClaimKind, ParsedClaim
from claimcheck.claims import parser
from claimcheck.lint import detectors
from claimcheck.scorer import RuleCheckerResult, Similarity

# Checks counted by the rule-based score, distinctiveness excluded
TOTAL_CHECKS = 4


def checker_score(
    distinctive, no_repetition, punctuation_ok, numbering_ok, dependency_ok
):
    """Combine check outcomes into a rule-based score.

    Distinctiveness is mandatory: a repeated claim scores 0. Otherwise the
    score is the fraction of the other four checks that passed.

    Args:
        distinctive: The claim doesn't repeat an earlier claim
        no_repetition: The claim has no repetition loop
        punctuation_ok: The claim is punctuated correctly
        numbering_ok: The claim is numbered consecutively
        dependency_ok: The claim's dependency is compliant and clear

    Returns:
        result: RuleCheckerResult

    """
    # Initialize key variables
    checks = [no_repetition, punctuation_ok, numbering_ok, dependency_ok]

    # Score
    if bool(distinctive) is False:
        score = 0.0
    else:
        score = sum(1 for _ in checks if bool(_) is True) / TOTAL_CHECKS

    # Return
    result = RuleCheckerResult(
        distinctive=bool(distinctive),
        no_repetition=bool(no_repetition),
        punctuation_ok=bool(punctuation_ok),
        numbering_ok=bool(numbering_ok),
        dependency_ok=bool(dependency_ok),
        score=score,
    )
    return result


def rule_checker_score(
    context,
    candidate_text,
    required,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Score a generated next claim with the rule-based checker.

    A candidate that doesn't parse as a claim fails the numbering and
    dependency checks. Distinctiveness, repetition and punctuation still
    run on its raw text.

    Args:
        context: ClaimSet of the input claims
        candidate_text: Raw generated claim
        required: ClaimKind the instruction asked for
        min_length: Shortest repeating sequence for the repetition loop
        min_repeats: Fewest repeats for the repetition loop

    Returns:
        result: RuleCheckerResult

    """
    # Initialize key variables
    if bool(str(candidate_text).strip()) is False:
        raise ScoringError("Candidate claim is empty")
    text = candidate_text.strip()

    # Checks on the raw text
    distinctive = not detectors.check_distinctiveness(context, text)
    no_repetition = (
        detectors.detect_repetition_loop(
            text, min_length=min_length, min_repeats=min_repeats
        )
        is None
    )

    # Structural checks
    try:
        candidate = parser.parse_claim(text)
    except ClaimParseError:
        candidate = None

    if candidate is None:
        # Punctuation only looks at the raw text
        unnumbered = ParsedClaim(
            number=0,
            raw_text=text,
            preamble="",
            transition=None,
            body_elements=(),
            refs=(),
            kind=ClaimKind.INDEPENDENT,
        )
        punctuation_ok = not detectors.check_punctuation(unnumbered)
        numbering_ok = False
        dependency_ok = False
    else:
        punctuation_ok = not detectors.check_punctuation(candidate)
        numbering_ok = not detectors.check_numbering(context, candidate)
        dependency_ok = not detectors.check_dependency(
            context, candidate, required
        )

    # Return
    result = checker_score(
        distinctive, no_repetition, punctuation_ok, numbering_ok, dependency_ok
    )
    return result


def term_coverage(claims_terms, abstract_terms):
    """Get the fraction of claim terms found in the abstract.

    Args:
        claims_terms: TermSet or set of claim terms
        abstract_terms: TermSet or set of abstract terms

    Returns:
        result: float in [0, 1]

    """
    # Initialize key variables
    claims_terms = _terms(claims_terms)
    abstract_terms = _terms(abstract_terms)

    if bool(claims_terms) is False:
        raise UndefinedCoverageError("The claims have no terms")

    # Return
    result = len(claims_terms & abstract_terms) / len(claims_terms)
    return result


def ngram_coverage_by_n(claims_text, abstract_text, n_max=NGRAM_MAX):
    """Get n-gram coverage of the claims by the abstract for each n.

    Args:
        claims_text: Raw claim text
        abstract_text: Raw abstract text
        n_max: Largest n

    Returns:
        result: dict of n to coverage, for every n the claims are long
            enough to define

    """
    # Initialize key variables
    if int(n_max) < 1:
        raise ScoringError("n_max must be at least 1, not {}".format(n_max))
    claims_tokens = general.tokens(claims_text)
    abstract_tokens = general.tokens(abstract_text)
    result = {}

    for size in range(1, int(n_max) + 1):
        claims_ngrams = general.ngrams(claims_tokens, size)
        if bool(claims_ngrams) is False:
            continue
        abstract_ngrams = general.ngrams(abstract_tokens, size)
        result[size] = len(claims_ngrams & abstract_ngrams) / len(
            claims_ngrams
        )

    # Return
    return result


def ngram_coverage(claims_text, abstract_text, n_max=NGRAM_MAX):
    """Get the mean n-gram coverage over n = 1 .. n_max.

    Args:
        claims_text: Raw claim text
        abstract_text: Raw abstract text
        n_max: Largest n

    Returns:
        result: float in [0, 1]

    """
    # Initialize key variables
    by_n = ngram_coverage_by_n(claims_text, abstract_text, n_max=n_max)
    if bool(by_n) is False:
        raise UndefinedCoverageError("The claims have no tokens")

    # Return
    result = fmean(by_n.values())
    return result


def cosine_similarity(u, v):
    """Get the cosine similarity of two vectors.

    Args:
        u: numpy vector
        v: numpy vector

    Returns:
        result: Similarity

    """
    # Initialize key variables
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)

    # Check vectors
    if u.shape != v.shape or u.ndim != 1:
        raise EmbeddingError(
            "Cannot compare vectors of shapes {} and {}".format(
                u.shape, v.shape
            )
        )
    u_norm = np.linalg.norm(u)
    v_norm = np.linalg.norm(v)
    if u_norm == 0 or v_norm == 0:
        raise EmbeddingError("Cannot compare a zero vector")
    if not (math.isfinite(u_norm) and math.isfinite(v_norm)):
        raise EmbeddingError("Vectors have non-finite components")

    # Return
    raw = float(np.clip(np.dot(u, v) / (u_norm * v_norm), -1.0, 1.0))
    result = Similarity(raw=raw, value=(1.0 + raw) / 2.0)
    return result


def semsim_abstract(claims_text, abstract_text, provider):
    """Get the similarity of an abstract to its claims.

    Args:
        claims_text: Raw claim text
        abstract_text: Raw abstract text
        provider: EmbeddingProvider

    Returns:
        result: Similarity

    """
    # Check input
    if bool(claims_text.strip()) is False:
        raise ScoringError("Claims are empty")
    if bool(abstract_text.strip()) is False:
        raise ScoringError("Abstract is empty")

    # Return
    (claims, abstract) = provider.embed_many([claims_text, abstract_text])
    result = cosine_similarity(claims, abstract)
    return result


def joined_claims(context):
    """Join the raw text of a claim set.

    Args:
        context: ClaimSet

    Returns:
        result: Claim texts joined by single newlines

    """
    # Return
    result = "\n".join(_.raw_text for _ in context.claims)
    return result


def semsim_next_claim(context, candidate_text, provider):
    """Get the similarity of the claims before and after a next claim.

    Args:
        context: ClaimSet of the input claims
        candidate_text: Raw generated claim
        provider: EmbeddingProvider

    Returns:
        result: Similarity

    """
    # Check input
    if bool(context.claims) is False:
        raise ScoringError("Context has no claims")
    if bool(str(candidate_text).strip()) is False:
        raise ScoringError("Candidate claim is empty")

    # Return
    before = joined_claims(context)
    after = "{}\n{}".format(before, candidate_text.strip())
    (first, second) = provider.embed_many([before, after])
    result = cosine_similarity(first, second)
    return result


def weighted_score(metric, checker):
    """Weight a metric by the rule-based checker score.

    Args:
        metric: float in [0, 1] or Similarity (its mapped value is used)
        checker: RuleCheckerResult

    Returns:
        result: float

    """
    # Initialize key variables
    value = metric.value if isinstance(metric, Similarity) else metric
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise ScoringError("Metric {} is outside [0, 1]".format(value))

    # Return
    result = value * checker.score
    return result


def _terms(value):
    """Get the set of terms from a TermSet or an iterable.

    Args:
        value: TermSet or iterable of terms

    Returns:
        result: frozenset

    """
    # Return
    result = frozenset(getattr(value, "terms", value))
    return result
