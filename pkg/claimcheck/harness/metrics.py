"""Registry of the metrics the harness can evaluate.

Metric functions are module-level callables bound with functools.partial
so a Metric can be sent to worker processes.

"""

# Standard imports
from functools import partial

# Application imports
from claimcheck import (
    CONTAINMENT_WEIGHT,
    CONTAINED_WEIGHT,
    NGRAM_MAX,
    REPETITION_MIN_LENGTH,
    REPETITION_MIN_REPEATS,
)
from claimcheck.core.errors import HarnessError, ScoringError
from claimcheck.claims import parser
from claimcheck.corpus import Task
from claimcheck.harness import Metric
from claimcheck.scorer import metrics
from claimcheck.scorer.embedding import HashingEmbeddingProvider
from claimcheck.terms import SOURCE_ABSTRACT, SOURCE_CLAIMS
from claimcheck.terms import extract

RULE_CHECKER = "rule-checker"
TERM_COVERAGE = "term-coverage"
NGRAM_COVERAGE = "ngram-coverage"
SEMSIM = "semsim"
WEIGHTED_SEMSIM = "weighted-semsim"

METRIC_NAMES = (
    RULE_CHECKER,
    TERM_COVERAGE,
    NGRAM_COVERAGE,
    SEMSIM,
    WEIGHTED_SEMSIM,
)


def build_metric(
    name,
    provider=None,
    n_max=NGRAM_MAX,
    stopwords=None,
    containment_weight=CONTAINMENT_WEIGHT,
    contained_weight=CONTAINED_WEIGHT,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Create a named metric.

    Args:
        name: One of METRIC_NAMES
        provider: EmbeddingProvider for the similarity metrics. None uses
            the hashing fallback
        n_max: Largest n for n-gram coverage
        stopwords: Stopword set for term recognition, None for the
            packaged list
        containment_weight: Term score bonus per containing candidate
        contained_weight: Term score bonus per contained candidate
        min_length: Shortest repeating sequence for the repetition loop
        min_repeats: Fewest repeats for the repetition loop

    Returns:
        result: Metric

    """
    # Initialize key variables
    if provider is None:
        provider = HashingEmbeddingProvider()
    checker = {"min_length": min_length, "min_repeats": min_repeats}

    # Select
    if name == RULE_CHECKER:
        result = Metric(
            name=name,
            functions={Task.NEXT_CLAIM: partial(_rule_checker, **checker)},
            description="Rule-based checker score of the next claim",
        )
    elif name == TERM_COVERAGE:
        result = Metric(
            name=name,
            functions={
                Task.CLAIMS2ABSTRACT: partial(
                    _term_coverage,
                    stopwords=stopwords,
                    containment_weight=containment_weight,
                    contained_weight=contained_weight,
                )
            },
            description="Share of claim terms found in the abstract",
        )
    elif name == NGRAM_COVERAGE:
        result = Metric(
            name=name,
            functions={
                Task.CLAIMS2ABSTRACT: partial(_ngram_coverage, n_max=n_max)
            },
            description="Mean n-gram coverage of the claims by the abstract",
        )
    elif name == SEMSIM:
        result = Metric(
            name=name,
            functions={
                Task.CLAIMS2ABSTRACT: partial(
                    _semsim_abstract, provider=provider
                ),
                Task.NEXT_CLAIM: partial(
                    _semsim_next_claim, provider=provider
                ),
            },
            description="Cosine similarity of the embeddings",
        )
    elif name == WEIGHTED_SEMSIM:
        result = Metric(
            name=name,
            functions={
                Task.NEXT_CLAIM: partial(
                    _weighted_semsim, provider=provider, **checker
                )
            },
            description="Similarity weighted by the rule-based checker",
        )
    else:
        raise HarnessError(
            'Unknown metric "{}", use one of: {}'.format(
                name, ", ".join(METRIC_NAMES)
            )
        )

    # Return
    return result


def build_metrics(names, **kwargs):
    """Create several named metrics.

    Args:
        names: List of metric names
        kwargs: Keyword arguments for build_metric

    Returns:
        result: List of Metric in the order given

    """
    # Return
    result = [build_metric(_, **kwargs) for _ in names]
    return result


def _rule_checker(input_claims, output, required_kind, **kwargs):
    """Score a next claim with the rule-based checker."""
    # Return
    result = metrics.rule_checker_score(
        parser.segment_claims(input_claims),
        output,
        _required(required_kind),
        **kwargs
    ).score
    return result


def _term_coverage(
    input_claims, output, _required_kind, stopwords=None, **kwargs
):
    """Get term coverage of an abstract."""
    # Return
    result = metrics.term_coverage(
        extract.unique_terms(
            input_claims, stopwords=stopwords, source=SOURCE_CLAIMS, **kwargs
        ),
        extract.unique_terms(
            output, stopwords=stopwords, source=SOURCE_ABSTRACT, **kwargs
        ),
    )
    return result


def _ngram_coverage(input_claims, output, _required_kind, n_max=NGRAM_MAX):
    """Get n-gram coverage of an abstract."""
    return metrics.ngram_coverage(input_claims, output, n_max=n_max)


def _semsim_abstract(input_claims, output, _required_kind, provider=None):
    """Get the raw cosine of an abstract against its claims."""
    return metrics.semsim_abstract(input_claims, output, provider).raw


def _semsim_next_claim(input_claims, output, _required_kind, provider=None):
    """Get the raw cosine of the claims before and after a next claim."""
    # Return
    result = metrics.semsim_next_claim(
        parser.segment_claims(input_claims), output, provider
    ).raw
    return result


def _weighted_semsim(
    input_claims, output, required_kind, provider=None, **kwargs
):
    """Weight next-claim similarity by the rule-based checker score."""
    # Initialize key variables
    context = parser.segment_claims(input_claims)

    # Return
    result = metrics.weighted_score(
        metrics.semsim_next_claim(context, output, provider),
        metrics.rule_checker_score(
            context, output, _required(required_kind), **kwargs
        ),
    )
    return result


def _required(required_kind):
    """Check that a next-claim pair names the required claim kind.

    Args:
        required_kind: ClaimKind or None

    Returns:
        required_kind: ClaimKind

    """
    if required_kind is None:
        raise ScoringError("The pair does not name the required claim kind")
    return required_kind
