"""Run the detectors over a candidate claim or an abstract."""

# Application imports
from claimcheck import (
    ABSTRACT_WORD_LIMIT,
    COPY_RATIO_THRESHOLD,
    REPETITION_MIN_LENGTH,
    REPETITION_MIN_REPEATS,
)
from claimcheck.core import log
from claimcheck.core.errors import AncestryError, ClaimParseError
from claimcheck.claims import ClaimKind
from claimcheck.claims import parser
from claimcheck.lint import ErrorType, Severity
from claimcheck.lint import detectors


def lint_next_claim(
    context,
    candidate,
    required=None,
    lexicon=None,
    stopwords=None,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Lint a generated next claim against the claims it follows.

    Args:
        context: ClaimSet of the input claims
        candidate: ParsedClaim of the generated claim
        required: ClaimKind the instruction asked for, None to skip the
            compliance check
        lexicon: Vagueness terms, None for the packaged lexicon
        stopwords: Stopwords ending noun phrases, None for the packaged list
        min_length: Shortest repeating sequence for the repetition loop
        min_repeats: Fewest repeats for the repetition loop

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    (chain, root) = _chain(context, candidate)

    # Run every detector, in order
    result.extend(
        detectors.check_repetition(
            candidate.raw_text,
            error=ErrorType.GRAMMATICAL_INACCURACY,
            min_length=min_length,
            min_repeats=min_repeats,
        )
    )
    result.extend(detectors.check_punctuation(candidate))
    result.extend(detectors.check_numbering(context, candidate))
    result.extend(detectors.check_dependency(context, candidate, required))
    result.extend(
        detectors.check_distinctiveness(context, candidate.raw_text)
    )
    result.extend(detectors.check_antecedent_basis(chain, stopwords=stopwords))
    result.extend(detectors.check_claim_body(candidate))
    result.extend(detectors.check_vagueness(candidate, lexicon=lexicon))
    result.extend(detectors.check_terminology(candidate, stopwords=stopwords))
    if root is not None:
        result.extend(
            detectors.check_preamble(root, candidate, stopwords=stopwords)
        )

    # Log
    log.log2debug(
        1024,
        "Claim {} has {} diagnostic(s)".format(candidate.number, len(result)),
    )

    # Return
    return result


def lint_abstract(
    claims,
    abstract,
    word_limit=ABSTRACT_WORD_LIMIT,
    copy_threshold=COPY_RATIO_THRESHOLD,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Lint an abstract written from a claim set.

    Args:
        claims: Raw claim-set text
        abstract: Raw abstract text
        word_limit: Largest allowed word count
        copy_threshold: Smallest verbatim-copy ratio that fires
        min_length: Shortest repeating sequence for the repetition loop
        min_repeats: Fewest repeats for the repetition loop

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []

    # Compare against each claim, or the whole text if it won't segment
    try:
        sources = parser.segment_claims(claims).claims
    except ClaimParseError:
        sources = [claims]

    result.extend(detectors.check_word_count(abstract, limit=word_limit))
    result.extend(
        detectors.check_verbatim_copy(
            sources, abstract, threshold=copy_threshold
        )
    )
    result.extend(
        detectors.check_repetition(
            abstract,
            error=ErrorType.GRAMMATICAL_ERRORS,
            min_length=min_length,
            min_repeats=min_repeats,
        )
    )

    # Return
    return result


def has_errors(diagnostics):
    """Determine whether any diagnostic has Error severity.

    Args:
        diagnostics: List of Diagnostic

    Returns:
        result: True if so

    """
    # Return
    result = any(_.severity is Severity.ERROR for _ in diagnostics)
    return result


def diagnostic_to_dict(diagnostic):
    """Convert a Diagnostic to a JSON-ready dict.

    Args:
        diagnostic: Diagnostic

    Returns:
        result: dict

    """
    # Return
    result = {
        "error": diagnostic.error.value,
        "severity": diagnostic.severity.value,
        "start": diagnostic.span.start,
        "end": diagnostic.span.end,
        "message": diagnostic.message,
        "detector": diagnostic.detector,
    }
    return result


def _chain(context, candidate):
    """Get the dependency chain ending with the candidate.

    Args:
        context: ClaimSet
        candidate: ParsedClaim

    Returns:
        result: Tuple of (list of ParsedClaim root first ending with the
            candidate, root ParsedClaim or None if the chain could not be
            followed)

    """
    # Independent claims stand alone
    if candidate.kind is ClaimKind.INDEPENDENT:
        return ([candidate], candidate)

    # Follow the lowest target through the context
    targets = set()
    for ref in candidate.refs:
        targets.update(ref.targets)
    target = min(targets)
    try:
        if target >= candidate.number:
            raise AncestryError(
                "Claim {} refers forward to claim {}".format(
                    candidate.number, target
                )
            )
        ancestry = parser.claim_ancestry(context, target)
    except AncestryError as error:
        log.log2debug(
            1025, "Using all claims as antecedents: {}".format(error)
        )
        return (list(context.claims) + [candidate], None)

    # Return
    result = (ancestry + [candidate], ancestry[0])
    return result
