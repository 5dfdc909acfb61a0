"""Error typology and diagnostics for claims and abstracts."""

# Standard imports
import re
from collections import namedtuple
from enum import Enum


class ErrorType(Enum):
    """Closed set of abstract and claim error labels.

    The value of each member is the label used in annotation files.

    """

    # Abstract errors
    GRAMMATICAL_ERRORS = "Grammatical Errors"
    IRRELEVANT_CONTENT = "Irrelevant Content"
    INCOMPLETE_COVERAGE = "Incomplete Coverage"
    OVERLY_WORDY = "Overly Wordy or Lengthy"
    CONTRADICTORY_INFORMATION = "Contradictory Information"
    UNCLARITY = "Unclarity"
    INEFFECTIVE_SUMMARIZATION = "Ineffective Summarization"

    # Claim errors
    GRAMMATICAL_INACCURACY = "Grammatical Inaccuracy"
    PUNCTUATION_DISCREPANCY = "Punctuation Discrepancy"
    CLAIM_NUMBERING_ERROR = "Claim Numbering Error"
    PREAMBLE_INCONSISTENCY = "Preamble Inconsistency Error"
    TRANSITIONAL_PHRASE_ERROR = "Transitional Phrase Error"
    CLAIM_BODY_DISCONNECTION = "Claim Body Disconnection"
    NON_COMPLIANT_DEPENDENCY = "Non-compliant Dependency with instruction"
    DEPENDENCY_CLARITY_ERROR = "Dependency Clarity Error"
    BROAD_SCOPE_DEPENDENT_CLAIM = "Broad Scope Dependent Claims"
    INSUFFICIENT_DIFFERENTIATION = (
        "Insufficient Differentiation of Independent Claims"
    )
    VAGUENESS = "Vagueness"
    ANTECEDENT_REFERENCE_ERROR = "Antecedent Reference Errors"
    TERMINOLOGICAL_INCONSISTENCY = "Terminological Inconsistency"
    WISHFUL_CLAIMING = "Wishful Claiming"
    VERBOSE_REDUNDANCY = "Verbose Redundancy"
    SUB_OPTIMAL_CLAIM_STRUCTURE = "Sub-Optimal Claim Structure"
    IRRELEVANT_MATTER = "Irrelevant Matter Introduction"
    CONTRADICTORY_CLAIMS = "Contradictory Claims"
    NON_DISTINCTIVE_REPETITION = "Non-Distinctive Claim Repetition"


class Severity(Enum):
    """Severity of a diagnostic."""

    ERROR = "error"
    ADVISORY = "advisory"


Diagnostic = namedtuple("Diagnostic", "error span severity message detector")

ABSTRACT_ERRORS = frozenset(
    [
        ErrorType.GRAMMATICAL_ERRORS,
        ErrorType.IRRELEVANT_CONTENT,
        ErrorType.INCOMPLETE_COVERAGE,
        ErrorType.OVERLY_WORDY,
        ErrorType.CONTRADICTORY_INFORMATION,
        ErrorType.UNCLARITY,
        ErrorType.INEFFECTIVE_SUMMARIZATION,
    ]
)
CLAIM_ERRORS = frozenset(_ for _ in ErrorType if _ not in ABSTRACT_ERRORS)

# Alternative spellings seen in annotation exports
_ALIASES = {
    "overlywordy": ErrorType.OVERLY_WORDY,
    "preambleinconsistency": ErrorType.PREAMBLE_INCONSISTENCY,
    "noncompliantdependency": ErrorType.NON_COMPLIANT_DEPENDENCY,
    "broadscopedependentclaim": ErrorType.BROAD_SCOPE_DEPENDENT_CLAIM,
    "insufficientdifferentiation": ErrorType.INSUFFICIENT_DIFFERENTIATION,
    "antecedentreferenceerror": ErrorType.ANTECEDENT_REFERENCE_ERROR,
    "irrelevantmatter": ErrorType.IRRELEVANT_MATTER,
    "nondistinctiverepetition": ErrorType.NON_DISTINCTIVE_REPETITION,
    "nondistinctiveclaimrepetitions": ErrorType.NON_DISTINCTIVE_REPETITION,
    "suboptimalclaimstructure": ErrorType.SUB_OPTIMAL_CLAIM_STRUCTURE,
}


def _key(value):
    """Create a lookup key for a label.

    Args:
        value: Label string

    Returns:
        result: Case-folded label with non-alphanumerics removed

    """
    # Return
    result = re.sub(r"[^0-9a-z]", "", str(value).casefold())
    return result


_LABELS = {}
for _member in ErrorType:
    _LABELS[_key(_member.value)] = _member
    _LABELS[_key(_member.name)] = _member
_LABELS.update(_ALIASES)


def error_type(label):
    """Look up an ErrorType by annotation label.

    Matching ignores case and punctuation. Member names such as
    "CLAIM_NUMBERING_ERROR" are also accepted.

    Args:
        label: Label string or ErrorType

    Returns:
        result: ErrorType, None if the label is unknown

    """
    # Process
    if isinstance(label, ErrorType):
        return label
    result = _LABELS.get(_key(label))
    return result
