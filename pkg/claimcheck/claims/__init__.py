"""Typed structure of a patent claim set."""

# Standard imports
from collections import namedtuple
from enum import Enum


class ClaimKind(Enum):
    """Independent or dependent claim."""

    INDEPENDENT = "independent"
    DEPENDENT = "dependent"


class RefForm(Enum):
    """Form of a reference to earlier claims."""

    SINGLE = "single"
    MULTIPLE_ALTERNATIVE = "multiple_alternative"
    MULTIPLE_CONJUNCTIVE = "multiple_conjunctive"


class TransitionKind(Enum):
    """Transitional phrase between preamble and body."""

    COMPRISING = "comprising"
    CONSISTING_OF = "consisting_of"
    CONSISTING_ESSENTIALLY_OF = "consisting_essentially_of"
    OTHER = "other"


# Transition found in a claim. text is verbatim, start and end index raw_text
Transition = namedtuple("Transition", "kind text start end")

DependencyRef = namedtuple("DependencyRef", "targets form source_span")

ParsedClaim = namedtuple(
    "ParsedClaim",
    "number raw_text preamble transition body_elements refs kind",
)

ClaimSet = namedtuple("ClaimSet", "claims source_text")

# Choice made while following a multiple reference up the ancestry
AncestryChoice = namedtuple("AncestryChoice", "number candidates chosen")


def claim_kind(value):
    """Convert a string to a ClaimKind.

    Args:
        value: ClaimKind, "independent" or "dependent" in any case

    Returns:
        result: ClaimKind, None if value is None

    """
    # Process
    if value is None or isinstance(value, ClaimKind):
        return value
    result = ClaimKind(str(value).strip().lower())
    return result
