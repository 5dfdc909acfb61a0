"""Patent records and human annotation pairs."""

# Standard imports
from collections import namedtuple
from enum import Enum

# IPC section letters
IPC_SECTIONS = frozenset("ABCDEFGH")


class Task(Enum):
    """Generation task of an annotated pair."""

    CLAIMS2ABSTRACT = "claims2abstract"
    NEXT_CLAIM = "next_claim"


class PreferenceLabel(Enum):
    """Pairwise preference between output A and output B."""

    PREFER_A = "a"
    PREFER_B = "b"
    TIE = "tie"

    @property
    def ordinal(self):
        """Get the ordinal used for rank correlation.

        Args:
            None

        Returns:
            result: +1 for PREFER_A, -1 for PREFER_B, 0 for TIE

        """
        # Return
        result = {"a": 1, "b": -1, "tie": 0}[self.value]
        return result

    def flip(self):
        """Swap the preferred side.

        Args:
            None

        Returns:
            result: PreferenceLabel

        """
        # Return
        if self is PreferenceLabel.PREFER_A:
            return PreferenceLabel.PREFER_B
        if self is PreferenceLabel.PREFER_B:
            return PreferenceLabel.PREFER_A
        return self


PatentRecord = namedtuple(
    "PatentRecord", "id claims_text abstract_text ipc_section granted"
)

AnnotatedPair = namedtuple(
    "AnnotatedPair",
    "pair_id task input_claims output_a output_b human_label required_kind "
    "error_labels_a error_labels_b model_a model_b",
    defaults=(None, frozenset(), frozenset(), None, None),
)
