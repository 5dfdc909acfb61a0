"""Quantitative metrics for generated abstracts and claims."""

# Standard imports
from collections import namedtuple

RuleCheckerResult = namedtuple(
    "RuleCheckerResult",
    "distinctive no_repetition punctuation_ok numbering_ok dependency_ok "
    "score",
)

# raw is the cosine in [-1, 1], value maps it to [0, 1]
Similarity = namedtuple("Similarity", "raw value")
