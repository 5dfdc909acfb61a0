"""Automatic term recognition."""

# Standard imports
from collections import namedtuple

TermCandidate = namedtuple(
    "TermCandidate", "text frequency length_words score"
)
TermSet = namedtuple("TermSet", "terms source")

# TermSet sources
SOURCE_CLAIMS = "claims"
SOURCE_ABSTRACT = "abstract"
