"""Extract and rank multi-word terms.

Candidates are stopword-delimited chunks rather than part-of-speech
patterns. Ranking follows the combo_basic family: a C-value style
length/frequency term plus bonuses for nesting with other candidates.

"""

# Standard imports
import functools
import math
import re
from collections import Counter

# PIP3 libraries
import more_itertools as mit

# Application imports
from claimcheck import (
    STOPWORDS_FILE,
    CONTAINMENT_WEIGHT,
    CONTAINED_WEIGHT,
    MAX_TERM_WORDS,
)
from claimcheck.core import files
from claimcheck.terms import TermCandidate, TermSet, SOURCE_CLAIMS

# Words with internal hyphens or apostrophes, or single punctuation marks
WORD_REGEX = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*|[^\w\s]")

# Claim-reference words never belong to a term
CLAIM_WORDS = frozenset(["claim", "claims"])


def load_stopwords(path=None):
    """Read a stopword list.

    Args:
        path: Stopword file, one token per line. None for the packaged list

    Returns:
        result: frozenset of case-folded stopwords

    """
    # Return
    if path is None:
        return _default_stopwords()
    result = frozenset(files.read_lines(path))
    return result


@functools.lru_cache(maxsize=None)
def _default_stopwords():
    """Read the packaged stopword list once.

    Args:
        None

    Returns:
        result: frozenset of stopwords

    """
    # Return
    result = frozenset(files.read_lines(STOPWORDS_FILE))
    return result


def extract_candidates(text, stopwords=None, max_words=MAX_TERM_WORDS):
    """Find term candidates.

    Args:
        text: Source text
        stopwords: Set of stopwords, None for the packaged list
        max_words: Longest candidate in words. Longer runs are split into
            consecutive chunks of at most this many words

    Returns:
        result: List of TermCandidate in order of first appearance, with
            score 0.0

    """
    # Initialize key variables
    stopwords = load_stopwords() if stopwords is None else stopwords
    runs = []
    run = []

    # Break the text into maximal runs of content words
    for token in WORD_REGEX.findall(text):
        word = token.casefold()
        if _breaks(word, stopwords) is True:
            if bool(run) is True:
                runs.append(run)
            run = []
        else:
            run.append(word)
    if bool(run) is True:
        runs.append(run)

    # Count chunks
    counts = Counter()
    for run in runs:
        for chunk in mit.chunked(run, max(1, int(max_words))):
            counts[" ".join(chunk)] += 1

    # Return
    result = [
        TermCandidate(
            text=term,
            frequency=frequency,
            length_words=len(term.split()),
            score=0.0,
        )
        for term, frequency in counts.items()
    ]
    return result


def score_candidates(
    candidates,
    containment_weight=CONTAINMENT_WEIGHT,
    contained_weight=CONTAINED_WEIGHT,
):
    """Score and rank term candidates.

    score = length * ln(frequency + 1)
            + containment_weight * (candidates containing the term)
            + contained_weight * (candidates contained in the term)

    Args:
        candidates: List of TermCandidate
        containment_weight: Bonus per longer candidate containing a term
        contained_weight: Bonus per shorter candidate inside a term

    Returns:
        result: List of TermCandidate sorted by descending score, ties
            broken by text

    """
    # Initialize key variables
    result = []
    padded = [" {} ".format(_.text) for _ in candidates]

    for index, candidate in enumerate(candidates):
        containing = 0
        contained = 0
        for other, text in enumerate(padded):
            if other == index or candidates[other].text == candidate.text:
                continue
            if padded[index] in text:
                containing += 1
            elif text in padded[index]:
                contained += 1
        score = (
            candidate.length_words * math.log(candidate.frequency + 1)
            + containment_weight * containing
            + contained_weight * contained
        )
        result.append(candidate._replace(score=score))

    # Return
    result.sort(key=lambda _: (-_.score, _.text))
    return result


def unique_terms(
    text,
    top_k=None,
    stopwords=None,
    source=SOURCE_CLAIMS,
    containment_weight=CONTAINMENT_WEIGHT,
    contained_weight=CONTAINED_WEIGHT,
):
    """Get the set of unique terms of a text.

    Args:
        text: Source text
        top_k: Number of best-ranked terms to keep. None keeps every term
            with a positive score
        stopwords: Set of stopwords, None for the packaged list
        source: TermSet source tag
        containment_weight: Bonus per longer candidate containing a term
        contained_weight: Bonus per shorter candidate inside a term

    Returns:
        result: TermSet

    """
    # Rank
    ranked = score_candidates(
        extract_candidates(text, stopwords=stopwords),
        containment_weight=containment_weight,
        contained_weight=contained_weight,
    )
    if top_k is None:
        ranked = [_ for _ in ranked if _.score > 0]
    else:
        ranked = ranked[: max(0, int(top_k))]

    # Return
    result = TermSet(terms=frozenset(_.text for _ in ranked), source=source)
    return result


def _breaks(word, stopwords):
    """Determine whether a token ends a candidate run.

    Args:
        word: Case-folded token
        stopwords: Set of stopwords

    Returns:
        result: True if so

    """
    # Return
    result = (
        word in stopwords
        or word in CLAIM_WORDS
        or re.fullmatch(r"[^\w]", word) is not None
        or word.isdigit()
    )
    return result
