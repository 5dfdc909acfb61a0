"""Module with general purpose functions."""

import re
import string
from collections import namedtuple

# PIP3 libraries
import more_itertools as mit

# Edge punctuation stripped from tokens
PUNCTUATION = string.punctuation + "–—“”‘’"

Token = namedtuple("Token", "text start end")


def cleanstring(data):
    """Remove multiple whitespaces and linefeeds from string.

    Args:
        data: String to process

    Returns:
        result: Stipped data

    """
    # Initialize key variables
    nolinefeeds = data.replace("\n", " ").replace("\r", "").strip()
    words = nolinefeeds.split()
    result = " ".join(words)

    # Return
    return result


def make_bool(result):
    """Create a boolean version of the argument.

    Args:
        result: Object to transform

    Returns:
        result: boolean

    """
    # Process
    if result is None:
        result = False
    elif result is False:
        pass
    elif isinstance(result, str):
        if result.lower() == "none":
            result = False
        elif result.lower() == "false":
            result = False
        elif result.lower() == "true":
            result = True
    return bool(result)


def normalize(data):
    """Case-fold a string and collapse its whitespace.

    Args:
        data: String to process

    Returns:
        result: Normalized string

    """
    # Return
    result = cleanstring(data).casefold()
    return result


def token_spans(data):
    """Split a string on whitespace keeping character offsets.

    Args:
        data: String to process

    Returns:
        result: List of Token namedtuples

    """
    # Return
    result = [
        Token(text=match.group(0), start=match.start(), end=match.end())
        for match in re.finditer(r"\S+", data)
    ]
    return result


def strip_token(token):
    """Case-fold a token and strip punctuation from its edges.

    Args:
        token: Token string

    Returns:
        result: Stripped token, possibly empty

    """
    # Return
    result = token.casefold().strip(PUNCTUATION)
    return result


def tokens(data):
    """Tokenize a string for coverage and similarity metrics.

    Tokens are whitespace delimited, case-folded and have punctuation
    stripped at their edges. Tokens that are pure punctuation are dropped.

    Args:
        data: String to process

    Returns:
        result: List of tokens

    """
    # Process
    result = [strip_token(_) for _ in data.split()]
    result = [_ for _ in result if bool(_) is True]

    # Return
    return result


def ngrams(items, size):
    """Create the set of unique n-grams of a token list.

    Args:
        items: List of tokens
        size: n-gram length

    Returns:
        result: Set of tuples, empty when items is shorter than size

    """
    # Nothing to do
    if size < 1 or len(items) < size:
        return set()

    # Return
    result = set(mit.windowed(items, size))
    return result
