#!/usr/bin/env python3
"""claimcheck setup.

Manages parameters required by all classes in the module.

"""

# Standard imports
from collections import namedtuple
import os

# Application name used for loggers, environment variables and files
APP_NAME = "claimcheck"

# Packaged data
DATA_DIRECTORY = "{}{}data".format(
    os.path.dirname(os.path.realpath(__file__)), os.sep
)
SCHEMA_DIRECTORY = "{}{}schemas".format(
    os.path.dirname(os.path.realpath(__file__)), os.sep
)
STOPWORDS_FILE = "{}{}stopwords.txt".format(DATA_DIRECTORY, os.sep)
VAGUENESS_FILE = "{}{}vagueness.txt".format(DATA_DIRECTORY, os.sep)

# Lint defaults
ABSTRACT_WORD_LIMIT = 150
COPY_RATIO_THRESHOLD = 0.8
REPETITION_MIN_LENGTH = 3
REPETITION_MIN_REPEATS = 3

# Term recognition defaults
CONTAINMENT_WEIGHT = 0.75
CONTAINED_WEIGHT = 0.1
MAX_TERM_WORDS = 6

# Scorer defaults
NGRAM_MAX = 4
EMBEDDING_DIMENSION = 1024
EMBEDDER_TIMEOUT = 30
EMBEDDER_RETRIES = 3

# Harness defaults
TAU_VARIANT = "tau-b"
TIE_EPSILON = 0.0

# Important tuples
Span = namedtuple("Span", "start end")
LineError = namedtuple("LineError", "line message")
Ingested = namedtuple("Ingested", "items errors")
