"""Detectors for the machine-checkable part of the error typology.

Every detector is total: it returns a possibly empty list of Diagnostic
and never raises on odd input. Spans index the text being inspected,
which is the claim's raw_text for claim detectors and the abstract for
abstract detectors.

"""

# Standard imports
import difflib
import functools
import re

# PIP3 libraries
import numpy as np

# Application imports
from claimcheck import (
    Span,
    VAGUENESS_FILE,
    ABSTRACT_WORD_LIMIT,
    COPY_RATIO_THRESHOLD,
    REPETITION_MIN_LENGTH,
    REPETITION_MIN_REPEATS,
)
from claimcheck.core import general
from claimcheck.core import files
from claimcheck.claims import ClaimKind, RefForm, TransitionKind
from claimcheck.claims.parser import CLAIM_NUMBER, ABBREVIATIONS
from claimcheck.lint import ErrorType, Severity, Diagnostic
from claimcheck.terms.extract import load_stopwords

# Article forms
INTRODUCERS = [("a",), ("an",), ("at", "least", "one"), ("one", "or", "more")]
REFERRERS = frozenset(["the", "said"])

# Tokens that end a noun phrase
VERBS = frozenset(
    [
        "is",
        "are",
        "was",
        "were",
        "be",
        "been",
        "being",
        "has",
        "have",
        "had",
        "having",
        "comprises",
        "comprise",
        "comprising",
        "includes",
        "include",
        "including",
        "contains",
        "containing",
        "consists",
        "consisting",
        "defines",
        "forms",
        "extends",
        "receives",
        "wherein",
        "whereby",
        "which",
        "that",
        "configured",
        "adapted",
        "operable",
        "can",
        "may",
        "must",
        "will",
        "shall",
    ]
)
PHRASE_SUFFIXES = ("ed", "ing", "ly")
MAX_PHRASE_WORDS = 6
_PHRASE_END = ",;:."

_SENTENCE_BREAK = re.compile(r"\.(?=\s+[A-Z])")

# Detector identifiers
REPETITION_LOOP = "repetition-loop"
PUNCTUATION = "punctuation"
NUMBERING = "numbering"
DEPENDENCY_COMPLIANCE = "dependency-compliance"
DEPENDENCY_CLARITY = "dependency-clarity"
DISTINCTIVENESS = "distinctiveness"
ANTECEDENT_BASIS = "antecedent-basis"
TRANSITIONAL_PHRASE = "transitional-phrase"
CLAIM_BODY = "claim-body"
VAGUENESS = "vagueness"
TERMINOLOGY = "said-the-consistency"
PREAMBLE = "preamble"
WORD_COUNT = "word-count"
VERBATIM_COPY = "verbatim-copy"


def detect_repetition_loop(
    text,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Find the first region where a token sequence repeats back to back.

    Args:
        text: Text to inspect
        min_length: Shortest repeating sequence in tokens
        min_repeats: Fewest consecutive occurrences of the sequence

    Returns:
        result: Span of the region, None if there is none

    """
    # Initialize key variables
    spans = general.token_spans(text)
    keys = [general.strip_token(_.text) or _.text.casefold() for _ in spans]
    count = len(keys)
    min_length = max(1, int(min_length))
    min_repeats = max(2, int(min_repeats))

    codes = {}
    tokens = np.array(
        [codes.setdefault(_, len(codes)) for _ in keys], dtype=np.int64
    )

    # A length-L sequence starting at i repeats r times when tokens i and
    # i + L agree for (r - 1) * L consecutive positions
    first = None
    for length in range(min_length, count // min_repeats + 1):
        start = _first_run(
            tokens[:-length] == tokens[length:], (min_repeats - 1) * length
        )
        if start is not None and (first is None or start < first):
            first = start
    if first is None:
        return None

    # Pick the sequence length covering the most tokens
    covered = 0
    for length in range(min_length, (count - first) // min_repeats + 1):
        run = _leading_run(
            tokens[first : count - length] == tokens[first + length :]
        )
        repeats = 1 + run // length
        if repeats >= min_repeats:
            covered = max(covered, repeats * length)

    # Return
    result = Span(
        start=spans[first].start, end=spans[first + covered - 1].end
    )
    return result


def _first_run(matches, minimum):
    """Find the first run of at least minimum True values.

    Args:
        matches: Boolean numpy array
        minimum: Shortest run length

    Returns:
        result: Index where the run starts, None if there is none

    """
    # Find run boundaries
    edges = np.diff(np.concatenate(([0], matches.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    long = starts[ends - starts >= minimum]

    # Return
    if bool(long.size) is False:
        return None
    return int(long[0])


def _leading_run(matches):
    """Count the True values at the start of a boolean numpy array."""
    if bool(matches.all()) is True:
        return int(matches.size)
    return int(np.argmin(matches))


def check_repetition(
    text,
    error=ErrorType.GRAMMATICAL_INACCURACY,
    min_length=REPETITION_MIN_LENGTH,
    min_repeats=REPETITION_MIN_REPEATS,
):
    """Report a hallucinated repetition loop.

    Args:
        text: Text to inspect
        error: ErrorType to report
        min_length: Shortest repeating sequence in tokens
        min_repeats: Fewest consecutive occurrences of the sequence

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []

    span = detect_repetition_loop(
        text, min_length=min_length, min_repeats=min_repeats
    )
    if span is not None:
        result.append(
            Diagnostic(
                error=error,
                span=span,
                severity=Severity.ERROR,
                message='Repeated token sequence "{}"'.format(
                    _excerpt(text[span.start : span.end])
                ),
                detector=REPETITION_LOOP,
            )
        )

    # Return
    return result


def check_punctuation(claim):
    """Check the terminal period and mid-claim sentence breaks.

    Args:
        claim: ParsedClaim

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    text = claim.raw_text
    stripped = text.rstrip()
    offset = _number_offset(text)

    # Exactly one terminal period
    if stripped.endswith(".") is False or stripped.endswith("..") is True:
        result.append(
            Diagnostic(
                error=ErrorType.PUNCTUATION_DISCREPANCY,
                span=Span(start=max(0, len(stripped) - 1), end=len(stripped)),
                severity=Severity.ERROR,
                message="Claim must end with exactly one period",
                detector=PUNCTUATION,
            )
        )

    # No sentence breaks inside the claim
    for found in _SENTENCE_BREAK.finditer(text, offset, len(stripped) - 1):
        words = text[offset : found.end()].split()
        if bool(words) is True and words[-1].lower() in ABBREVIATIONS:
            continue
        result.append(
            Diagnostic(
                error=ErrorType.PUNCTUATION_DISCREPANCY,
                span=Span(start=found.start(), end=found.end()),
                severity=Severity.ERROR,
                message="Sentence-ending period inside the claim",
                detector=PUNCTUATION,
            )
        )

    # Return
    return result


def check_numbering(context, candidate):
    """Check the candidate follows the context consecutively.

    Args:
        context: ClaimSet
        candidate: ParsedClaim

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    expected = max([_.number for _ in context.claims], default=0) + 1

    if candidate.number != expected:
        found = CLAIM_NUMBER.match(candidate.raw_text)
        if bool(found) is True:
            span = Span(start=found.start(1), end=found.end(1))
        else:
            span = _whole(candidate.raw_text)
        result.append(
            Diagnostic(
                error=ErrorType.CLAIM_NUMBERING_ERROR,
                span=span,
                severity=Severity.ERROR,
                message="Claim is numbered {}, expected {}".format(
                    candidate.number, expected
                ),
                detector=NUMBERING,
            )
        )

    # Return
    return result


def check_dependency(context, candidate, required):
    """Check the candidate's dependency against the instruction and context.

    Args:
        context: ClaimSet
        candidate: ParsedClaim
        required: ClaimKind the candidate must have, None to skip the check

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    numbers = set(_.number for _ in context.claims)

    # Compliance with the instruction
    if required is not None and candidate.kind != required:
        if bool(candidate.refs) is True:
            span = candidate.refs[0].source_span
        else:
            span = _whole(candidate.raw_text)
        result.append(
            Diagnostic(
                error=ErrorType.NON_COMPLIANT_DEPENDENCY,
                span=span,
                severity=Severity.ERROR,
                message="Claim is {}, the instruction requires {}".format(
                    candidate.kind.value, required.value
                ),
                detector=DEPENDENCY_COMPLIANCE,
            )
        )

    # Clarity of each reference
    for ref in candidate.refs:
        bad = sorted(
            _ for _ in ref.targets if _ >= candidate.number or _ not in numbers
        )
        if bool(bad) is True:
            result.append(
                Diagnostic(
                    error=ErrorType.DEPENDENCY_CLARITY_ERROR,
                    span=ref.source_span,
                    severity=Severity.ERROR,
                    message="Reference to claim(s) {} that do not precede "
                    "claim {}".format(
                        ", ".join(str(_) for _ in bad), candidate.number
                    ),
                    detector=DEPENDENCY_CLARITY,
                )
            )
        if ref.form is RefForm.MULTIPLE_CONJUNCTIVE:
            result.append(
                Diagnostic(
                    error=ErrorType.DEPENDENCY_CLARITY_ERROR,
                    span=ref.source_span,
                    severity=Severity.ERROR,
                    message="Multiple dependency is not in the alternative",
                    detector=DEPENDENCY_CLARITY,
                )
            )

    # Return
    return result


def distinctive_key(text):
    """Normalize claim text for repetition comparison.

    Args:
        text: Claim text

    Returns:
        result: Text without its number, case-folded, whitespace collapsed
            and without the terminal period

    """
    # Return
    text = text[_number_offset(text) :]
    result = general.normalize(text).rstrip(". ")
    return result


def check_distinctiveness(context, text):
    """Check the candidate doesn't repeat any context claim.

    Args:
        context: ClaimSet
        text: Raw candidate text

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    key = distinctive_key(text)

    for claim in context.claims:
        if distinctive_key(claim.raw_text) == key:
            result.append(
                Diagnostic(
                    error=ErrorType.NON_DISTINCTIVE_REPETITION,
                    span=_whole(text),
                    severity=Severity.ERROR,
                    message="Claim repeats claim {}".format(claim.number),
                    detector=DISTINCTIVENESS,
                )
            )
            break

    # Return
    return result


def check_antecedent_basis(chain, stopwords=None):
    """Check each "the X" / "said X" of the last claim has a basis.

    Args:
        chain: List of ParsedClaim, root first, ending with the claim to
            check
        stopwords: Set of stopwords ending noun phrases, None for the
            packaged list

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    if bool(chain) is False:
        return result
    stopwords = load_stopwords() if stopwords is None else stopwords
    phrases = set()
    heads = set()

    # Gather introductions from the ancestors
    for claim in chain[:-1]:
        for found in _noun_phrases(claim.raw_text, stopwords):
            if found.introduced is True:
                phrases.add(found.phrase)
                heads.add(found.head)

    # Check the last claim in textual order
    claim = chain[-1]
    for found in _noun_phrases(claim.raw_text, stopwords):
        if found.introduced is True:
            phrases.add(found.phrase)
            heads.add(found.head)
        elif found.phrase not in phrases and found.head not in heads:
            result.append(
                Diagnostic(
                    error=ErrorType.ANTECEDENT_REFERENCE_ERROR,
                    span=found.span,
                    severity=Severity.ERROR,
                    message='"{}" has no antecedent basis'.format(
                        claim.raw_text[found.span.start : found.span.end]
                    ),
                    detector=ANTECEDENT_BASIS,
                )
            )

    # Return
    return result


def check_transitional_phrase(claim):
    """Check an independent claim uses a lexicon transitional phrase.

    Args:
        claim: ParsedClaim

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    transition = claim.transition
    if claim.kind is not ClaimKind.INDEPENDENT:
        return result

    if transition is None:
        result.append(
            Diagnostic(
                error=ErrorType.TRANSITIONAL_PHRASE_ERROR,
                span=_whole(claim.raw_text),
                severity=Severity.ERROR,
                message="Independent claim has no transitional phrase",
                detector=TRANSITIONAL_PHRASE,
            )
        )
    elif transition.kind is TransitionKind.OTHER:
        result.append(
            Diagnostic(
                error=ErrorType.TRANSITIONAL_PHRASE_ERROR,
                span=Span(start=transition.start, end=transition.end),
                severity=Severity.ERROR,
                message='"{}" is not a standard transitional phrase'.format(
                    transition.text
                ),
                detector=TRANSITIONAL_PHRASE,
            )
        )

    # Return
    return result


def check_claim_body(claim):
    """Check the transition and body elements of an independent claim.

    Args:
        claim: ParsedClaim

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = check_transitional_phrase(claim)
    transition = claim.transition

    if (
        claim.kind is ClaimKind.INDEPENDENT
        and transition is not None
        and transition.kind is not TransitionKind.OTHER
        and len(claim.body_elements) < 2
    ):
        result.append(
            Diagnostic(
                error=ErrorType.CLAIM_BODY_DISCONNECTION,
                span=Span(start=transition.end, end=len(claim.raw_text)),
                severity=Severity.ERROR,
                message="Claim body has {} element(s), expected at least "
                "2".format(len(claim.body_elements)),
                detector=CLAIM_BODY,
            )
        )

    # Return
    return result


def load_lexicon(path=None):
    """Read a vagueness lexicon.

    Args:
        path: Lexicon file, one term per line. None for the packaged list

    Returns:
        result: Tuple of terms

    """
    # Return
    if path is None:
        return _default_lexicon()
    result = tuple(files.read_lines(path))
    return result


@functools.lru_cache(maxsize=None)
def _default_lexicon():
    """Read the packaged vagueness lexicon once.

    Args:
        None

    Returns:
        result: Tuple of terms

    """
    # Return
    result = tuple(files.read_lines(VAGUENESS_FILE))
    return result


def check_vagueness(claim, lexicon=None):
    """Report relative or vague terms.

    Args:
        claim: ParsedClaim
        lexicon: Iterable of terms, None for the packaged lexicon

    Returns:
        result: List of Diagnostic ordered by position

    """
    # Initialize key variables
    result = []
    text = claim.raw_text
    offset = _number_offset(text)
    lexicon = load_lexicon() if lexicon is None else lexicon

    # Build a single whole-word pattern, longest terms first
    terms = sorted(
        set(general.normalize(_) for _ in lexicon if bool(_.strip())),
        key=lambda _: (-len(_), _),
    )
    if bool(terms) is False:
        return result
    regex = re.compile(
        r"(?<![\w-])(?:{})(?![\w-])".format(
            "|".join(r"\s+".join(map(re.escape, _.split())) for _ in terms)
        ),
        re.IGNORECASE,
    )

    for found in regex.finditer(text, offset):
        result.append(
            Diagnostic(
                error=ErrorType.VAGUENESS,
                span=Span(start=found.start(), end=found.end()),
                severity=Severity.ADVISORY,
                message='Relative or vague term "{}"'.format(found.group(0)),
                detector=VAGUENESS,
            )
        )

    # Return
    return result


def check_terminology(claim, stopwords=None):
    """Check "said" and "the" are not mixed as referring articles.

    The leading article of the claim is not counted. When both forms
    occur, the less frequent one is flagged; on a tie "said" is flagged.

    Args:
        claim: ParsedClaim
        stopwords: Set of stopwords ending noun phrases, None for the
            packaged list

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    stopwords = load_stopwords() if stopwords is None else stopwords
    referring = {"said": [], "the": []}
    offset = _number_offset(claim.raw_text)

    for found in _noun_phrases(claim.raw_text, stopwords):
        if found.introduced is True or found.span.start <= _first_word(
            claim.raw_text, offset
        ):
            continue
        referring[found.article].append(found)

    # Flag the minority form
    if bool(referring["said"]) is False or bool(referring["the"]) is False:
        return result
    if len(referring["the"]) < len(referring["said"]):
        minority = "the"
        majority = "said"
    else:
        minority = "said"
        majority = "the"

    for found in referring[minority]:
        result.append(
            Diagnostic(
                error=ErrorType.TERMINOLOGICAL_INCONSISTENCY,
                span=found.span,
                severity=Severity.ADVISORY,
                message='"{}" mixes "{}" with the prevailing "{}"'.format(
                    claim.raw_text[found.span.start : found.span.end],
                    minority,
                    majority,
                ),
                detector=TERMINOLOGY,
            )
        )

    # Return
    return result


def check_preamble(root, claim, stopwords=None):
    """Check a dependent claim's subject matches its root claim's preamble.

    Args:
        root: ParsedClaim at the root of the dependency chain
        claim: Dependent ParsedClaim
        stopwords: Set of stopwords ending noun phrases, None for the
            packaged list

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    if claim.kind is not ClaimKind.DEPENDENT or root is claim:
        return result
    stopwords = load_stopwords() if stopwords is None else stopwords

    # Compare head nouns
    subject = _subject(claim.raw_text, stopwords)
    expected = _subject(root.raw_text, stopwords)
    if subject is None or expected is None:
        return result
    if subject.head != expected.head:
        result.append(
            Diagnostic(
                error=ErrorType.PREAMBLE_INCONSISTENCY,
                span=subject.span,
                severity=Severity.ADVISORY,
                message='Subject "{}" differs from "{}" of claim {}'.format(
                    claim.raw_text[subject.span.start : subject.span.end],
                    root.raw_text[expected.span.start : expected.span.end],
                    root.number,
                ),
                detector=PREAMBLE,
            )
        )

    # Return
    return result


def word_count(text):
    """Count whitespace-delimited words.

    Args:
        text: Text

    Returns:
        result: Number of words

    """
    # Return
    result = len(text.split())
    return result


def check_word_count(abstract, limit=ABSTRACT_WORD_LIMIT):
    """Check an abstract is within the word limit.

    Args:
        abstract: Abstract text
        limit: Largest allowed word count

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []
    words = word_count(abstract)

    if words > limit:
        result.append(
            Diagnostic(
                error=ErrorType.OVERLY_WORDY,
                span=_whole(abstract),
                severity=Severity.ERROR,
                message="Abstract has {} words, the limit is {}".format(
                    words, limit
                ),
                detector=WORD_COUNT,
            )
        )

    # Return
    return result


def copy_ratio(claim_text, abstract):
    """Measure how much of an abstract is copied from a claim.

    Args:
        claim_text: Claim text, with or without its number
        abstract: Abstract text

    Returns:
        result: Longest common token run divided by the abstract's token
            count, 0.0 for an empty abstract

    """
    # Initialize key variables
    claim_tokens = general.tokens(claim_text[_number_offset(claim_text) :])
    abstract_tokens = general.tokens(abstract)
    if bool(abstract_tokens) is False:
        return 0.0

    # Return
    matcher = difflib.SequenceMatcher(
        None, abstract_tokens, claim_tokens, autojunk=False
    )
    match = matcher.find_longest_match(
        0, len(abstract_tokens), 0, len(claim_tokens)
    )
    result = match.size / len(abstract_tokens)
    return result


def check_verbatim_copy(claims, abstract, threshold=COPY_RATIO_THRESHOLD):
    """Check an abstract doesn't replicate a single claim.

    Args:
        claims: List of ParsedClaim, or a list of raw claim strings
        abstract: Abstract text
        threshold: Smallest copy ratio that fires

    Returns:
        result: List of Diagnostic

    """
    # Initialize key variables
    result = []

    for claim in claims:
        text = getattr(claim, "raw_text", claim)
        ratio = copy_ratio(text, abstract)
        if ratio >= threshold:
            number = getattr(claim, "number", None)
            result.append(
                Diagnostic(
                    error=ErrorType.INEFFECTIVE_SUMMARIZATION,
                    span=_whole(abstract),
                    severity=Severity.ERROR,
                    message="{:.0%} of the abstract is copied from {}".format(
                        ratio,
                        "the claims" if number is None else "claim {}".format(
                            number
                        ),
                    ),
                    detector=VERBATIM_COPY,
                )
            )
            break

    # Return
    return result


class _Phrase:
    """Noun phrase following an article."""

    __slots__ = ("article", "introduced", "phrase", "head", "span")

    def __init__(self, article, introduced, words, span):
        """Initialize the class.

        Args:
            article: Article word, "a" for every introducing form
            introduced: True if the phrase is introduced
            words: List of phrase words
            span: Span of article and phrase

        Returns:
            None

        """
        self.article = article
        self.introduced = introduced
        self.phrase = " ".join(words[:-1] + [_fold(words[-1])])
        self.head = _fold(words[-1])
        self.span = span


def _noun_phrases(text, stopwords):
    """Find the noun phrases that follow articles.

    Args:
        text: Claim text
        stopwords: Set of stopwords

    Returns:
        result: List of _Phrase in textual order

    """
    # Initialize key variables
    result = []
    tokens = general.token_spans(text)
    keys = [general.strip_token(_.text) for _ in tokens]
    index = 0
    count = len(tokens)

    while index < count:
        # Find an article
        article = None
        width = 0
        if keys[index] in REFERRERS:
            (article, width) = (keys[index], 1)
        else:
            for form in INTRODUCERS:
                if tuple(keys[index : index + len(form)]) == form:
                    (article, width) = ("a", len(form))
                    break
        if article is None or _ends(tokens[index + width - 1].text):
            index += 1
            continue

        # Skip quantity words
        start = index + width
        if start < count and keys[start] == "of" and width > 1:
            start += 1
        if keys[start : start + 2] == ["plurality", "of"]:
            start += 2

        # Collect the phrase
        words = []
        position = start
        while position < count and len(words) < MAX_PHRASE_WORDS:
            key = keys[position]
            if (
                bool(key) is False
                or key in stopwords
                or key in VERBS
                or key.isdigit()
                or (bool(words) is True and key.endswith(PHRASE_SUFFIXES))
            ):
                break
            words.append(key)
            if _ends(tokens[position].text):
                position += 1
                break
            position += 1

        if bool(words) is True:
            last = tokens[start + len(words) - 1]
            end = last.start + len(last.text.rstrip(general.PUNCTUATION))
            result.append(
                _Phrase(
                    article=article,
                    introduced=article == "a",
                    words=words,
                    span=Span(start=tokens[index].start, end=end),
                )
            )
        index = max(index + 1, start)

    # Return
    return result


def _subject(text, stopwords):
    """Get the noun phrase naming the claimed subject.

    Args:
        text: Claim text
        stopwords: Set of stopwords

    Returns:
        result: First _Phrase of the claim, None if there is none

    """
    # Return
    offset = _number_offset(text)
    start = _first_word(text, offset)
    for found in _noun_phrases(text, stopwords):
        if found.span.start == start:
            return found
        break
    return None


def _fold(word):
    """Fold a plural head word.

    Args:
        word: Word

    Returns:
        result: Word without a trailing "s"

    """
    # Return
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def _ends(token):
    """Determine whether a token ends a phrase.

    Args:
        token: Raw token text

    Returns:
        result: True if the token ends with clause punctuation

    """
    # Return
    result = token.rstrip("\"')]").endswith(tuple(_PHRASE_END))
    return result


def _number_offset(text):
    """Get the index after a leading claim number.

    Args:
        text: Claim text

    Returns:
        result: Index, 0 when there is no number

    """
    # Return
    found = CLAIM_NUMBER.match(text)
    result = found.end() if bool(found) is True else 0
    return result


def _first_word(text, offset):
    """Get the index of the first word at or after an offset.

    Args:
        text: Text
        offset: Index

    Returns:
        result: Index

    """
    # Return
    found = re.compile(r"\S").search(text, offset)
    result = found.start() if bool(found) is True else len(text)
    return result


def _whole(text):
    """Get the span of a whole text.

    Args:
        text: Text

    Returns:
        result: Span

    """
    return Span(start=0, end=len(text))


def _excerpt(text, limit=60):
    """Shorten text for messages.

    Args:
        text: Text
        limit: Maximum characters

    Returns:
        result: Excerpt

    """
    # Return
    text = general.cleanstring(text)
    if len(text) <= limit:
        return text
    result = "{}...".format(text[: limit - 3])
    return result
