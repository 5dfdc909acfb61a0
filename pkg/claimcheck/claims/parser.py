"""Parse raw claim text into a typed claim set.

Claims are split at line-initial or sentence-initial "<integer>." markers.
Each claim is then decomposed into preamble, transitional phrase and body
elements, and its references to earlier claims are extracted.

"""

# Standard imports
import re

# Application imports
from claimcheck import Span
from claimcheck.core import log
from claimcheck.core import general
from claimcheck.core.errors import ClaimParseError, AncestryError
from claimcheck.claims import (
    ClaimKind,
    RefForm,
    TransitionKind,
    Transition,
    DependencyRef,
    ParsedClaim,
    ClaimSet,
    AncestryChoice,
)

_FLAGS = re.IGNORECASE | re.ASCII

# Claim numbers at the start of a line or after a sentence-ending period
CLAIM_START = re.compile(r"(?:^[ \t]*|(?<=\.)[ \t]+)(\d+)\.(?=\s)", re.M)
CLAIM_NUMBER = re.compile(r"\s*(\d+)\s*\.")

# Words ending in a period that don't end a sentence
ABBREVIATIONS = frozenset(
    [
        "e.g.",
        "i.e.",
        "etc.",
        "fig.",
        "figs.",
        "no.",
        "nos.",
        "eq.",
        "approx.",
        "ref.",
        "vol.",
        "wt.",
        "vs.",
        "cf.",
        "al.",
        "ca.",
        "max.",
        "min.",
    ]
)

# Ordered by specificity. Same-position matches prefer the longest phrase.
TRANSITIONS = [
    (
        r"consisting\s+essentially\s+of",
        TransitionKind.CONSISTING_ESSENTIALLY_OF,
    ),
    (r"consisting\s+of", TransitionKind.CONSISTING_OF),
    (r"comprising", TransitionKind.COMPRISING),
    (r"comprises", TransitionKind.COMPRISING),
    (r"including", TransitionKind.COMPRISING),
    (r"containing", TransitionKind.COMPRISING),
    (r"having", TransitionKind.COMPRISING),
    (r"characteri[sz]ed\s+by", TransitionKind.COMPRISING),
]
TRANSITION_REGEX = re.compile(
    r"\b(?:{})\b".format("|".join(_[0] for _ in TRANSITIONS)), _FLAGS
)
_TRANSITION_KINDS = [(re.compile(_[0], _FLAGS), _[1]) for _ in TRANSITIONS]

# The word before a colon, recorded verbatim when no lexicon phrase occurs
COLON_WORD_REGEX = re.compile(r"([A-Za-z][\w-]*)\s*:")

# Dependency references
_NUMBER = r"\d+"
_SEPARATOR = (
    r"(?:\s*[-–—]\s*|\s*,\s*(?:(?:and|or)\s+)?"
    r"|\s+(?:and|or|to|through)\s+)"
)
_LIST = r"{0}(?:{1}(?:claims?\s+)?{0})*".format(_NUMBER, _SEPARATOR)
REFERENCE_REGEX = re.compile(
    r"\b(?P<qualifier>(?:any\s+(?:one\s+)?of|either\s+(?:one\s+)?of"
    r"|one\s+of)\s+)?claims?\s+(?P<numbers>{})".format(_LIST),
    _FLAGS,
)
_LIST_TOKEN_REGEX = re.compile(
    r"\d+|[-–—]|\bto\b|\bthrough\b|\band\b|\bor\b|,", _FLAGS
)
_RANGE_TOKENS = frozenset(["-", "–", "—", "to", "through"])

# Largest claim range expanded into explicit targets
MAX_RANGE = 1000


def segment_claims(text):
    """Split a claim set into parsed claims.

    Args:
        text: Raw claim-set string

    Returns:
        result: ClaimSet

    """
    # Initialize key variables
    claims = []
    numbers = set()

    # Find claim starts
    starts = [_.start(1) for _ in CLAIM_START.finditer(text) if _starts(_)]
    if bool(starts) is False:
        log_message = "No claim numbering found in the claim text"
        log.log2debug(1017, log_message)
        raise ClaimParseError(log_message)

    # Each claim runs to the start of the next one
    for index, start in enumerate(starts):
        if index + 1 < len(starts):
            stop = starts[index + 1]
        else:
            stop = len(text)
        claim = parse_claim(text[start:stop].rstrip())

        # Claim numbers are unique
        if claim.number in numbers:
            log_message = "Claim number {} appears more than once".format(
                claim.number
            )
            log.log2debug(1018, log_message)
            raise ClaimParseError(log_message)
        numbers.add(claim.number)
        claims.append(claim)

    # Return
    result = ClaimSet(claims=tuple(claims), source_text=text)
    return result


def parse_claim(raw, number=None):
    """Decompose a single claim.

    Args:
        raw: Single-claim string, starting with "<integer>." unless the
            number is supplied
        number: Claim number to use when raw has no leading number

    Returns:
        result: ParsedClaim

    """
    # Get the claim number
    found = CLAIM_NUMBER.match(raw)
    if bool(found) is True:
        number = int(found.group(1))
        offset = found.end()
    elif number is not None:
        offset = 0
    else:
        log_message = 'Claim has no leading number: "{}"'.format(
            general.cleanstring(raw)[:60]
        )
        log.log2debug(1019, log_message)
        raise ClaimParseError(log_message)

    if int(number) < 1:
        log_message = "Claim number {} is not positive".format(number)
        log.log2debug(1020, log_message)
        raise ClaimParseError(log_message)

    # Decompose
    transition = _transition(raw, offset)
    if transition is None:
        preamble = ""
        remainder = general.cleanstring(raw[offset:])
        body_elements = (remainder,) if bool(remainder) is True else ()
    else:
        preamble = general.cleanstring(raw[offset : transition.start])
        preamble = preamble.rstrip(",").rstrip()
        body = raw[transition.end :].lstrip()
        if body.startswith(":"):
            body = body[1:]
        body_elements = _body_elements(body)

    # Get references
    refs = extract_dependency_refs(raw)
    if bool(refs) is True:
        kind = ClaimKind.DEPENDENT
    else:
        kind = ClaimKind.INDEPENDENT

    # Return
    result = ParsedClaim(
        number=int(number),
        raw_text=raw,
        preamble=preamble,
        transition=transition,
        body_elements=body_elements,
        refs=refs,
        kind=kind,
    )
    return result


def extract_dependency_refs(text):
    """Find references to earlier claims.

    Args:
        text: Claim text

    Returns:
        result: Tuple of DependencyRef in textual order

    """
    # Initialize key variables
    result = []

    for match in REFERENCE_REGEX.finditer(text):
        # Expand the number list
        (targets, alternative) = _targets(match.group("numbers"))
        targets = frozenset(_ for _ in targets if _ >= 1)
        if bool(targets) is False:
            continue

        # Classify
        if len(targets) == 1:
            form = RefForm.SINGLE
        elif bool(match.group("qualifier")) is True or alternative is True:
            form = RefForm.MULTIPLE_ALTERNATIVE
        else:
            form = RefForm.MULTIPLE_CONJUNCTIVE

        result.append(
            DependencyRef(
                targets=targets,
                form=form,
                source_span=Span(start=match.start(), end=match.end()),
            )
        )

    # Return
    return tuple(result)


def claim_ancestry(claim_set, number, choices=None):
    """Get the chain from the root independent claim to a claim.

    Args:
        claim_set: ClaimSet
        number: Number of the claim
        choices: Optional list. Each multiple reference followed is
            appended to it as an AncestryChoice

    Returns:
        result: List of ParsedClaim, root first

    """
    # Initialize key variables
    lookup = {_.number: _ for _ in claim_set.claims}
    chain = []
    seen = set()

    if number not in lookup:
        raise AncestryError("Claim {} is not in the claim set".format(number))
    claim = lookup[number]

    while True:
        if claim.number in seen:
            raise AncestryError(
                "Claim {} is part of a reference cycle".format(claim.number)
            )
        seen.add(claim.number)
        chain.append(claim)

        # Stop at the independent claim
        targets = set()
        for ref in claim.refs:
            _check_targets(claim, ref, lookup)
            targets.update(ref.targets)
        if bool(targets) is False:
            break

        # Follow the lowest target
        target = min(targets)
        if len(targets) > 1 and choices is not None:
            choices.append(
                AncestryChoice(
                    number=claim.number,
                    candidates=tuple(sorted(targets)),
                    chosen=target,
                )
            )
        claim = lookup[target]

    # Return
    result = list(reversed(chain))
    return result


def _check_targets(claim, ref, lookup):
    """Reject a reference with a forward or missing target.

    Args:
        claim: ParsedClaim holding the reference
        ref: DependencyRef
        lookup: dict of claim number to ParsedClaim

    Returns:
        None

    """
    # Initialize key variables
    quoted = claim.raw_text[ref.source_span.start : ref.source_span.end]

    for target in sorted(ref.targets):
        if target >= claim.number:
            problem = "refers forward to"
        elif target not in lookup:
            problem = "refers to missing"
        else:
            continue
        raise AncestryError(
            'Claim {} {} claim {} in "{}"'.format(
                claim.number, problem, target, quoted
            )
        )


def claim_to_dict(claim):
    """Convert a ParsedClaim to a JSON-ready dict.

    Args:
        claim: ParsedClaim

    Returns:
        result: dict

    """
    # Transition
    if claim.transition is None:
        transition = None
    else:
        transition = {
            "kind": claim.transition.kind.value,
            "text": claim.transition.text,
            "start": claim.transition.start,
            "end": claim.transition.end,
        }

    # Return
    result = {
        "number": claim.number,
        "raw_text": claim.raw_text,
        "preamble": claim.preamble,
        "transition": transition,
        "body_elements": list(claim.body_elements),
        "refs": [
            {
                "targets": sorted(_.targets),
                "form": _.form.value,
                "start": _.source_span.start,
                "end": _.source_span.end,
            }
            for _ in claim.refs
        ],
        "kind": claim.kind.value,
    }
    return result


def claim_set_to_dict(claim_set):
    """Convert a ClaimSet to a JSON-ready dict.

    Args:
        claim_set: ClaimSet

    Returns:
        result: dict

    """
    # Return
    result = {
        "claims": [claim_to_dict(_) for _ in claim_set.claims],
        "source_text": claim_set.source_text,
    }
    return result


def _starts(match):
    """Reject sentence-initial numbers that follow an abbreviation.

    Args:
        match: CLAIM_START match

    Returns:
        result: True if the match starts a claim

    """
    # Line-initial numbers always start a claim
    text = match.string
    before = text[: match.start()]
    if before == "" or before.endswith("\n"):
        return True

    # Check the word that owns the period
    words = before.split()
    if bool(words) is False:
        return True
    result = words[-1].lower() not in ABBREVIATIONS
    return result


def _transition(raw, offset):
    """Find the transitional phrase of a claim.

    Args:
        raw: Claim text
        offset: Index where the text after the claim number starts

    Returns:
        result: Transition, None if there is none

    """
    # Closed lexicon first
    found = TRANSITION_REGEX.search(raw, offset)
    if bool(found) is True:
        verbatim = found.group(0)
        for regex, kind in _TRANSITION_KINDS:
            if regex.fullmatch(verbatim):
                return Transition(
                    kind=kind,
                    text=verbatim,
                    start=found.start(),
                    end=found.end(),
                )

    # Then the word before a colon
    found = COLON_WORD_REGEX.search(raw, offset)
    if bool(found) is False:
        return None

    # Return
    result = Transition(
        kind=TransitionKind.OTHER,
        text=found.group(1),
        start=found.start(1),
        end=found.end(1),
    )
    return result


def _body_elements(body):
    """Split a claim body into elements.

    Args:
        body: Text after the transitional phrase

    Returns:
        result: Tuple of whitespace-normalized elements

    """
    # Drop the final period
    body = body.rstrip()
    if body.endswith("."):
        body = body[:-1]

    # Split on semicolons
    result = tuple(
        general.cleanstring(_) for _ in body.split(";") if bool(_.strip())
    )
    return result


def _targets(numbers):
    """Expand a number list such as "1, 3 or 5" or "1 to 4".

    Args:
        numbers: Number list text from REFERENCE_REGEX

    Returns:
        result: Tuple of (ordered list of targets, True if the list is
            written in the alternative)

    """
    # Initialize key variables
    targets = []
    alternative = False
    pending_range = False

    for token in _LIST_TOKEN_REGEX.findall(numbers):
        token = token.lower()
        if token.isdigit():
            value = int(token)
            if pending_range is True and bool(targets) is True:
                low = targets[-1]
                if low < value and value - low <= MAX_RANGE:
                    targets.extend(range(low + 1, value + 1))
                else:
                    targets.append(value)
            else:
                targets.append(value)
            pending_range = False
        elif token in _RANGE_TOKENS:
            pending_range = True
        elif token == "or":
            alternative = True

    # Return
    result = (targets, alternative)
    return result
