"""Load, validate, filter and dump JSON-Lines corpora."""

# Standard imports
import json
import re
from collections import Counter

# Application imports
from claimcheck import LineError, Ingested
from claimcheck.core import log
from claimcheck.core import files
from claimcheck.core.errors import CorpusError
from claimcheck.claims import ClaimKind
from claimcheck.lint import error_type
from claimcheck.corpus import (
    IPC_SECTIONS,
    Task,
    PreferenceLabel,
    PatentRecord,
    AnnotatedPair,
)

# Both spellings occur in USPTO filings
CANCELED_REGEX = re.compile(r"\(\s*cancell?ed\s*\)", re.IGNORECASE)


class _InvalidLine(Exception):
    """A JSON-Lines object that doesn't match the field layout."""


def load_patent_records(path, strict=False):
    """Load patent records from a JSON-Lines file.

    Args:
        path: Path to the file
        strict: Raise CorpusError on the first bad line if True

    Returns:
        result: Ingested namedtuple of (records, LineErrors)

    """
    # Return
    result = _load(path, _patent_record, strict)
    log.log2info(
        1021,
        "Loaded {} patent records from {} with {} errors".format(
            len(result.items), path, len(result.errors)
        ),
    )
    return result


def load_annotation_pairs(path, strict=False):
    """Load human annotation pairs from a JSON-Lines file.

    Args:
        path: Path to the file
        strict: Raise CorpusError on the first bad line if True

    Returns:
        result: Ingested namedtuple of (pairs, LineErrors)

    """
    # Return
    result = _load(path, _annotated_pair, strict, key="pair_id")
    log.log2info(
        1022,
        "Loaded {} annotation pairs from {} with {} errors".format(
            len(result.items), path, len(result.errors)
        ),
    )
    return result


def filter_eval_corpus(records):
    """Keep granted records without canceled claims.

    Args:
        records: List of PatentRecord

    Returns:
        result: List of PatentRecord in input order

    """
    # Return
    result = [
        _
        for _ in records
        if _.granted is True and not CANCELED_REGEX.search(_.claims_text)
    ]
    return result


def ipc_distribution(records):
    """Count records per IPC section.

    Args:
        records: List of PatentRecord

    Returns:
        result: dict of section letter to count. Records without a
            section are counted under "unknown"

    """
    # Initialize key variables
    result = {_: 0 for _ in sorted(IPC_SECTIONS)}

    # Count
    counts = Counter(
        _.ipc_section if _.ipc_section is not None else "unknown"
        for _ in records
    )
    result.update(counts)

    # Return
    return result


def patent_record_to_dict(record):
    """Convert a PatentRecord to its JSON-Lines layout.

    Args:
        record: PatentRecord

    Returns:
        result: dict

    """
    # Return
    result = {
        "id": record.id,
        "claims": record.claims_text,
        "abstract": record.abstract_text,
        "ipc_section": record.ipc_section,
        "granted": record.granted,
    }
    return result


def annotated_pair_to_dict(pair):
    """Convert an AnnotatedPair to its JSON-Lines layout.

    Args:
        pair: AnnotatedPair

    Returns:
        result: dict

    """
    # Return
    result = {
        "pair_id": pair.pair_id,
        "task": pair.task.value,
        "input_claims": pair.input_claims,
        "output_a": pair.output_a,
        "output_b": pair.output_b,
        "human_label": pair.human_label.value,
        "required_kind": (
            None if pair.required_kind is None else pair.required_kind.value
        ),
        "errors_a": sorted(_.value for _ in pair.error_labels_a),
        "errors_b": sorted(_.value for _ in pair.error_labels_b),
        "model_a": pair.model_a,
        "model_b": pair.model_b,
    }
    return result


def dump_patent_records(records, path):
    """Write patent records as JSON-Lines.

    Args:
        records: List of PatentRecord
        path: Path to the file

    Returns:
        None

    """
    _dump([patent_record_to_dict(_) for _ in records], path)


def dump_annotation_pairs(pairs, path):
    """Write annotation pairs as JSON-Lines.

    Args:
        pairs: List of AnnotatedPair
        path: Path to the file

    Returns:
        None

    """
    _dump([annotated_pair_to_dict(_) for _ in pairs], path)


def _dump(rows, path):
    """Write dicts as JSON-Lines.

    Args:
        rows: List of dicts
        path: Path to the file

    Returns:
        None

    """
    # Write
    lines = [json.dumps(_, sort_keys=True, ensure_ascii=False) for _ in rows]
    data = "".join("{}\n".format(_) for _ in lines)
    files.write_text_file(path, data)


def _load(path, converter, strict, key=None):
    """Convert the lines of a JSON-Lines file.

    Args:
        path: Path to the file
        converter: Function converting a decoded object
        strict: Raise CorpusError on the first bad line if True
        key: Attribute that must be unique across lines, if any

    Returns:
        result: Ingested namedtuple

    """
    # Initialize key variables
    items = []
    errors = []
    seen = {}

    for line, data, error in files.read_json_lines(path):
        if error is None:
            try:
                item = converter(data)
                if key is not None:
                    _unique(item, key, line, seen)
                items.append(item)
            except _InvalidLine as reason:
                error = str(reason)

        # Collect the failure
        if error is not None:
            log_message = "{} line {}: {}".format(path, line, error)
            log.log2debug(1023, log_message)
            if bool(strict) is True:
                raise CorpusError(log_message)
            errors.append(LineError(line=line, message=error))

    # Return
    result = Ingested(items=items, errors=errors)
    return result


def _unique(item, key, line, seen):
    """Reject an item whose key was already loaded.

    Args:
        item: Converted item
        key: Attribute name
        line: Line number of the item
        seen: dict of key value to the line that first used it

    Returns:
        None

    """
    value = getattr(item, key)
    if value in seen:
        raise _InvalidLine(
            'Duplicate "{}" "{}", first used on line {}'.format(
                key, value, seen[value]
            )
        )
    seen[value] = line


def _string(data, field, required=True, empty=False):
    """Get a string field.

    Args:
        data: Decoded object
        field: Field name
        required: The field must be present and not null if True
        empty: Allow a blank string if True

    Returns:
        result: String or None

    """
    # Get value
    value = data.get(field)
    if value is None:
        if bool(required) is True:
            raise _InvalidLine('Missing field "{}"'.format(field))
        return None
    if isinstance(value, str) is False:
        raise _InvalidLine('Field "{}" must be a string'.format(field))
    if bool(empty) is False and bool(value.strip()) is False:
        raise _InvalidLine('Field "{}" must not be empty'.format(field))

    # Return
    return value


def _patent_record(data):
    """Convert a decoded object to a PatentRecord.

    Args:
        data: Decoded object

    Returns:
        result: PatentRecord

    """
    # Check layout
    if isinstance(data, dict) is False:
        raise _InvalidLine("Line is not a JSON object")

    # Identifier may be numeric in some exports
    identifier = data.get("id")
    if isinstance(identifier, bool) or not isinstance(identifier, (str, int)):
        raise _InvalidLine('Field "id" must be a string')

    # IPC section
    section = _string(data, "ipc_section", required=False)
    if section is not None:
        section = section.strip().upper()
        if section not in IPC_SECTIONS:
            raise _InvalidLine(
                'Field "ipc_section" must be one of A-H, not "{}"'.format(
                    data.get("ipc_section")
                )
            )

    # Granted
    granted = data.get("granted")
    if isinstance(granted, bool) is False:
        raise _InvalidLine('Field "granted" must be true or false')

    # Return
    result = PatentRecord(
        id=str(identifier),
        claims_text=_string(data, "claims"),
        abstract_text=_string(data, "abstract", required=False, empty=True),
        ipc_section=section,
        granted=granted,
    )
    return result


def _annotated_pair(data):
    """Convert a decoded object to an AnnotatedPair.

    Args:
        data: Decoded object

    Returns:
        result: AnnotatedPair

    """
    # Check layout
    if isinstance(data, dict) is False:
        raise _InvalidLine("Line is not a JSON object")

    # Enumerations
    task = _enum(Task, data, "task")
    label = _enum(PreferenceLabel, data, "human_label")

    # Required kind is present iff the task is next_claim
    required = data.get("required_kind")
    if task is Task.NEXT_CLAIM:
        if required is None:
            raise _InvalidLine(
                'Field "required_kind" is required for next_claim pairs'
            )
        try:
            required = ClaimKind(str(required).strip().lower())
        except ValueError:
            raise _InvalidLine(
                'Field "required_kind" must be "independent" or '
                '"dependent", not "{}"'.format(required)
            )
    elif required is not None:
        raise _InvalidLine(
            'Field "required_kind" must be null for claims2abstract pairs'
        )

    # Return
    result = AnnotatedPair(
        pair_id=str(_identifier(data, "pair_id")),
        task=task,
        input_claims=_string(data, "input_claims"),
        output_a=_string(data, "output_a"),
        output_b=_string(data, "output_b"),
        human_label=label,
        required_kind=required,
        error_labels_a=_labels(data, "errors_a"),
        error_labels_b=_labels(data, "errors_b"),
        model_a=_string(data, "model_a", required=False),
        model_b=_string(data, "model_b", required=False),
    )
    return result


def _identifier(data, field):
    """Get an identifier field.

    Args:
        data: Decoded object
        field: Field name

    Returns:
        result: Identifier value

    """
    # Return
    result = data.get(field)
    if isinstance(result, bool) or not isinstance(result, (str, int)):
        raise _InvalidLine('Field "{}" must be a string'.format(field))
    return result


def _enum(enum, data, field):
    """Get an enumerated field.

    Args:
        enum: Enum class
        data: Decoded object
        field: Field name

    Returns:
        result: Enum member

    """
    # Return
    value = data.get(field)
    try:
        result = enum(str(value).strip().lower())
    except ValueError:
        choices = ", ".join('"{}"'.format(_.value) for _ in enum)
        raise _InvalidLine(
            'Field "{}" must be one of {}, not "{}"'.format(
                field, choices, value
            )
        )
    return result


def _labels(data, field):
    """Get a set of error labels.

    Args:
        data: Decoded object
        field: Field name

    Returns:
        result: frozenset of ErrorType

    """
    # Initialize key variables
    values = data.get(field)
    result = set()

    # Process
    if values is None:
        return frozenset()
    if isinstance(values, list) is False:
        raise _InvalidLine('Field "{}" must be a list'.format(field))
    for value in values:
        label = error_type(value)
        if label is None:
            raise _InvalidLine(
                'Unknown error label "{}" in field "{}"'.format(value, field)
            )
        result.add(label)

    # Return
    return frozenset(result)
