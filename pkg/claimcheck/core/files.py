"""claimcheck files library."""

import os
import json

# PIP imports
import yaml

# Application libraries
from claimcheck.core import log
from claimcheck.core import general
from claimcheck.core.errors import CorpusError


def config_filepath():
    """Get the configuration file path.

    Args:
        None

    Returns:
        result: Path to config.yaml, None if there is no config directory

    """
    # Get the directory
    directory = log.check_environment()
    if bool(directory) is False:
        return None

    # Return
    result = "{}{}config.yaml".format(directory, os.sep)
    return result


def read_yaml_file(filepath, as_string=False, die=True):
    """Read the contents of a YAML file.

    Args:
        filepath: Path to file to be read
        as_string: Return a string if True
        die: Die if there is an error

    Returns:
        result: Dict of yaml read

    """
    # Initialize key variables
    if as_string is False:
        result = {}
    else:
        result = ""

    # Read file
    if filepath.endswith(".yaml") or filepath.endswith(".yml"):
        try:
            with open(filepath, "r") as yaml_from_file:
                if as_string is False:
                    result = yaml.safe_load(yaml_from_file)
                else:
                    result = yaml_from_file.read()
        except (OSError, yaml.YAMLError):
            log_message = (
                "Error reading file {}. Check permissions, "
                "existence and file syntax."
                "".format(filepath)
            )
            if bool(die) is True:
                log.log2die_safe(1004, log_message)
            else:
                log.log2debug(1005, log_message)
                return {} if as_string is False else ""

    else:
        # Die if not a YAML file
        log_message = "{} is not a YAML file.".format(filepath)
        if bool(die) is True:
            log.log2die_safe(1006, log_message)
        else:
            log.log2debug(1007, log_message)
            if bool(as_string) is False:
                return {}
            else:
                return ""

    # An empty file is an empty configuration
    if as_string is False and result is None:
        result = {}

    # Return
    return result


def read_text_file(filepath):
    """Read the contents of a UTF-8 text file.

    Args:
        filepath: Path to file to be read

    Returns:
        result: File contents

    """
    # Read
    try:
        with open(filepath, "r", encoding="utf-8") as file_handle:
            result = file_handle.read()
    except (OSError, UnicodeDecodeError) as error:
        log_message = "Error reading file {}: {}".format(filepath, error)
        log.log2debug(1008, log_message)
        raise CorpusError(log_message) from error

    # Return
    return result


def read_lines(filepath):
    """Read a one-entry-per-line file such as a lexicon or stopword list.

    Blank lines and lines starting with "#" are skipped.

    Args:
        filepath: Path to file to be read

    Returns:
        result: List of stripped, case-folded entries in file order

    """
    # Initialize key variables
    result = []

    # Process
    for line in read_text_file(filepath).splitlines():
        entry = general.cleanstring(line).casefold()
        if bool(entry) is False or entry.startswith("#"):
            continue
        result.append(entry)

    # Return
    return result


def write_text_file(filepath, data):
    """Write text to a file, creating the parent directory.

    Args:
        filepath: Path to file to be written
        data: Text to write

    Returns:
        None

    """
    # Create the directory
    directory = os.path.dirname(os.path.abspath(filepath))
    mkdir(directory)

    # Write
    try:
        with open(filepath, "w", encoding="utf-8") as file_handle:
            file_handle.write(data)
    except OSError as error:
        log_message = "Error writing file {}: {}".format(filepath, error)
        log.log2debug(1009, log_message)
        raise CorpusError(log_message) from error


def read_json_lines(filepath):
    """Read a JSON-Lines file.

    Args:
        filepath: Path to file to be read

    Returns:
        result: List of (line number, decoded object or None, error or None)

    """
    # Initialize key variables
    result = []

    # Only "\n" ends a line. JSON strings may hold other line separators
    for number, line in enumerate(
        read_text_file(filepath).split("\n"), start=1
    ):
        if bool(line.strip()) is False:
            continue
        try:
            result.append((number, json.loads(line), None))
        except ValueError as error:
            result.append((number, None, "Invalid JSON: {}".format(error)))

    # Return
    return result


def mkdir(directory):
    """Create a directory if it doesn't already exist.

    Args:
        directory: Directory name

    Returns:
        None

    """
    # Do work
    if os.path.exists(directory) is False:
        try:
            os.makedirs(directory, mode=0o775)
        except OSError:
            log_message = "Cannot create directory {}." "".format(directory)
            log.log2die(1010, log_message)

    # Fail if not a directory
    if os.path.isdir(directory) is False:
        log_message = "{} is not a directory." "".format(directory)
        log.log2die(1011, log_message)
