"""Command line arguments for claimcheck."""

# Standard imports
import argparse
import textwrap

# Application imports
from claimcheck.harness.metrics import METRIC_NAMES
from claimcheck.corpus import Task

FORMAT_JSON = "json"
FORMAT_MARKDOWN = "md"
FORMAT_TSV = "tsv"
FORMAT_TEXT = "text"
FORMAT_JSONL = "jsonl"

KINDS = ("independent", "dependent")
TASKS = tuple(_.value for _ in Task)


def parse(argv=None):
    """Return all the CLI options.

    Args:
        argv: List of arguments, None for sys.argv

    Returns:
        args: Namespace() containing all of our CLI arguments as objects
            - command: Name of the subcommand
            - output: Path for the artifact, None for STDOUT
            - format: Output format

    """
    # Return
    args = parser().parse_args(argv)
    return args


def parser():
    """Create the argument parser.

    Args:
        None

    Returns:
        result: argparse.ArgumentParser

    """
    # Header for the help menu of the application
    result = argparse.ArgumentParser(
        prog="claimcheck",
        description=textwrap.fill(
            "Parse and lint patent claims, score generated abstracts and "
            "claims, and correlate metrics with human preferences.",
            width=80,
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    commands = result.add_subparsers(dest="command", metavar="command")
    commands.required = True

    # parse
    command = commands.add_parser("parse", help="Parse a claim set.")
    command.add_argument("claims", help="Claim text file.")
    _common(command, (FORMAT_JSON,))

    # lint-claim
    command = commands.add_parser(
        "lint-claim", help="Lint a generated next claim."
    )
    command.add_argument(
        "--context", required=True, help="File of the preceding claims."
    )
    command.add_argument(
        "--candidate", required=True, help="File of the candidate claim."
    )
    command.add_argument(
        "--required",
        choices=KINDS,
        default=None,
        help="Claim kind the candidate must have.",
    )
    _lexicons(command)
    _strict(command)
    _common(command, (FORMAT_JSON, FORMAT_TSV))

    # lint-abstract
    command = commands.add_parser(
        "lint-abstract", help="Lint a generated abstract."
    )
    command.add_argument(
        "--claims", required=True, help="File of the source claims."
    )
    command.add_argument(
        "--abstract", required=True, help="File of the abstract."
    )
    command.add_argument(
        "--word-limit",
        type=int,
        default=None,
        help="Most words an abstract may have.",
    )
    _strict(command)
    _common(command, (FORMAT_JSON, FORMAT_TSV))

    # score
    command = commands.add_parser(
        "score", help="Score a generated abstract or claim."
    )
    command.add_argument(
        "--metric", required=True, choices=METRIC_NAMES, help="Metric name."
    )
    command.add_argument(
        "--claims", required=True, help="File of the input claims."
    )
    command.add_argument(
        "--candidate",
        required=True,
        help="File of the generated abstract or next claim.",
    )
    command.add_argument(
        "--required",
        choices=KINDS,
        default=None,
        help=textwrap.fill(
            "Claim kind the next claim must have. Scores a next claim "
            "instead of an abstract.",
            width=60,
        ),
    )
    _scoring(command)
    _common(command, (FORMAT_TEXT, FORMAT_JSON))

    # terms
    command = commands.add_parser("terms", help="Rank the terms of a text.")
    command.add_argument("text", help="Text file.")
    command.add_argument(
        "--top-k",
        type=int,
        default=None,
        help="Number of terms to keep. Default: all positive scores.",
    )
    command.add_argument(
        "--stopwords", default=None, help="Stopword list file."
    )
    _common(command, (FORMAT_TSV, FORMAT_JSON))

    # evaluate
    command = commands.add_parser(
        "evaluate", help="Correlate metrics with human preferences."
    )
    command.add_argument(
        "--annotations", required=True, help="Annotation JSON-Lines file."
    )
    command.add_argument(
        "--metric",
        action="append",
        choices=METRIC_NAMES,
        default=None,
        help="Metric name, repeatable. Default: every metric.",
    )
    command.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="Worker processes. Default: from the configuration.",
    )
    command.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="Largest score difference ranked as a tie. Default: 0.",
    )
    _scoring(command)
    _common(command, (FORMAT_JSON, FORMAT_MARKDOWN))

    # generate
    command = commands.add_parser(
        "generate", help="Draft an output with a chat-completion service."
    )
    command.add_argument(
        "--claims", required=True, help="File of the input claims."
    )
    command.add_argument("--task", required=True, choices=TASKS, help="Task.")
    command.add_argument(
        "--required",
        choices=KINDS,
        default=None,
        help="Claim kind for the next_claim task.",
    )
    command.add_argument(
        "--url", default=None, help="Chat-completion service URL."
    )
    command.add_argument("--model", default=None, help="Model name.")
    _common(command, (FORMAT_TEXT, FORMAT_JSON))

    # filter
    command = commands.add_parser(
        "filter", help="Keep granted records without canceled claims."
    )
    command.add_argument("records", help="Patent record JSON-Lines file.")
    _common(command, (FORMAT_JSONL, FORMAT_JSON))

    # summarize
    command = commands.add_parser(
        "summarize", help="Win rates and error counts of annotations."
    )
    command.add_argument(
        "--annotations", required=True, help="Annotation JSON-Lines file."
    )
    command.add_argument(
        "--losses-only",
        action="store_true",
        default=False,
        help="Count errors of outputs that lost their pair only.",
    )
    command.add_argument(
        "--model", default=None, help="Count errors of this model only."
    )
    _common(command, (FORMAT_JSON, FORMAT_MARKDOWN))

    # Return
    return result


def _common(command, formats):
    """Add the output arguments every command has.

    Args:
        command: argparse.ArgumentParser
        formats: Supported formats, the first is the default

    Returns:
        None

    """
    command.add_argument(
        "--format",
        choices=formats,
        default=formats[0],
        help="Output format. Default: {}".format(formats[0]),
    )
    command.add_argument(
        "--output", default=None, help="Output file. Default: STDOUT."
    )


def _strict(command):
    """Add the --strict flag of the lint commands.

    Args:
        command: argparse.ArgumentParser

    Returns:
        None

    """
    command.add_argument(
        "--strict",
        action="store_true",
        default=False,
        help="Exit with status 1 on any error-severity diagnostic.",
    )


def _lexicons(command):
    """Add the lexicon file arguments.

    Args:
        command: argparse.ArgumentParser

    Returns:
        None

    """
    command.add_argument(
        "--vagueness-lexicon", default=None, help="Vagueness lexicon file."
    )
    command.add_argument(
        "--stopwords", default=None, help="Stopword list file."
    )


def _scoring(command):
    """Add the metric configuration arguments.

    Args:
        command: argparse.ArgumentParser

    Returns:
        None

    """
    command.add_argument(
        "--embedder",
        default=None,
        help='"fallback" or "http:<url>". Default: from the configuration.',
    )
    command.add_argument(
        "--ngram-max",
        type=int,
        default=None,
        help="Largest n for n-gram coverage. Default: 4.",
    )
    command.add_argument(
        "--stopwords", default=None, help="Stopword list file."
    )
