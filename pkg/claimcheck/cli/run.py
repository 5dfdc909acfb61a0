"""Run the claimcheck commands."""

# Standard imports
import json
import os
import sys

# Application imports
from claimcheck.core import files
from claimcheck.core import log
from claimcheck.core.errors import ClaimCheckError
from claimcheck.claims import claim_kind
from claimcheck.claims import parser
from claimcheck.corpus import Task
from claimcheck.corpus import ingest
from claimcheck.lint import lint
from claimcheck.lint import detectors
from claimcheck.terms import extract
from claimcheck.scorer.embedding import provider_from_spec
from claimcheck.harness import evaluate
from claimcheck.harness import generate
from claimcheck.harness import metrics as registry
from claimcheck.harness import report
from claimcheck.harness import summary
from claimcheck.cli import arguments
from claimcheck.cli.configuration import ConfigCLI

# Exit statuses
EXIT_OK = 0
EXIT_LINT = 1


def main(argv=None):
    """Run the command line.

    Args:
        argv: List of arguments, None for sys.argv

    Returns:
        None

    """
    # Run
    args = arguments.parse(argv)
    status = run(args)
    sys.exit(status)


def run(args, config=None):
    """Execute one command.

    Usage and IO errors print a one-line reason to STDERR and exit with
    status 2.

    Args:
        args: Namespace from arguments.parse
        config: ConfigCLI, None to read the configuration file

    Returns:
        status: 0 on success, 1 when --strict finds an error-severity
            diagnostic

    """
    # Initialize key variables
    if config is None:
        config = ConfigCLI()
    commands = {
        "parse": _parse,
        "lint-claim": _lint_claim,
        "lint-abstract": _lint_abstract,
        "score": _score,
        "terms": _terms,
        "evaluate": _evaluate,
        "generate": _generate,
        "filter": _filter,
        "summarize": _summarize,
    }

    # Run
    try:
        (output, status) = commands[args.command](args, config)
    except ClaimCheckError as error:
        log.log2die_safe(1034, "{}: {}".format(args.command, error))

    # Emit
    if args.output is None:
        sys.stdout.write(output)
    else:
        try:
            files.write_text_file(args.output, output)
        except ClaimCheckError as error:
            log.log2die_safe(1037, "--output: {}".format(error))
    return status


def _parse(args, config):
    """Parse a claim set."""
    # Return
    claim_set = parser.segment_claims(_read(args.claims, "claims"))
    return (_json(parser.claim_set_to_dict(claim_set)), EXIT_OK)


def _lint_claim(args, config):
    """Lint a next claim.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    context = parser.segment_claims(_read(args.context, "--context"))
    candidate = parser.parse_claim(_read(args.candidate, "--candidate"))
    lexicon = _option(
        args.vagueness_lexicon,
        config.vagueness_lexicon(),
        "--vagueness-lexicon",
    )
    stopwords = _option(args.stopwords, config.stopwords(), "--stopwords")

    # Lint
    diagnostics = lint.lint_next_claim(
        context,
        candidate,
        required=claim_kind(args.required),
        lexicon=detectors.load_lexicon(lexicon),
        stopwords=extract.load_stopwords(stopwords),
        min_length=config.repetition_min_length(),
        min_repeats=config.repetition_min_repeats(),
    )

    # Return
    result = (
        _diagnostics(diagnostics, args.format),
        _status(args, diagnostics),
    )
    return result


def _lint_abstract(args, config):
    """Lint an abstract.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    if args.word_limit is None:
        word_limit = config.abstract_word_limit()
    else:
        word_limit = args.word_limit

    # Lint
    diagnostics = lint.lint_abstract(
        _read(args.claims, "--claims"),
        _read(args.abstract, "--abstract"),
        word_limit=word_limit,
        copy_threshold=config.copy_ratio_threshold(),
        min_length=config.repetition_min_length(),
        min_repeats=config.repetition_min_repeats(),
    )

    # Return
    result = (
        _diagnostics(diagnostics, args.format),
        _status(args, diagnostics),
    )
    return result


def _score(args, config):
    """Score one output.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    metric = _metrics([args.metric], args, config)[0]
    required = claim_kind(args.required)
    if required is None:
        task = Task.CLAIMS2ABSTRACT
    else:
        task = Task.NEXT_CLAIM
    if task not in metric.functions:
        log.log2die_safe(
            1036,
            "--metric: {} does not score {} outputs, {} --required".format(
                metric.name,
                task.value,
                "drop" if required is not None else "add",
            ),
        )

    # Score
    value = metric.functions[task](
        _read(args.claims, "--claims"),
        _read(args.candidate, "--candidate"),
        required,
    )

    # Return
    if args.format == arguments.FORMAT_JSON:
        output = _json(
            {"metric": metric.name, "task": task.value, "score": value}
        )
    else:
        output = "{}\n".format(value)
    return (output, EXIT_OK)


def _terms(args, config):
    """Rank the terms of a text.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    stopwords = _option(args.stopwords, config.stopwords(), "--stopwords")

    # Rank
    ranked = extract.score_candidates(
        extract.extract_candidates(
            _read(args.text, "text"),
            stopwords=extract.load_stopwords(stopwords),
        ),
        containment_weight=config.containment_weight(),
        contained_weight=config.contained_weight(),
    )
    if args.top_k is None:
        ranked = [_ for _ in ranked if _.score > 0]
    else:
        ranked = ranked[: max(0, args.top_k)]

    # Return
    if args.format == arguments.FORMAT_JSON:
        output = _json({"terms": [dict(_._asdict()) for _ in ranked]})
    else:
        lines = ["term\tfrequency\tscore"]
        lines.extend(
            "{}\t{}\t{:.6f}".format(_.text, _.frequency, _.score)
            for _ in ranked
        )
        output = "\n".join(lines) + "\n"
    return (output, EXIT_OK)


def _evaluate(args, config):
    """Correlate metrics with the human labels.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    ingested = ingest.load_annotation_pairs(
        _exists(args.annotations, "--annotations")
    )
    _warn(ingested.errors, args.annotations)
    names = args.metric or list(registry.METRIC_NAMES)
    jobs = config.jobs() if args.jobs is None else max(1, args.jobs)
    if args.epsilon is None:
        epsilon = config.tie_epsilon()
    else:
        epsilon = args.epsilon

    # Evaluate
    reports = evaluate.evaluate_metrics(
        _metrics(names, args, config),
        ingested.items,
        jobs=jobs,
        epsilon=epsilon,
    )
    if bool(reports) is False:
        log.log2die_safe(
            1038,
            "--metric: none of the metrics apply to the annotated tasks",
        )

    # Return
    if args.format == arguments.FORMAT_MARKDOWN:
        output = report.report_markdown(reports)
    else:
        output = _json(
            {
                "pairs": len(ingested.items),
                "ingest_errors": [
                    dict(_._asdict()) for _ in ingested.errors
                ],
                "reports": [report.report_to_dict(_) for _ in reports],
            }
        )
    return (output, EXIT_OK)


def _generate(args, config):
    """Draft an output.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Initialize key variables
    url = args.url or config.generator_url()
    if bool(url) is False:
        log.log2die_safe(1035, "--url: no generation service configured")
    task = Task(args.task)
    required = claim_kind(args.required)
    model = args.model or config.generator_model()
    claims = _read(args.claims, "--claims")

    # Generate
    text = generate.generate(
        url,
        task,
        claims,
        required_kind=required,
        model=model,
        api_key=config.generator_key(),
        timeout=config.embedder_timeout(),
        retries=config.embedder_retries(),
    )

    # Return
    if args.format == arguments.FORMAT_JSON:
        output = _json(
            {
                "task": task.value,
                "required_kind": args.required,
                "model": model,
                "prompt": generate.build_prompt(task, claims, required),
                "output": text,
            }
        )
    else:
        output = "{}\n".format(text)
    return (output, EXIT_OK)


def _filter(args, config):
    """Filter a patent record file.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Filter
    ingested = ingest.load_patent_records(_exists(args.records, "records"))
    _warn(ingested.errors, args.records)
    kept = ingest.filter_eval_corpus(ingested.items)
    rows = [ingest.patent_record_to_dict(_) for _ in kept]

    # Return
    if args.format == arguments.FORMAT_JSON:
        output = _json(
            {
                "kept": len(kept),
                "removed": len(ingested.items) - len(kept),
                "ipc_distribution": ingest.ipc_distribution(kept),
                "records": rows,
            }
        )
    else:
        output = "".join(
            "{}\n".format(json.dumps(_, sort_keys=True, ensure_ascii=False))
            for _ in rows
        )
    return (output, EXIT_OK)


def _summarize(args, config):
    """Summarize an annotation file.

    Args:
        args: Namespace
        config: ConfigCLI

    Returns:
        result: Tuple of (output, status)

    """
    # Summarize
    ingested = ingest.load_annotation_pairs(
        _exists(args.annotations, "--annotations")
    )
    _warn(ingested.errors, args.annotations)
    rates = summary.win_rates(ingested.items)
    distribution = summary.error_distribution(
        ingested.items, losses_only=args.losses_only, model=args.model
    )

    # Return
    if args.format == arguments.FORMAT_MARKDOWN:
        output = summary.summary_markdown(rates, distribution)
    else:
        output = _json(
            {"win_rates": rates, "error_distribution": distribution}
        )
    return (output, EXIT_OK)


def _metrics(names, args, config):
    """Build metrics from the arguments and the configuration.

    Args:
        names: List of metric names
        args: Namespace with embedder, ngram_max and stopwords
        config: ConfigCLI

    Returns:
        result: List of Metric

    """
    # Initialize key variables
    stopwords = _option(args.stopwords, config.stopwords(), "--stopwords")
    if stopwords is not None:
        stopwords = extract.load_stopwords(stopwords)
    provider = provider_from_spec(
        args.embedder or config.embedder(),
        timeout=config.embedder_timeout(),
        retries=config.embedder_retries(),
    )
    if args.ngram_max is None:
        n_max = config.ngram_max()
    else:
        n_max = args.ngram_max

    # Return
    result = registry.build_metrics(
        names,
        provider=provider,
        n_max=n_max,
        stopwords=stopwords,
        containment_weight=config.containment_weight(),
        contained_weight=config.contained_weight(),
        min_length=config.repetition_min_length(),
        min_repeats=config.repetition_min_repeats(),
    )
    return result


def _diagnostics(diagnostics, fmt):
    """Render diagnostics.

    Args:
        diagnostics: List of Diagnostic
        fmt: Output format

    Returns:
        result: String

    """
    # Return
    if fmt == arguments.FORMAT_TSV:
        lines = ["start\tend\tseverity\terror\tdetector\tmessage"]
        lines.extend(
            "\t".join(
                [
                    str(_.span.start),
                    str(_.span.end),
                    _.severity.value,
                    _.error.value,
                    _.detector,
                    _.message,
                ]
            )
            for _ in diagnostics
        )
        return "\n".join(lines) + "\n"
    result = _json(
        {"diagnostics": [lint.diagnostic_to_dict(_) for _ in diagnostics]}
    )
    return result


def _status(args, diagnostics):
    """Get the exit status of a lint command.

    Args:
        args: Namespace
        diagnostics: List of Diagnostic

    Returns:
        result: Exit status

    """
    if bool(args.strict) is True and lint.has_errors(diagnostics) is True:
        return EXIT_LINT
    return EXIT_OK


def _json(data):
    """Render JSON with sorted keys and two-space indentation.

    Args:
        data: JSON-ready object

    Returns:
        result: String ending with a newline

    """
    return "{}\n".format(
        json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    )


def _exists(path, flag):
    """Die unless a path names an existing file.

    Args:
        path: Path
        flag: Argument name for the message

    Returns:
        path: The path

    """
    if os.path.isfile(path) is False:
        log.log2die_safe(1032, "{}: no such file: {}".format(flag, path))
    return path


def _read(path, flag):
    """Read a text file named by an argument.

    Args:
        path: Path
        flag: Argument name for the message

    Returns:
        result: File contents

    """
    return files.read_text_file(_exists(path, flag))


def _option(value, default, flag):
    """Get a file argument, falling back to the configuration.

    Args:
        value: Path from the command line or None
        default: Path from the configuration or None
        flag: Argument name for the message

    Returns:
        result: Path or None

    """
    # Return
    result = value or default
    if result is not None:
        _exists(result, flag)
    return result


def _warn(errors, path):
    """Log the lines of a JSON-Lines file that failed to load.

    Args:
        errors: List of LineError
        path: File name

    Returns:
        None

    """
    for error in errors:
        log.log2warning(
            1033, "{} line {}: {}".format(path, error.line, error.message)
        )
