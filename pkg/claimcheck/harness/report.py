"""Render metric reports as JSON-ready dicts and markdown tables."""

# Application imports
from claimcheck.corpus import Task


def tau_to_dict(tau):
    """Convert a TauResult to a dict.

    Args:
        tau: TauResult or None

    Returns:
        result: dict or None

    """
    # Return
    if tau is None:
        return None
    result = dict(tau._asdict())
    return result


def report_to_dict(report):
    """Convert a MetricReport to a dict.

    Args:
        report: MetricReport

    Returns:
        result: dict

    """
    # Initialize key variables
    rankings = []
    for ranking in report.rankings:
        rankings.append(
            {
                "pair_id": ranking.pair_id,
                "task": ranking.task.value,
                "label": ranking.label.value,
                "score_a": ranking.score_a,
                "score_b": ranking.score_b,
            }
        )

    # Return
    result = {
        "metric": report.metric_name,
        "variant": report.variant,
        "tau": tau_to_dict(report.tau),
        "tau_error": report.tau_error,
        "per_task": {
            task.value: tau_to_dict(tau)
            for task, tau in report.per_task.items()
        },
        "per_task_errors": {
            task.value: message
            for task, message in report.per_task_errors.items()
        },
        "rankings": rankings,
        "failures": [
            {"pair_id": _.pair_id, "task": _.task.value, "message": _.message}
            for _ in report.failures
        ],
        "skipped": report.skipped,
    }
    return result


def report_markdown(reports):
    """Render the task / metric / tau table.

    Each metric gets one row per task it ranked pairs for. Undefined taus
    show as "n/a".

    Args:
        reports: List of MetricReport

    Returns:
        result: Markdown string

    """
    # Initialize key variables
    lines = [
        "| Task | Metric | Kendall's tau-b | Pairs | Failed |",
        "| --- | --- | ---: | ---: | ---: |",
    ]

    for task in Task:
        for report in reports:
            ranked = sum(1 for _ in report.rankings if _.task is task)
            failed = sum(1 for _ in report.failures if _.task is task)
            if bool(ranked + failed) is False:
                continue
            tau = report.per_task.get(task)
            value = "n/a" if tau is None else "{:.4f}".format(tau.tau)
            lines.append(
                "| {} | {} | {} | {} | {} |".format(
                    task.value,
                    report.metric_name,
                    value,
                    ranked,
                    failed,
                )
            )

    # Return
    result = "\n".join(lines) + "\n"
    return result
