"""Summaries of the human annotations: win rates and error counts."""

# Standard imports
from collections import Counter, defaultdict

# Application imports
from claimcheck.corpus import PreferenceLabel

UNKNOWN_MODEL = "unknown"


def win_rates(pairs):
    """Tally human pairwise preferences per task and model.

    Each pair counts once for the model of each side: a win for the
    preferred side, a loss for the other, a draw for both on a tie.

    Args:
        pairs: List of AnnotatedPair

    Returns:
        result: dict of task value to dict of model to a dict with keys
            wins, draws, losses, total, win_rate, win_or_draw_rate

    """
    # Initialize key variables
    tallies = defaultdict(lambda: defaultdict(Counter))

    for pair in pairs:
        for side, model in (("a", pair.model_a), ("b", pair.model_b)):
            tally = tallies[pair.task.value][model or UNKNOWN_MODEL]
            if pair.human_label is PreferenceLabel.TIE:
                tally["draws"] += 1
            elif pair.human_label.value == side:
                tally["wins"] += 1
            else:
                tally["losses"] += 1

    # Compute rates
    result = {}
    for task, models in sorted(tallies.items()):
        result[task] = {}
        for model, tally in sorted(models.items()):
            total = tally["wins"] + tally["draws"] + tally["losses"]
            result[task][model] = {
                "wins": tally["wins"],
                "draws": tally["draws"],
                "losses": tally["losses"],
                "total": total,
                "win_rate": tally["wins"] / total,
                "win_or_draw_rate": (tally["wins"] + tally["draws"]) / total,
            }

    # Return
    return result


def error_distribution(pairs, losses_only=False, model=None):
    """Count annotated error labels per task and model.

    Args:
        pairs: List of AnnotatedPair
        losses_only: Only count outputs the annotator did not prefer
            (ties excluded)
        model: Only count outputs of this model, None for all

    Returns:
        result: dict of task value to dict of model to a dict with keys
            outputs, error_free and labels (label to count)

    """
    # Initialize key variables
    outputs = defaultdict(lambda: defaultdict(int))
    error_free = defaultdict(lambda: defaultdict(int))
    labels = defaultdict(lambda: defaultdict(Counter))

    for pair in pairs:
        sides = (
            ("a", pair.model_a, pair.error_labels_a),
            ("b", pair.model_b, pair.error_labels_b),
        )
        for side, name, errors in sides:
            name = name or UNKNOWN_MODEL
            if model is not None and name != model:
                continue
            if bool(losses_only) is True and _lost(pair, side) is False:
                continue
            task = pair.task.value
            outputs[task][name] += 1
            if bool(errors) is False:
                error_free[task][name] += 1
            labels[task][name].update(_.value for _ in errors)

    # Assemble
    result = {}
    for task in sorted(outputs):
        result[task] = {}
        for name in sorted(outputs[task]):
            result[task][name] = {
                "outputs": outputs[task][name],
                "error_free": error_free[task][name],
                "labels": dict(sorted(labels[task][name].items())),
            }

    # Return
    return result


def _lost(pair, side):
    """Determine whether one side of a pair lost.

    Args:
        pair: AnnotatedPair
        side: "a" or "b"

    Returns:
        result: True if the annotator preferred the other side

    """
    # Return
    if pair.human_label is PreferenceLabel.TIE:
        return False
    result = pair.human_label.value != side
    return result


def summary_markdown(rates, distribution):
    """Render win rates and error counts as markdown tables.

    Args:
        rates: Result of win_rates
        distribution: Result of error_distribution

    Returns:
        result: Markdown string

    """
    # Win rates
    lines = [
        "| Task | Model | Wins | Draws | Losses | Win rate | Win or draw |",
        "| --- | --- | ---: | ---: | ---: | ---: | ---: |",
    ]
    for task, models in rates.items():
        for model, tally in models.items():
            lines.append(
                "| {} | {} | {} | {} | {} | {:.4f} | {:.4f} |".format(
                    task,
                    model,
                    tally["wins"],
                    tally["draws"],
                    tally["losses"],
                    tally["win_rate"],
                    tally["win_or_draw_rate"],
                )
            )

    # Error counts
    lines.extend(
        [
            "",
            "| Task | Model | Error | Outputs |",
            "| --- | --- | --- | ---: |",
        ]
    )
    for task, models in distribution.items():
        for model, counts in models.items():
            lines.append(
                "| {} | {} | (none) | {} |".format(
                    task, model, counts["error_free"]
                )
            )
            for label, count in counts["labels"].items():
                lines.append(
                    "| {} | {} | {} | {} |".format(task, model, label, count)
                )

    # Return
    result = "\n".join(lines) + "\n"
    return result
