"""Pairwise ranking and Kendall's tau-b against human labels."""

# Standard libraries
import math
import re
from multiprocessing import Pool
from collections import namedtuple

# PIP3 libraries
import numpy as np
from scipy import stats

# Application imports
from claimcheck import TAU_VARIANT, TIE_EPSILON
from claimcheck.core import log
from claimcheck.core.log import ExceptionWrapper
from claimcheck.core.errors import (
    DegenerateVarianceError,
    HarnessError,
    RankingError,
)
from claimcheck.corpus import Task, PreferenceLabel
from claimcheck.harness import (
    PairRanking,
    PairFailure,
    TauResult,
    MetricReport,
)

_META = namedtuple("_META", "metric pair epsilon")


def rank_pair(metric, pair, epsilon=TIE_EPSILON):
    """Score both outputs of a pair and rank them.

    Args:
        metric: Metric
        pair: AnnotatedPair
        epsilon: Largest score difference treated as a tie. 0.0 means
            only equal scores tie

    Returns:
        result: PairRanking

    """
    # Get the function for the task
    function = metric.functions.get(pair.task)
    if function is None:
        raise RankingError(
            pair.pair_id,
            "Metric {} does not apply to task {}".format(
                metric.name, pair.task.value
            ),
        )

    # Score
    scores = []
    for side, output in (("a", pair.output_a), ("b", pair.output_b)):
        try:
            score = float(
                function(pair.input_claims, output, pair.required_kind)
            )
        except RankingError:
            raise
        except Exception as error:
            raise RankingError(
                pair.pair_id,
                "Metric {} failed on output_{}: {}".format(
                    metric.name, side, error
                ),
            ) from error
        if math.isfinite(score) is False:
            raise RankingError(
                pair.pair_id,
                "Metric {} returned {} for output_{}".format(
                    metric.name, score, side
                ),
            )
        scores.append(score)

    # Rank
    (score_a, score_b) = scores
    if score_a == score_b or abs(score_a - score_b) <= epsilon:
        label = PreferenceLabel.TIE
    elif score_a > score_b:
        label = PreferenceLabel.PREFER_A
    else:
        label = PreferenceLabel.PREFER_B

    # Return
    result = PairRanking(
        pair_id=pair.pair_id,
        task=pair.task,
        label=label,
        score_a=score_a,
        score_b=score_b,
    )
    return result


def kendall_tau_b(metric_labels, human_labels):
    """Compute Kendall's tau-b between two preference sequences.

    Labels are encoded PREFER_A = +1, TIE = 0, PREFER_B = -1 and every
    index pair is counted.

    Args:
        metric_labels: List of PreferenceLabel (or ordinals)
        human_labels: List of PreferenceLabel (or ordinals)

    Returns:
        result: TauResult

    """
    # Initialize key variables
    metric = [_ordinal(_) for _ in metric_labels]
    human = [_ordinal(_) for _ in human_labels]
    concordant = discordant = ties_metric = ties_human = ties_both = 0

    # Check input
    if len(metric) != len(human):
        raise HarnessError(
            "Label sequences differ in length: {} and {}".format(
                len(metric), len(human)
            )
        )
    if len(metric) < 2:
        raise HarnessError("At least two labels are needed for tau")

    # Count every index pair
    for i in range(len(metric)):
        for j in range(i + 1, len(metric)):
            d_metric = _sign(metric[i] - metric[j])
            d_human = _sign(human[i] - human[j])
            if d_metric == 0 and d_human == 0:
                ties_both += 1
            elif d_metric == 0:
                ties_metric += 1
            elif d_human == 0:
                ties_human += 1
            elif d_metric == d_human:
                concordant += 1
            else:
                discordant += 1

    # Tie-corrected denominator
    left = concordant + discordant + ties_metric
    right = concordant + discordant + ties_human
    if left == 0 or right == 0:
        raise DegenerateVarianceError(
            "A label sequence has no variance, tau-b is undefined"
        )
    tau = (concordant - discordant) / math.sqrt(left * right)
    tau = max(-1.0, min(1.0, tau))

    # Return
    result = TauResult(
        tau=tau,
        concordant=concordant,
        discordant=discordant,
        ties_metric=ties_metric,
        ties_human=ties_human,
        ties_both=ties_both,
        n_pairs=len(metric),
        p_value=_p_value(metric, human),
        variant=TAU_VARIANT,
    )
    return result


def evaluate_metric(metric, pairs, jobs=1, epsilon=TIE_EPSILON):
    """Correlate a metric with the human labels of annotated pairs.

    Only pairs whose task the metric applies to are ranked, the rest are
    counted as skipped. Pairs the metric fails on are reported and left
    out of tau.

    Args:
        metric: Metric
        pairs: List of AnnotatedPair
        jobs: Number of worker processes
        epsilon: Largest score difference treated as a tie

    Returns:
        result: MetricReport

    """
    # Initialize key variables
    applicable = [_ for _ in pairs if _.task in metric.functions]
    skipped = len(pairs) - len(applicable)
    if bool(applicable) is False:
        raise HarnessError(
            "Metric {} applies to none of the {} pair(s)".format(
                metric.name, len(pairs)
            )
        )
    arguments = [
        _META(metric=metric, pair=_, epsilon=epsilon) for _ in applicable
    ]

    # Rank the pairs
    if int(jobs) > 1 and len(arguments) > 1:
        with Pool(processes=int(jobs)) as pool:
            outcomes = pool.map(_rank, arguments)
    else:
        outcomes = [_rank(_) for _ in arguments]

    # Sort outcomes. Each ranking keeps the human label of its own pair
    ranked = []
    failures = []
    for pair, outcome in zip(applicable, outcomes):
        if isinstance(outcome, ExceptionWrapper):
            outcome.re_raise()
        if isinstance(outcome, PairFailure):
            failures.append(outcome)
        else:
            ranked.append((outcome, pair.human_label))
    ranked.sort(key=lambda _: _natural(_[0].pair_id))
    rankings = [_[0] for _ in ranked]
    failures.sort(key=lambda _: _natural(_.pair_id))

    if bool(rankings) is False:
        raise HarnessError(
            "Metric {} failed on all {} pair(s)".format(
                metric.name, len(applicable)
            )
        )

    # Correlate overall and per task
    (tau, tau_error) = _tau(ranked)
    per_task = {}
    per_task_errors = {}
    for task in Task:
        subset = [_ for _ in ranked if _[0].task is task]
        if bool(subset) is False:
            continue
        (task_tau, task_error) = _tau(subset)
        if task_tau is None:
            per_task_errors[task] = task_error
        else:
            per_task[task] = task_tau

    # Log
    log.log2info(
        1027,
        "Metric {}: {} ranked, {} failed, {} skipped, tau {}".format(
            metric.name,
            len(rankings),
            len(failures),
            skipped,
            tau_error if tau is None else "{:.4f}".format(tau.tau),
        ),
    )

    # Return
    result = MetricReport(
        metric_name=metric.name,
        variant=TAU_VARIANT,
        rankings=rankings,
        tau=tau,
        tau_error=tau_error,
        per_task=per_task,
        per_task_errors=per_task_errors,
        failures=failures,
        skipped=skipped,
    )
    return result


def evaluate_metrics(metrics, pairs, jobs=1, epsilon=TIE_EPSILON):
    """Evaluate several metrics over the same pairs.

    Metrics that apply to none of the pairs are skipped.

    Args:
        metrics: List of Metric
        pairs: List of AnnotatedPair
        jobs: Number of worker processes
        epsilon: Largest score difference treated as a tie

    Returns:
        result: List of MetricReport in metric order

    """
    # Initialize key variables
    result = []
    tasks = set(_.task for _ in pairs)

    for metric in metrics:
        if bool(tasks & set(metric.functions)) is False:
            log.log2warning(
                1028,
                "Skipping metric {}: no pairs of its task(s)".format(
                    metric.name
                ),
            )
            continue
        result.append(
            evaluate_metric(metric, pairs, jobs=jobs, epsilon=epsilon)
        )

    # Return
    return result


def _rank(argument):
    """Rank one pair in a worker.

    Args:
        argument: _META

    Returns:
        result: PairRanking, PairFailure or ExceptionWrapper

    """
    # Process
    try:
        result = rank_pair(
            argument.metric, argument.pair, epsilon=argument.epsilon
        )
    except RankingError as error:
        log.log2debug(1029, str(error))
        result = PairFailure(
            pair_id=error.pair_id,
            task=argument.pair.task,
            message=error.reason,
        )
    except Exception as error:
        result = ExceptionWrapper(error)
    return result


def _tau(ranked):
    """Correlate rankings with human labels.

    Args:
        ranked: List of (PairRanking, human PreferenceLabel) tuples

    Returns:
        result: Tuple of (TauResult or None, error message or None)

    """
    # Return
    try:
        tau = kendall_tau_b(
            [_[0].label for _ in ranked], [_[1] for _ in ranked]
        )
    except (HarnessError, DegenerateVarianceError) as error:
        return (None, str(error))
    return (tau, None)


def _p_value(metric, human):
    """Get the two-sided tau-b p-value.

    Args:
        metric: List of ordinals
        human: List of ordinals

    Returns:
        result: float, None when undefined

    """
    # Return
    with np.errstate(all="ignore"):
        result = stats.kendalltau(metric, human, variant="b").pvalue
    if result is None or math.isnan(result):
        return None
    return float(result)


def _ordinal(label):
    """Encode a label as an ordinal.

    Args:
        label: PreferenceLabel or integer ordinal

    Returns:
        result: +1, 0 or -1

    """
    # Return
    if isinstance(label, PreferenceLabel):
        return label.ordinal
    result = _sign(int(label))
    return result


def _sign(value):
    """Get the sign of a number.

    Args:
        value: Number

    Returns:
        result: +1, 0 or -1

    """
    return (value > 0) - (value < 0)


def _natural(pair_id):
    """Create a sort key that orders "2" before "10".

    Args:
        pair_id: Identifier

    Returns:
        result: Tuple key

    """
    # Return
    result = tuple(
        (0, int(_), "") if _.isdigit() else (1, 0, _)
        for _ in re.findall(r"\d+|\D+", str(pair_id))
    )
    return result
