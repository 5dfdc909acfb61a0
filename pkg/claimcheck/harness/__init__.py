"""Correlate metric preferences with human pairwise judgments."""

# Standard imports
from collections import namedtuple

# A named metric. functions maps each Task it applies to onto a callable
# taking (input_claims, output, required_kind) and returning a float
Metric = namedtuple("Metric", "name functions description", defaults=("",))

PairRanking = namedtuple("PairRanking", "pair_id task label score_a score_b")
PairFailure = namedtuple("PairFailure", "pair_id task message")

TauResult = namedtuple(
    "TauResult",
    "tau concordant discordant ties_metric ties_human ties_both n_pairs "
    "p_value variant",
)

MetricReport = namedtuple(
    "MetricReport",
    "metric_name variant rankings tau tau_error per_task per_task_errors "
    "failures skipped",
    defaults=(0,),
)
