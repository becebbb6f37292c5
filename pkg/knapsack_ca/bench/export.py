"""
CSV and text output for experiment results.

Stats: instance,algorithm,runs,best,worst,average,median,std_dev,avg_time_s,optimum
Trace: iteration,best_so_far,p_c,p_m,belief_min,belief_max
Belief snapshots: iteration,elite_count,elite_fitness,gene_frequency

Missing values are written as empty cells. Every table is validated before
anything reaches the sink.
"""

import io
from typing import IO, Iterable, Optional, Sequence

import pandas as pd

from knapsack_ca.bench.experiment import RunStats
from knapsack_ca.cultural.belief_space import BeliefSnapshot
from knapsack_ca.evolution.trace import ConvergenceTrace
from knapsack_ca.logger import setup_logger
from knapsack_ca.validations.validate_outputs import validate_beliefs, validate_stats, validate_trace

logger = setup_logger("bench.export")

STATS_COLUMNS = ["instance", "algorithm", "runs", "best", "worst", "average", "median", "std_dev", "avg_time_s", "optimum"]
STATS_DTYPES = {
    "runs": "int64",
    "best": "float64",
    "worst": "float64",
    "average": "float64",
    "median": "float64",
    "std_dev": "float64",
    "avg_time_s": "float64",
    "optimum": "float64",
}
BELIEF_COLUMNS = ["iteration", "elite_count", "elite_fitness", "gene_frequency"]


def _write(df: pd.DataFrame, sink: IO) -> None:
    text = df.to_csv(index=False, lineterminator="\n")
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(text.encode("utf-8"))


def stats_frame(stats: Iterable[RunStats], omit_timing: bool = False) -> pd.DataFrame:
    df = pd.DataFrame([s.to_row() for s in stats], columns=STATS_COLUMNS).astype(STATS_DTYPES)
    if omit_timing:
        df["avg_time_s"] = float("nan")
    return df


def emit_csv(stats: "Sequence[RunStats] | ConvergenceTrace", sink: IO, omit_timing: bool = False) -> None:
    """
    Write a stats table (or, given a ConvergenceTrace, a trace table) with its header row.

    `sink` may be a binary or a text stream. With `omit_timing` the
    avg_time_s cells are left empty so repeated runs produce identical bytes.
    """
    if isinstance(stats, ConvergenceTrace):
        emit_trace_csv(stats, sink)
        return

    df = validate_stats(stats_frame(stats, omit_timing))
    _write(df, sink)
    logger.debug(f"Wrote {len(df)} stats rows")


def emit_trace_csv(trace: ConvergenceTrace, sink: IO) -> None:
    df = validate_trace(trace.to_frame(), monotone=trace.feasible_from_start)
    _write(df, sink)
    logger.debug(f"Wrote trace of {len(df)} generations")


def _join(values: Sequence[float]) -> str:
    return " ".join(f"{v:g}" for v in values)


def emit_belief_csv(snapshots: Sequence[BeliefSnapshot], sink: IO) -> None:
    """One row per generation; list cells are space-separated."""
    df = pd.DataFrame(
        [
            (s.iteration, len(s.elite_fitness), _join(s.elite_fitness), _join(s.gene_frequency))
            for s in snapshots
        ],
        columns=BELIEF_COLUMNS,
    ).astype({"iteration": "int64", "elite_count": "int64", "elite_fitness": str, "gene_frequency": str})
    df = validate_beliefs(df)
    _write(df, sink)
    logger.debug(f"Wrote {len(df)} belief snapshots")


def format_summary(stats: Sequence[RunStats], literature: Optional[pd.DataFrame] = None) -> str:
    """
    Render results as a fixed-width table grouped by instance.

    Rows from `literature` (see bench.literature) are interleaved per
    instance and labelled "(published)".
    """
    rows = [
        {
            "P": s.instance_name,
            "OP": s.optimum,
            "Method": s.algorithm,
            "Best": s.best,
            "Worst": s.worst,
            "Average": s.average,
            "Median": s.median,
            "Std.dev": s.std_dev,
            "Avg. time (s)": s.avg_time_seconds,
        }
        for s in stats
    ]
    df = pd.DataFrame(rows, columns=["P", "OP", "Method", "Best", "Worst", "Average", "Median", "Std.dev", "Avg. time (s)"])

    if literature is not None and not literature.empty:
        measured = set(df["P"])
        published = literature[literature["instance"].isin(measured)]
        extra = pd.DataFrame(
            {
                "P": published["instance"],
                "OP": published["instance"].map(dict(zip(df["P"], df["OP"]))),
                "Method": published["method"] + " (published)",
                "Best": published["best"],
                "Worst": published["worst"],
                "Average": published["average"],
                "Median": published["median"],
                "Std.dev": float("nan"),
                "Avg. time (s)": published["avg_time_s"],
            }
        )
        order = {name: i for i, name in enumerate(dict.fromkeys(df["P"]))}
        df = pd.concat([df, extra], ignore_index=True)
        df = df.sort_values("P", key=lambda s: s.map(order), kind="stable")

    if df.empty:
        return "(no results)"
    return df.to_string(index=False, na_rep="-", float_format=lambda x: f"{x:.4f}".rstrip("0").rstrip("."))
