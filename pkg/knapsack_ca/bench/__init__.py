"""
Benchmark harness: builtin and random instances, multi-run statistics and
CSV/summary output.
"""

from .experiment import Algorithm, RunStats, baseline_stats, run_experiment, run_repeated, summarize_runs
from .export import emit_belief_csv, emit_csv, emit_trace_csv, format_summary
from .literature import literature_results
from .problems import RANDOM_SUITE_RECIPES, builtin_problem, builtin_problems, random_suite

__all__ = [
    "Algorithm",
    "RunStats",
    "run_experiment",
    "run_repeated",
    "summarize_runs",
    "baseline_stats",
    "emit_csv",
    "emit_trace_csv",
    "emit_belief_csv",
    "format_summary",
    "literature_results",
    "builtin_problems",
    "builtin_problem",
    "random_suite",
    "RANDOM_SUITE_RECIPES",
]
