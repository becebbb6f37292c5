"""
Genetic algorithm baseline: configuration, rate schedule, operators and the
generational engine the cultural algorithm builds on.
"""

from .config import EvolutionConfig, MutationScheme, RateScheduleKind
from .engine import Population, RunResult, ga_step, init_population, run_ga, solve_ga
from .operators import bit_flip_mutation, select_parent, single_point_crossover
from .rates import RateSchedule, adaptive_rates
from .trace import TRACE_COLUMNS, ConvergenceTrace, TraceRecord

__all__ = [
    "EvolutionConfig",
    "MutationScheme",
    "RateScheduleKind",
    "RateSchedule",
    "adaptive_rates",
    "select_parent",
    "single_point_crossover",
    "bit_flip_mutation",
    "Population",
    "RunResult",
    "init_population",
    "ga_step",
    "run_ga",
    "solve_ga",
    "TRACE_COLUMNS",
    "TraceRecord",
    "ConvergenceTrace",
]
