"""
Crossover/mutation rate schedule.

    p_c = min(P_c / d + floor(iter / 1000) * 0.1, 1)
    p_m = 1 - p_c

P_c is the configured base rate, divided by the damping once per generation;
the schedule never feeds its own output back in.
"""

from dataclasses import dataclass

from knapsack_ca.evolution.config import EvolutionConfig, RateScheduleKind
from knapsack_ca.knapsack.fitness import dim_damping

STEP_ITERATIONS = 1000
STEP_INCREMENT = 0.1


@dataclass(frozen=True)
class RateSchedule:
    p_c: float
    p_m: float


def _damping(n: int) -> float:
    # Single-item instances have no damping; treat as undamped
    return dim_damping(n) if n >= 2 else 1.0


def adaptive_rates(cfg: EvolutionConfig, n: int, iteration: int) -> RateSchedule:
    """
    Rates for generation `iteration` (1-based) of a run on an n-item instance.

    Example:
        adaptive_rates(EvolutionConfig(), n=10, iteration=1)
        -> RateSchedule(p_c=0.4907..., p_m=0.5092...)
    """
    if iteration < 1:
        raise ValueError(f"iteration is 1-based, got {iteration}")

    if cfg.rate_schedule is RateScheduleKind.STATIC:
        p_c = cfg.base_crossover_rate
        p_m = cfg.base_mutation_rate
    else:
        p_c = min(cfg.base_crossover_rate / _damping(n) + (iteration // STEP_ITERATIONS) * STEP_INCREMENT, 1.0)
        p_m = 1.0 - p_c

    if cfg.mutation_rate_override is not None:
        p_m = cfg.mutation_rate_override
    return RateSchedule(p_c=p_c, p_m=p_m)
