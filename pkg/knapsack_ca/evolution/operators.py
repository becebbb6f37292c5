"""
Selection and variation operators on bit-vector solutions.

Every operator takes an explicit numpy Generator so a run is reproducible
from its seed alone.
"""

from typing import Optional, Sequence

import numpy as np

from knapsack_ca.exceptions import DimensionError
from knapsack_ca.knapsack.problem import EvaluatedSolution, Solution
from knapsack_ca.logger import setup_logger

logger = setup_logger("evolution.operators")


def select_parent(members: Sequence[EvaluatedSolution], rng: np.random.Generator) -> EvaluatedSolution:
    """
    Binary tournament: draw two members with replacement, keep the fitter.

    A tie goes to the first draw. Only comparisons are used, so negative
    (penalised) fitness values need no shifting.
    """
    if not members:
        raise ValueError("cannot select from an empty population")
    first, second = rng.integers(0, len(members), size=2)
    a, b = members[int(first)], members[int(second)]
    return b if b.fitness > a.fitness else a


def single_point_crossover(
    a: Solution,
    b: Solution,
    rng: np.random.Generator,
    point: Optional[int] = None,
) -> tuple[Solution, Solution]:
    """
    Cut both parents at k in {1, ..., n-1} and swap the tails.

        child1 = a[:k] + b[k:]
        child2 = b[:k] + a[k:]

    `point` fixes k instead of drawing it. Parents shorter than two bits have
    no cut point and are returned as copies.
    """
    if a.n != b.n:
        raise DimensionError(f"parents differ in length ({a.n} != {b.n})")

    n = a.n
    if n < 2:
        logger.debug("Crossover on fewer than 2 bits: returning copies of the parents")
        return Solution(a.bits), Solution(b.bits)

    k = int(rng.integers(1, n)) if point is None else point
    if not 1 <= k <= n - 1:
        raise ValueError(f"crossover point must lie in [1, {n - 1}], got {k}")

    child1 = np.concatenate([a.bits[:k], b.bits[k:]])
    child2 = np.concatenate([b.bits[:k], a.bits[k:]])
    return Solution(child1), Solution(child2)


def bit_flip_mutation(s: Solution, p_m: float, rng: np.random.Generator) -> Solution:
    """Flip every bit independently with probability p_m."""
    if not 0.0 <= p_m <= 1.0:
        raise ValueError(f"mutation rate must lie in [0, 1], got {p_m}")
    flips = rng.random(s.n) < p_m
    if not flips.any():
        return s
    return Solution(s.bits ^ flips)
