"""
Objective, capacity violation and penalised fitness.

    C = max(sum(x_i * w_i) - W, 0)
    d = max(1 + ln(ln(n)), 1)
    Z = sum(x_i * v_i) - (100 / d) * C          (penalized)
    Z = sum(x_i * v_i) if C == 0 else 0         (zero_if_invalid)

The damping d uses natural logarithms and is clamped at 1, so the penalty
coefficient 100 / d never exceeds 100 (ln(ln(2)) is negative).
"""

import math

import numpy as np

from knapsack_ca.exceptions import DimensionError, DomainError
from knapsack_ca.knapsack.problem import EvaluatedSolution, FitnessMode, Instance, Solution

PENALTY_SCALE = 100.0


def _check_length(inst: Instance, sol: Solution) -> None:
    if sol.n != inst.n:
        raise DimensionError(f"solution has {sol.n} bits but the instance has {inst.n} items")


def total_value(inst: Instance, sol: Solution) -> float:
    _check_length(inst, sol)
    return float(np.dot(sol.bits, inst.values))


def total_weight(inst: Instance, sol: Solution) -> float:
    _check_length(inst, sol)
    return float(np.dot(sol.bits, inst.weights))


def violation(inst: Instance, sol: Solution) -> float:
    """Amount by which the packed weight exceeds capacity; 0 exactly when feasible."""
    return max(total_weight(inst, sol) - inst.capacity, 0.0)


def dim_damping(n: int) -> float:
    """
    Dimensionality damping d = 1 + ln(ln(n)), floored at 1.

    Example:
        dim_damping(10)
        -> 1.8340...
    """
    if n < 2:
        raise DomainError(f"dimensionality damping needs n >= 2, got {n}")
    return max(1.0 + math.log(math.log(n)), 1.0)


def penalty_coefficient(n: int) -> float:
    return PENALTY_SCALE / dim_damping(n)


def evaluate(inst: Instance, sol: Solution, mode: FitnessMode = FitnessMode.PENALIZED) -> EvaluatedSolution:
    _check_length(inst, sol)
    value = float(np.dot(sol.bits, inst.values))
    weight = float(np.dot(sol.bits, inst.weights))
    excess = max(weight - inst.capacity, 0.0)

    if excess == 0.0:
        fitness = value
    elif mode is FitnessMode.ZERO_IF_INVALID:
        fitness = 0.0
    else:
        # n == 1 has no damping defined; use the undamped coefficient
        coefficient = penalty_coefficient(inst.n) if inst.n >= 2 else PENALTY_SCALE
        fitness = value - coefficient * excess

    return EvaluatedSolution(
        solution=sol,
        total_value=value,
        total_weight=weight,
        violation=excess,
        fitness=fitness,
    )
