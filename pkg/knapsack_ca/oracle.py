"""
Ground-truth solvers and the greedy baseline.

brute_force_solve handles real-valued weights (up to 25 items), dp_solve
handles integer weights up to a table budget, greedy_solve gives a feasible
lower bound for any instance.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from knapsack_ca.exceptions import BudgetError, PreconditionError
from knapsack_ca.knapsack.fitness import total_value, total_weight
from knapsack_ca.knapsack.problem import Instance, Solution
from knapsack_ca.logger import setup_logger

logger = setup_logger("oracle")

BRUTE_FORCE_MAX_ITEMS = 25
DP_MAX_CELLS = 50_000_000

# Items enumerated in one vectorised block by the exhaustive search
_BLOCK_BITS = 20

# Absolute tolerance for comparing real-valued optima
OPTIMUM_TOLERANCE = 1e-4


class OracleMethod(str, Enum):
    BRUTE_FORCE = "brute_force"
    DYNAMIC_PROGRAMMING = "dynamic_programming"
    GREEDY = "greedy"


@dataclass(frozen=True)
class OracleResult:
    """Optimum (or greedy value) with a feasible witness selection."""

    optimum_value: float
    witness: Solution
    method: OracleMethod


def _subset_sums(weights: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Weight and value sums of every subset of the given items.

    Entry k of the result is the subset whose bit j (of k) selects item
    len(items) - 1 - j, so the first item is the most significant bit.
    """
    sums_w = np.zeros(1)
    sums_v = np.zeros(1)
    for w, v in zip(weights[::-1], values[::-1]):
        sums_w = np.concatenate([sums_w, sums_w + w])
        sums_v = np.concatenate([sums_v, sums_v + v])
    return sums_w, sums_v


def brute_force_solve(inst: Instance, max_items: int = BRUTE_FORCE_MAX_ITEMS) -> OracleResult:
    """
    Exact optimum by enumerating all 2^n subsets.

    Among equal-value optima the lexicographically smallest bit vector wins
    (bit 0 is compared first, 0 before 1).
    """
    n = inst.n
    if n > max_items:
        raise BudgetError(f"brute force is limited to {max_items} items, instance has {n}")

    low = min(n, _BLOCK_BITS)
    high = n - low
    low_w, low_v = _subset_sums(inst.weights[high:], inst.values[high:])
    high_w, high_v = _subset_sums(inst.weights[:high], inst.values[:high])

    best_value = -np.inf
    best_code = 0
    # Codes increase with h, then with the low index: first strict maximum is the smallest vector
    for h in range(high_w.size):
        if high_w[h] > inst.capacity:
            continue
        candidate = np.where(low_w + high_w[h] <= inst.capacity, low_v + high_v[h], -np.inf)
        k = int(np.argmax(candidate))
        if candidate[k] > best_value:
            best_value = float(candidate[k])
            best_code = (h << low) | k

    bits = np.array([(best_code >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.bool_)
    witness = Solution(bits)
    result = OracleResult(total_value(inst, witness), witness, OracleMethod.BRUTE_FORCE)
    logger.info(f"Brute force on {inst!r}: optimum {result.optimum_value:g} over {2 ** n} subsets")
    return result


def dp_solve(inst: Instance, max_cells: int = DP_MAX_CELLS) -> OracleResult:
    """Exact optimum by the weight-indexed dynamic program, O(n * W) time and bits of memory."""
    if not inst.has_integer_weights:
        raise PreconditionError("dynamic programming needs integer weights and capacity")

    capacity = int(inst.capacity)
    cells = inst.n * (capacity + 1)
    if cells > max_cells:
        raise BudgetError(f"DP table needs {cells} cells, budget is {max_cells}")

    best = np.zeros(capacity + 1)
    take = np.zeros((inst.n, capacity + 1), dtype=np.bool_)

    for i, (w, v) in enumerate(zip(inst.weights.astype(np.int64), inst.values)):
        if w > capacity:
            continue
        candidate = best[: capacity + 1 - w] + v
        improves = candidate > best[w:]
        take[i, w:] = improves
        best[w:] = np.where(improves, candidate, best[w:])

    bits = np.zeros(inst.n, dtype=np.bool_)
    remaining = capacity
    for i in range(inst.n - 1, -1, -1):
        if take[i, remaining]:
            bits[i] = True
            remaining -= int(inst.weights[i])

    witness = Solution(bits)
    result = OracleResult(total_value(inst, witness), witness, OracleMethod.DYNAMIC_PROGRAMMING)
    logger.info(f"DP on {inst!r}: optimum {result.optimum_value:g} ({cells} cells)")
    return result


def greedy_solve(inst: Instance) -> OracleResult:
    """
    Pack items by value/weight ratio, best first, skipping any that no longer fit.

    Equal ratios keep index order. The value is a lower bound on the optimum.
    """
    order = np.argsort(-(inst.values / inst.weights), kind="stable")
    bits = np.zeros(inst.n, dtype=np.bool_)
    load = 0.0
    for i in order:
        if load + inst.weights[i] <= inst.capacity:
            bits[i] = True
            load += inst.weights[i]

    witness = Solution(bits)
    result = OracleResult(total_value(inst, witness), witness, OracleMethod.GREEDY)
    logger.info(f"Greedy on {inst!r}: value {result.optimum_value:g}, weight {total_weight(inst, witness):g}")
    return result


def solve(
    inst: Instance,
    method: str = "auto",
    brute_force_max_items: int = BRUTE_FORCE_MAX_ITEMS,
    dp_max_cells: int = DP_MAX_CELLS,
) -> OracleResult:
    """
    Dispatch to an oracle by name: auto, dp, brute or greedy.

    auto picks the dynamic program when weights and capacity are integral and
    brute force otherwise.
    """
    method = method.lower()
    if method == "auto":
        method = "dp" if inst.has_integer_weights else "brute"
        logger.info(f"Oracle method auto -> {method}")

    if method in ("dp", OracleMethod.DYNAMIC_PROGRAMMING.value):
        return dp_solve(inst, max_cells=dp_max_cells)
    if method in ("brute", OracleMethod.BRUTE_FORCE.value):
        return brute_force_solve(inst, max_items=brute_force_max_items)
    if method == OracleMethod.GREEDY.value:
        return greedy_solve(inst)
    raise ValueError(f"Unknown oracle method '{method}' (expected auto, dp, brute or greedy)")
