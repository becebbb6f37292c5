"""
Multi-run experiment harness.

Run i of an experiment uses seed base_seed + i, so an experiment is fully
determined by (instance, config, runs). Runs are independent and may be
spread over a process pool; results are always aggregated in seed order.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional

import pandas as pd

from knapsack_ca import oracle
from knapsack_ca.cultural.algorithm import solve_ca
from knapsack_ca.evolution.config import EvolutionConfig
from knapsack_ca.evolution.engine import RunResult, solve_ga
from knapsack_ca.knapsack.problem import Instance
from knapsack_ca.logger import setup_logger

logger = setup_logger("bench.experiment")


class Algorithm(str, Enum):
    GA = "GA"
    CA = "CA"
    GREEDY = "greedy"
    ORACLE = "oracle"

    @classmethod
    def parse(cls, value: "str | Algorithm") -> "Algorithm":
        if isinstance(value, cls):
            return value
        for member in cls:
            if member.value.lower() == str(value).strip().lower():
                return member
        raise ValueError(f"Unknown algorithm '{value}' (expected ga, ca, greedy or oracle)")

    @property
    def is_stochastic(self) -> bool:
        return self in (Algorithm.GA, Algorithm.CA)


@dataclass(frozen=True)
class RunStats:
    """Aggregate of per-run best fitness values; std_dev is the population standard deviation."""

    algorithm: str
    instance_name: str
    runs: int
    best: float
    worst: float
    average: float
    median: float
    std_dev: float
    avg_time_seconds: Optional[float]
    optimum: Optional[float] = None

    def to_row(self) -> dict:
        row = asdict(self)
        return {
            "instance": row.pop("instance_name"),
            "algorithm": row.pop("algorithm"),
            "runs": row["runs"],
            "best": row["best"],
            "worst": row["worst"],
            "average": row["average"],
            "median": row["median"],
            "std_dev": row["std_dev"],
            "avg_time_s": row["avg_time_seconds"],
            "optimum": row["optimum"],
        }


def _run_once(inst: Instance, algorithm: Algorithm, cfg: EvolutionConfig, record_beliefs: bool) -> RunResult:
    if algorithm is Algorithm.CA:
        return solve_ca(inst, cfg, record_beliefs=record_beliefs)
    return solve_ga(inst, cfg)


def run_repeated(
    inst: Instance,
    algorithm: "str | Algorithm",
    cfg: EvolutionConfig,
    runs: int,
    jobs: int = 1,
    record_beliefs: bool = False,
) -> list[RunResult]:
    """
    `runs` independent GA/CA runs with seeds cfg.seed + 0 .. cfg.seed + runs - 1.

    Results come back in seed order whatever `jobs` is.
    """
    algorithm = Algorithm.parse(algorithm)
    if not algorithm.is_stochastic:
        raise ValueError(f"{algorithm.value} is deterministic; use baseline_stats")
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")

    configs = [cfg.with_seed(cfg.seed + i) for i in range(runs)]
    if jobs <= 1 or runs == 1:
        return [_run_once(inst, algorithm, c, record_beliefs) for c in configs]

    logger.info(f"Dispatching {runs} {algorithm.value} runs on {inst.name} to {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(
            executor.map(
                _run_once,
                [inst] * runs,
                [algorithm] * runs,
                configs,
                [record_beliefs] * runs,
            )
        )


def aggregate(
    inst: Instance,
    algorithm: "str | Algorithm",
    best_values: list[float],
    elapsed: list[float],
) -> RunStats:
    algorithm = Algorithm.parse(algorithm)
    values = pd.Series(best_values, dtype="float64")
    stats = RunStats(
        algorithm=algorithm.value,
        instance_name=inst.name or "unnamed",
        runs=len(values),
        best=float(values.max()),
        worst=float(values.min()),
        average=float(values.mean()),
        median=float(values.median()),
        std_dev=float(values.std(ddof=0)),
        avg_time_seconds=float(pd.Series(elapsed, dtype="float64").mean()),
        optimum=inst.known_optimum,
    )

    if stats.optimum is not None and stats.best > stats.optimum + oracle.OPTIMUM_TOLERANCE:
        logger.warning(
            f"{stats.algorithm} on {stats.instance_name} reports {stats.best:g}, "
            f"above the known optimum {stats.optimum:g}"
        )
    return stats


def summarize_runs(inst: Instance, algorithm: "str | Algorithm", results: list[RunResult]) -> RunStats:
    return aggregate(
        inst,
        algorithm,
        [r.best.fitness for r in results],
        [r.elapsed_seconds for r in results],
    )


def baseline_stats(
    inst: Instance,
    algorithm: "str | Algorithm",
    brute_force_max_items: int = oracle.BRUTE_FORCE_MAX_ITEMS,
    dp_max_cells: int = oracle.DP_MAX_CELLS,
) -> RunStats:
    """Single-run row for the greedy lower bound or the exact oracle."""
    algorithm = Algorithm.parse(algorithm)
    if algorithm.is_stochastic:
        raise ValueError(f"{algorithm.value} is stochastic; use run_experiment")

    start = time.perf_counter()
    if algorithm is Algorithm.GREEDY:
        result = oracle.greedy_solve(inst)
    else:
        result = oracle.solve(inst, "auto", brute_force_max_items, dp_max_cells)
    elapsed = time.perf_counter() - start
    return aggregate(inst, algorithm, [result.optimum_value], [elapsed])


def run_experiment(
    inst: Instance,
    algorithm: "str | Algorithm",
    cfg: EvolutionConfig,
    runs: int,
    jobs: int = 1,
) -> RunStats:
    """
    Aggregate `runs` seeded runs into best/worst/average/median/std_dev and mean wall time.

    Deterministic baselines (greedy, oracle) are run once whatever `runs` is.
    """
    algorithm = Algorithm.parse(algorithm)
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if not algorithm.is_stochastic:
        return baseline_stats(inst, algorithm)

    stats = summarize_runs(inst, algorithm, run_repeated(inst, algorithm, cfg, runs, jobs))
    logger.info(
        f"{stats.algorithm} on {stats.instance_name}: best {stats.best:g}, worst {stats.worst:g}, "
        f"average {stats.average:g} over {stats.runs} runs"
    )
    return stats
