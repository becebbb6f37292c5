"""
Cultural algorithm: the GA engine with a belief space in the loop.

Each generation draws every crossover pair from the belief space and the
population (influence), breeds exactly like the GA, then offers each new
member to the belief space (acceptance).
"""

import time

import numpy as np

from knapsack_ca.cultural.belief_space import BeliefSnapshot, BeliefSpace, init_belief_space
from knapsack_ca.evolution.config import EvolutionConfig
from knapsack_ca.evolution.engine import Incumbent, Population, RunResult, init_population, next_generation, trace_rates
from knapsack_ca.evolution.trace import ConvergenceTrace, TraceRecord
from knapsack_ca.knapsack.problem import EvaluatedSolution, Instance
from knapsack_ca.logger import setup_logger

logger = setup_logger("cultural.algorithm")


def influence_select_parents(
    bs: BeliefSpace,
    pop: Population,
    rng: np.random.Generator,
) -> tuple[EvaluatedSolution, EvaluatedSolution]:
    """First parent uniform over the elites, second uniform over the population."""
    if not len(bs) or not len(pop):
        raise ValueError("influence needs a nonempty belief space and population")
    elite = bs.elites[int(rng.integers(0, len(bs)))]
    mate = pop.members[int(rng.integers(0, len(pop)))]
    return elite, mate


def ca_step(
    inst: Instance,
    pop: Population,
    bs: BeliefSpace,
    cfg: EvolutionConfig,
    rng: np.random.Generator,
) -> tuple[Population, BeliefSpace]:
    offspring = next_generation(inst, pop, cfg, rng, lambda p, r: influence_select_parents(bs, p, r))
    for member in offspring.members:
        bs = bs.accept(member)
    return offspring, bs


def _record(generation: int, best: EvaluatedSolution, bs: BeliefSpace, cfg: EvolutionConfig, n: int) -> TraceRecord:
    rates = trace_rates(cfg, n, generation)
    return TraceRecord(generation, best.fitness, rates.p_c, rates.p_m, bs.min_fitness, bs.max_fitness, best.feasible)


def solve_ca(inst: Instance, cfg: EvolutionConfig, record_beliefs: bool = False) -> RunResult:
    """
    One seeded CA run.

    With `record_beliefs` the result carries a BeliefSnapshot per generation
    (elite fitnesses and per-item inclusion frequency).
    """
    logger.info(f"CA run on {inst!r} (seed {cfg.seed}, pop {cfg.population_size}, iters {cfg.max_iterations})")
    start = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)

    pop = init_population(inst, cfg, rng)
    bs = init_belief_space(pop.members, cfg.belief_fraction, cfg.min_difference_fraction)
    incumbent = Incumbent()
    incumbent.offer_all(pop.members)

    trace = ConvergenceTrace()
    trace.append(_record(0, incumbent.best, bs, cfg, inst.n))
    snapshots: list[BeliefSnapshot] = [bs.snapshot(0)] if record_beliefs else []
    evaluations = len(pop)

    for _ in range(cfg.max_iterations):
        pop, bs = ca_step(inst, pop, bs, cfg, rng)
        evaluations += len(pop) - cfg.elitism_count
        incumbent.offer_all(pop.members)

        trace.append(_record(pop.generation, incumbent.best, bs, cfg, inst.n))
        if record_beliefs:
            snapshots.append(bs.snapshot(pop.generation))
        logger.debug(
            f"CA generation {pop.generation}: best so far {incumbent.best.fitness:g}, "
            f"belief space [{bs.min_fitness:g}, {bs.max_fitness:g}]"
        )

    elapsed = time.perf_counter() - start
    logger.info(
        f"CA run finished: best {incumbent.best.fitness:g} "
        f"({'feasible' if incumbent.best.feasible else 'infeasible'}) in {elapsed:.3f}s"
    )
    return RunResult("CA", incumbent.best, trace, elapsed, cfg.seed, evaluations, snapshots)


def run_ca(inst: Instance, cfg: EvolutionConfig) -> tuple[EvaluatedSolution, ConvergenceTrace]:
    result = solve_ca(inst, cfg)
    return result.best, result.trace
