"""
Generational GA engine shared by the GA and CA solvers.

A generation keeps the `elitism_count` fittest members unchanged and fills
the rest with children: pick two parents, recombine them with probability
p_c (otherwise clone them), mutate both children, evaluate.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from knapsack_ca.evolution.config import EvolutionConfig, MutationScheme
from knapsack_ca.evolution.operators import bit_flip_mutation, select_parent, single_point_crossover
from knapsack_ca.evolution.rates import RateSchedule, adaptive_rates
from knapsack_ca.evolution.trace import ConvergenceTrace, TraceRecord
from knapsack_ca.knapsack.fitness import evaluate
from knapsack_ca.knapsack.problem import EvaluatedSolution, Instance, Solution
from knapsack_ca.logger import setup_logger

logger = setup_logger("evolution.engine")

ParentPicker = Callable[["Population", np.random.Generator], tuple[EvaluatedSolution, EvaluatedSolution]]


@dataclass(frozen=True)
class Population:
    members: tuple[EvaluatedSolution, ...]
    generation: int = 0

    def __len__(self) -> int:
        return len(self.members)

    def ranked(self) -> list[int]:
        """Member indices by fitness, best first; equal fitness keeps population order."""
        fitness = np.array([m.fitness for m in self.members])
        return [int(i) for i in np.argsort(-fitness, kind="stable")]

    def best(self) -> EvaluatedSolution:
        return self.members[self.ranked()[0]]


@dataclass
class RunResult:
    """Everything a single GA/CA run produced."""

    algorithm: str
    best: EvaluatedSolution
    trace: ConvergenceTrace
    elapsed_seconds: float
    seed: int
    evaluations: int
    belief_snapshots: list[Any] = field(default_factory=list)


def outranks(a: EvaluatedSolution, b: EvaluatedSolution) -> bool:
    """Feasibility-first order: any feasible beats any infeasible, then higher fitness wins."""
    if a.feasible != b.feasible:
        return a.feasible
    return a.fitness > b.fitness


class Incumbent:
    """Best solution seen during a run, under the feasibility-first order."""

    def __init__(self) -> None:
        self.best: Optional[EvaluatedSolution] = None

    def offer_all(self, members: tuple[EvaluatedSolution, ...]) -> None:
        for member in members:
            if self.best is None or outranks(member, self.best):
                self.best = member


def mutation_gene_rate(p_m: float, n: int, scheme: MutationScheme) -> float:
    if scheme is MutationScheme.PER_CHROMOSOME:
        return p_m / n
    return p_m


def init_population(
    inst: Instance,
    cfg: EvolutionConfig,
    rng: Optional[np.random.Generator] = None,
) -> Population:
    """Uniform random bit vectors, evaluated; seeded from cfg.seed unless a generator is passed."""
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    bits = rng.random((cfg.population_size, inst.n)) < 0.5
    members = tuple(evaluate(inst, Solution(row), cfg.fitness_mode) for row in bits)
    return Population(members, generation=0)


def breed(
    inst: Instance,
    a: EvaluatedSolution,
    b: EvaluatedSolution,
    rates: RateSchedule,
    cfg: EvolutionConfig,
    rng: np.random.Generator,
) -> tuple[EvaluatedSolution, EvaluatedSolution]:
    if rng.random() < rates.p_c:
        child1, child2 = single_point_crossover(a.solution, b.solution, rng)
    else:
        child1, child2 = a.solution, b.solution

    gene_rate = mutation_gene_rate(rates.p_m, inst.n, cfg.mutation_scheme)
    child1 = bit_flip_mutation(child1, gene_rate, rng)
    child2 = bit_flip_mutation(child2, gene_rate, rng)
    return evaluate(inst, child1, cfg.fitness_mode), evaluate(inst, child2, cfg.fitness_mode)


def next_generation(
    inst: Instance,
    pop: Population,
    cfg: EvolutionConfig,
    rng: np.random.Generator,
    pick_parents: ParentPicker,
) -> Population:
    """Elites plus children bred from parent pairs chosen by `pick_parents`."""
    iteration = pop.generation + 1
    rates = adaptive_rates(cfg, inst.n, iteration)

    elites = [pop.members[i] for i in pop.ranked()[: cfg.elitism_count]]
    needed = len(pop) - len(elites)

    children: list[EvaluatedSolution] = []
    while len(children) < needed:
        a, b = pick_parents(pop, rng)
        children.extend(breed(inst, a, b, rates, cfg, rng))

    return Population(tuple(elites + children[:needed]), generation=iteration)


def _tournament_pair(pop: Population, rng: np.random.Generator) -> tuple[EvaluatedSolution, EvaluatedSolution]:
    return select_parent(pop.members, rng), select_parent(pop.members, rng)


def ga_step(inst: Instance, pop: Population, cfg: EvolutionConfig, rng: np.random.Generator) -> Population:
    return next_generation(inst, pop, cfg, rng, _tournament_pair)


def trace_rates(cfg: EvolutionConfig, n: int, iteration: int) -> RateSchedule:
    # Generation 0 is not bred; it reports the rates the first generation will use
    return adaptive_rates(cfg, n, max(iteration, 1))


def solve_ga(inst: Instance, cfg: EvolutionConfig) -> RunResult:
    logger.info(f"GA run on {inst!r} (seed {cfg.seed}, pop {cfg.population_size}, iters {cfg.max_iterations})")
    start = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)

    pop = init_population(inst, cfg, rng)
    incumbent = Incumbent()
    incumbent.offer_all(pop.members)
    trace = ConvergenceTrace()
    evaluations = len(pop)

    rates = trace_rates(cfg, inst.n, 0)
    trace.append(TraceRecord(0, incumbent.best.fitness, rates.p_c, rates.p_m, feasible=incumbent.best.feasible))

    for _ in range(cfg.max_iterations):
        pop = ga_step(inst, pop, cfg, rng)
        evaluations += len(pop) - cfg.elitism_count
        incumbent.offer_all(pop.members)

        rates = trace_rates(cfg, inst.n, pop.generation)
        trace.append(
            TraceRecord(pop.generation, incumbent.best.fitness, rates.p_c, rates.p_m, feasible=incumbent.best.feasible)
        )
        logger.debug(f"GA generation {pop.generation}: best so far {incumbent.best.fitness:g}")

    elapsed = time.perf_counter() - start
    logger.info(
        f"GA run finished: best {incumbent.best.fitness:g} "
        f"({'feasible' if incumbent.best.feasible else 'infeasible'}) in {elapsed:.3f}s"
    )
    return RunResult("GA", incumbent.best, trace, elapsed, cfg.seed, evaluations)


def run_ga(inst: Instance, cfg: EvolutionConfig) -> tuple[EvaluatedSolution, ConvergenceTrace]:
    result = solve_ga(inst, cfg)
    return result.best, result.trace
