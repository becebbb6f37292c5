"""
Situational belief space: a small archive of distinct elite solutions.

The archive is seeded with the best tenth of the initial population and
afterwards only admits a candidate fitter than its weakest elite. A
candidate that is sufficiently different from every elite evicts the
weakest one; a candidate close to some elites has to beat all of them and
takes their place. The archive never holds two identical bit vectors.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from knapsack_ca.knapsack.problem import EvaluatedSolution
from knapsack_ca.logger import setup_logger

logger = setup_logger("cultural.belief_space")


def belief_capacity(population_size: int, fraction: float) -> int:
    """ceil(fraction * population_size), at least 1."""
    # round() absorbs float noise such as 0.1 * 30 == 3.0000000000000004
    return max(1, math.ceil(round(fraction * population_size, 9)))


@dataclass(frozen=True)
class BeliefSnapshot:
    iteration: int
    elite_fitness: tuple[float, ...]
    gene_frequency: tuple[float, ...]


@dataclass(frozen=True)
class BeliefSpace:
    elites: tuple[EvaluatedSolution, ...]
    capacity: int
    min_difference_fraction: float = 0.5

    def __post_init__(self) -> None:
        if self.capacity < 1:
            raise ValueError(f"belief space capacity must be at least 1, got {self.capacity}")
        if len(self.elites) > self.capacity:
            raise ValueError(f"{len(self.elites)} elites exceed the capacity of {self.capacity}")

    def __len__(self) -> int:
        return len(self.elites)

    @property
    def is_full(self) -> bool:
        return len(self.elites) >= self.capacity

    @property
    def min_fitness(self) -> float:
        return self.elites[-1].fitness

    @property
    def max_fitness(self) -> float:
        return self.elites[0].fitness

    def difference_threshold(self, candidate: EvaluatedSolution) -> float:
        return max(self.min_difference_fraction * candidate.solution.count_selected(), 1.0)

    def crowd_of(self, candidate: EvaluatedSolution) -> list[int]:
        """Indices of the elites that differ from `candidate` in fewer positions than the threshold."""
        threshold = self.difference_threshold(candidate)
        return [i for i, e in enumerate(self.elites) if candidate.solution.hamming(e.solution) < threshold]

    def is_diverse(self, candidate: EvaluatedSolution) -> bool:
        return not self.crowd_of(candidate)

    def accept(self, candidate: EvaluatedSolution) -> "BeliefSpace":
        """
        Offer `candidate` to the archive; returns self when it is refused.

        The candidate must beat the weakest elite. Elites differing from it in
        fewer than max(min_difference_fraction * selected(candidate), 1)
        positions form its crowd. With an empty crowd the candidate joins and,
        when the archive is full, evicts the weakest elite. Otherwise it must
        beat every crowd member and then replaces the whole crowd.
        """
        if self.elites and candidate.fitness <= self.min_fitness:
            return self

        crowd = self.crowd_of(candidate)
        if crowd:
            # Elites are sorted, so the first crowd member is its fittest
            if candidate.fitness <= self.elites[crowd[0]].fitness:
                return self
            kept = [e for i, e in enumerate(self.elites) if i not in crowd]
        elif self.is_full:
            kept = list(self.elites[:-1])
        else:
            kept = list(self.elites)

        kept.append(candidate)
        # sorted() is stable: a newcomer ranks after elites of equal fitness
        ranked = tuple(sorted(kept, key=lambda e: e.fitness, reverse=True))
        logger.debug(
            f"Admitted elite with fitness {candidate.fitness:g}, replacing {len(crowd) or int(self.is_full)}; "
            f"weakest elite now {ranked[-1].fitness:g}"
        )
        return BeliefSpace(ranked, self.capacity, self.min_difference_fraction)

    def gene_frequency(self) -> np.ndarray:
        """Share of elites that pack each item. Diagnostic only; search never reads it."""
        return np.vstack([e.bits for e in self.elites]).mean(axis=0)

    def snapshot(self, iteration: int) -> BeliefSnapshot:
        return BeliefSnapshot(
            iteration=iteration,
            elite_fitness=tuple(float(e.fitness) for e in self.elites),
            gene_frequency=tuple(float(f) for f in self.gene_frequency()),
        )


def init_belief_space(
    members: Sequence[EvaluatedSolution],
    fraction: float = 0.10,
    min_difference_fraction: float = 0.5,
) -> BeliefSpace:
    """
    The best ceil(fraction * len(members)) distinct members, fittest first.

    Ties in fitness go to the lower population index. Duplicate bit vectors
    are skipped in favour of the next-best distinct member, so a population
    lacking diversity yields fewer elites than the capacity.
    """
    if not members:
        raise ValueError("cannot seed a belief space from an empty population")

    capacity = belief_capacity(len(members), fraction)
    fitness = np.array([m.fitness for m in members])
    order = np.argsort(-fitness, kind="stable")

    elites: list[EvaluatedSolution] = []
    seen: set[bytes] = set()
    for index in order:
        member = members[int(index)]
        key = member.bits.tobytes()
        if key in seen:
            continue
        seen.add(key)
        elites.append(member)
        if len(elites) == capacity:
            break

    if len(elites) < capacity:
        logger.debug(f"Belief space seeded with {len(elites)} of {capacity} elites: population lacks distinct members")
    return BeliefSpace(tuple(elites), capacity, min_difference_fraction)


def accept(bs: BeliefSpace, candidate: EvaluatedSolution) -> BeliefSpace:
    return bs.accept(candidate)
