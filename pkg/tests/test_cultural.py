"""
Tests for the belief space and the cultural algorithm loop.
"""

import numpy as np
import pytest

from knapsack_ca.bench.problems import builtin_problem
from knapsack_ca.cultural.algorithm import ca_step, influence_select_parents, run_ca, solve_ca
from knapsack_ca.cultural.belief_space import BeliefSpace, accept, belief_capacity, init_belief_space
from knapsack_ca.evolution.config import EvolutionConfig
from knapsack_ca.evolution.engine import Population, init_population
from knapsack_ca.knapsack.fitness import evaluate
from knapsack_ca.knapsack.generator import generate_random_instance
from knapsack_ca.knapsack.problem import Solution


def _members(inst, bit_rows):
    return tuple(evaluate(inst, Solution.from_bits(bits)) for bits in bit_rows)


@pytest.mark.unit
class TestBeliefInit:
    """Test suite for seeding the belief space."""

    @pytest.mark.parametrize("size, expected", [(100, 10), (30, 3), (25, 3), (5, 1), (2, 1)])
    def test_capacity_is_ceiling_of_ten_percent(self, size, expected):
        """Test ceil(0.10 * population_size), including float-noise cases."""
        assert belief_capacity(size, 0.10) == expected

    def test_population_of_100_gives_10_elites(self):
        """Test that a default-sized random population seeds 10 elites."""
        inst = builtin_problem("P1")
        pop = init_population(inst, EvolutionConfig(seed=0))
        bs = init_belief_space(pop.members)
        assert bs.capacity == 10
        assert len(bs) == 10

    def test_elites_are_top_members_sorted(self):
        """Test that elites are sorted and dominate every non-elite."""
        inst = builtin_problem("P2")
        pop = init_population(inst, EvolutionConfig(population_size=50, seed=2))
        bs = init_belief_space(pop.members)
        elite_fitness = [e.fitness for e in bs.elites]
        assert elite_fitness == sorted(elite_fitness, reverse=True)
        keys = {e.bits.tobytes() for e in bs.elites}
        others = [m.fitness for m in pop.members if m.bits.tobytes() not in keys]
        assert min(elite_fitness) >= max(others)

    def test_ties_go_to_lower_index(self, p3):
        """Test that equal fitness is broken by population order."""
        # Items 1+2 and items 0+3 are both worth 24
        members = _members(p3, [[0, 1, 1, 0], [1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 0]])
        assert members[0].fitness == members[2].fitness == 24
        bs = init_belief_space(members, fraction=0.25)
        assert bs.elites[0] is members[0]

    def test_duplicates_are_skipped(self, p3):
        """Test that identical bit vectors are seeded only once."""
        members = _members(p3, [[1, 1, 0, 1]] * 5 + [[1, 0, 0, 0]] * 5)
        bs = init_belief_space(members, fraction=0.3)
        assert bs.capacity == 3
        assert len(bs) == 2
        assert {e.solution.to_string() for e in bs.elites} == {"1101", "1000"}

    def test_identical_population(self, p3):
        """Test that a population of clones leaves a single elite."""
        members = _members(p3, [[0, 1, 0, 1]] * 20)
        bs = init_belief_space(members)
        assert len(bs) == 1
        assert bs.elites[0].solution.to_string() == "0101"

    def test_empty_population(self):
        """Test that an empty population is refused."""
        with pytest.raises(ValueError):
            init_belief_space(())


@pytest.mark.unit
class TestAccept:
    """Test suite for the acceptance rule."""

    def test_worked_admission(self, p3):
        """Test that a two-item elite is replaced by the three-item P3 optimum."""
        # No pair of P3 items is worth 30; items 2 and 3 (28) take the elite role
        elite = evaluate(p3, Solution.from_bits([0, 0, 1, 1]))
        assert elite.fitness == 28 and elite.solution.count_selected() == 2
        bs = BeliefSpace((elite,), capacity=1)
        candidate = evaluate(p3, Solution.from_bits([1, 1, 0, 1]))
        assert candidate.fitness == 35
        assert candidate.solution.hamming(elite.solution) >= 0.5 * 3
        updated = accept(bs, candidate)
        assert updated.elites == (candidate,)

    def test_identical_candidate_rejected(self, p3):
        """Test that zero difference fails the diversity condition."""
        elite = evaluate(p3, Solution.from_bits([0, 1, 0, 1]))
        bs = BeliefSpace((elite,), capacity=2)
        assert bs.accept(evaluate(p3, Solution.from_bits([0, 1, 0, 1]))) is bs

    def test_weaker_candidate_rejected(self, p3):
        """Test that a candidate below every elite is refused."""
        bs = BeliefSpace(_members(p3, [[1, 1, 0, 1], [0, 1, 1, 0]]), capacity=2)
        assert bs.accept(evaluate(p3, Solution.from_bits([1, 0, 0, 0]))) is bs

    def test_close_fitter_candidate_replaces_its_neighbour(self, unit_weights):
        """Test that a fitter near-copy takes its neighbour's place, not the weakest elite's."""
        near, far = _members(unit_weights, [[1, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]])
        bs = BeliefSpace((near, far), capacity=2)
        # Five items selected: elites closer than 2.5 positions are crowded out
        candidate = evaluate(unit_weights, Solution.from_bits([1, 1, 1, 1, 1, 0]))
        assert candidate.solution.hamming(near.solution) == 1
        updated = bs.accept(candidate)
        assert updated.elites == (candidate, far)

    def test_close_candidate_must_beat_its_neighbour(self, unit_weights):
        """Test that a near-copy weaker than its neighbour is refused even if it beats the weakest elite."""
        near, far = _members(unit_weights, [[1, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]])
        bs = BeliefSpace((near, far), capacity=2)
        candidate = evaluate(unit_weights, Solution.from_bits([1, 1, 1, 0, 0, 0]))
        assert far.fitness < candidate.fitness < near.fitness
        assert bs.accept(candidate) is bs

    def test_candidate_replaces_whole_crowd(self, unit_weights):
        """Test that every elite within the threshold is replaced at once."""
        a, b, far = _members(unit_weights, [[1, 1, 1, 1, 0, 0], [1, 1, 1, 0, 1, 0], [0, 0, 0, 0, 1, 1]])
        bs = BeliefSpace((a, b, far), capacity=3)
        candidate = evaluate(unit_weights, Solution.from_bits([1, 1, 1, 1, 1, 0]))
        assert bs.crowd_of(candidate) == [0, 1]
        updated = bs.accept(candidate)
        assert updated.elites == (candidate, far)
        assert updated.crowd_of(candidate) == [0]
        assert updated.min_fitness >= bs.min_fitness

    def test_evicts_lowest_and_keeps_order(self, p3):
        """Test eviction of the weakest elite and re-sorting."""
        a, b = _members(p3, [[1, 1, 0, 1], [1, 0, 0, 0]])
        bs = BeliefSpace((a, b), capacity=2)
        candidate = evaluate(p3, Solution.from_bits([0, 0, 1, 1]))
        updated = bs.accept(candidate)
        assert [e.fitness for e in updated.elites] == [35, 28]

    def test_random_accept_invariants(self):
        """Test capacity, monotone minimum and distinctness over random offers."""
        inst = generate_random_instance(30, 200, 3)
        rng = np.random.default_rng(3)
        pop = init_population(inst, EvolutionConfig(population_size=40, seed=3), rng)
        bs = init_belief_space(pop.members)
        for _ in range(3000):
            before = bs.min_fitness
            bs = bs.accept(evaluate(inst, Solution(rng.random(inst.n) < 0.4)))
            assert len(bs) <= bs.capacity
            assert bs.min_fitness >= before
        keys = [e.bits.tobytes() for e in bs.elites]
        assert len(keys) == len(set(keys))

    def test_gene_frequency_and_snapshot(self, p3):
        """Test the per-item inclusion frequency diagnostic."""
        bs = BeliefSpace(_members(p3, [[1, 1, 0, 1], [1, 0, 1, 0]]), capacity=2)
        assert bs.gene_frequency().tolist() == [1.0, 0.5, 0.5, 0.5]
        snap = bs.snapshot(4)
        assert snap.iteration == 4
        assert snap.elite_fitness == (35.0, 22.0)


@pytest.mark.unit
class TestInfluence:
    """Test suite for parent selection through the belief space."""

    def test_single_elite_always_first(self, p3):
        """Test that a one-elite space always supplies the first parent."""
        members = _members(p3, [[1, 1, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        bs = BeliefSpace((members[0],), capacity=1)
        pop = Population(members)
        rng = np.random.default_rng(0)
        for _ in range(100):
            first, second = influence_select_parents(bs, pop, rng)
            assert first is members[0]
            assert second in members

    def test_elites_chosen_uniformly(self):
        """Test elite frequencies with a chi-square statistic."""
        inst = builtin_problem("P2")
        pop = init_population(inst, EvolutionConfig(population_size=50, seed=5))
        bs = init_belief_space(pop.members)
        rng = np.random.default_rng(5)
        draws = 20_000
        counts = dict.fromkeys(range(len(bs)), 0)
        index = {id(e): i for i, e in enumerate(bs.elites)}
        for _ in range(draws):
            first, _ = influence_select_parents(bs, pop, rng)
            counts[index[id(first)]] += 1
        expected = draws / len(bs)
        chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
        # 4 degrees of freedom, p = 0.001 critical value
        assert len(bs) == 5
        assert chi2 < 18.47


@pytest.mark.unit
class TestCulturalAlgorithm:
    """Test suite for CA runs."""

    def test_step_preserves_size_and_space(self, p3):
        """Test population size and belief capacity across one step."""
        cfg = EvolutionConfig(population_size=20, seed=1)
        rng = np.random.default_rng(1)
        pop = init_population(p3, cfg, rng)
        bs = init_belief_space(pop.members)
        new_pop, new_bs = ca_step(p3, pop, bs, cfg, rng)
        assert len(new_pop) == 20
        assert new_pop.generation == 1
        assert len(new_bs) <= new_bs.capacity == 2
        assert new_bs.min_fitness >= bs.min_fitness

    def test_archive_keeps_up_with_population(self):
        """Test that the best elite matches the population best every generation on a large instance."""
        inst = generate_random_instance(500, 2000, 11)
        cfg = EvolutionConfig(seed=4)
        rng = np.random.default_rng(4)
        pop = init_population(inst, cfg, rng)
        bs = init_belief_space(pop.members)
        for _ in range(30):
            pop, bs = ca_step(inst, pop, bs, cfg, rng)
            assert bs.max_fitness == max(m.fitness for m in pop.members), pop.generation

    def test_trace_has_belief_columns(self, small_config):
        """Test that every CA trace record carries the belief range."""
        best, trace = run_ca(builtin_problem("P1"), small_config)
        assert len(trace) == small_config.max_iterations + 1
        assert all(r.belief_min is not None and r.belief_min <= r.belief_max for r in trace.records)
        assert trace.final_best == best.fitness

    def test_monotone_and_deterministic(self):
        """Test monotone best-so-far and seed reproducibility on P10."""
        inst = builtin_problem("P10")
        cfg = EvolutionConfig(seed=11)
        a = solve_ca(inst, cfg)
        b = solve_ca(inst, cfg)
        assert a.trace.is_monotone()
        assert a.best.feasible
        assert a.best.solution == b.best.solution
        assert a.trace.best_values() == b.trace.best_values()

    def test_belief_snapshots_recorded(self, small_config):
        """Test one snapshot per generation when requested."""
        result = solve_ca(builtin_problem("P3"), small_config, record_beliefs=True)
        assert [s.iteration for s in result.belief_snapshots] == list(range(small_config.max_iterations + 1))
        assert all(len(s.gene_frequency) == 4 for s in result.belief_snapshots)
        assert result.algorithm == "CA"

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["P3", "P4", "P7", "P9"])
    def test_easy_problems_solved(self, name):
        """Test that every one of five default runs solves the smallest problems."""
        inst = builtin_problem(name)
        for seed in range(5):
            best, _ = run_ca(inst, EvolutionConfig(seed=seed))
            assert best.fitness == inst.known_optimum
