"""
Tests for CSV output and the text summary.
"""

import io

import pytest

from knapsack_ca.bench.experiment import RunStats
from knapsack_ca.bench.export import emit_belief_csv, emit_csv, emit_trace_csv, format_summary
from knapsack_ca.bench.literature import literature_results
from knapsack_ca.bench.problems import builtin_problem
from knapsack_ca.cultural.algorithm import solve_ca
from knapsack_ca.evolution.config import EvolutionConfig
from knapsack_ca.evolution.engine import run_ga
from knapsack_ca.evolution.trace import ConvergenceTrace, TraceRecord

STATS_HEADER = "instance,algorithm,runs,best,worst,average,median,std_dev,avg_time_s,optimum"
TRACE_HEADER = "iteration,best_so_far,p_c,p_m,belief_min,belief_max"


def _stats(**changes):
    values = dict(
        algorithm="CA",
        instance_name="P3",
        runs=20,
        best=35.0,
        worst=35.0,
        average=35.0,
        median=35.0,
        std_dev=0.0,
        avg_time_seconds=0.31,
        optimum=35.0,
    )
    values.update(changes)
    return RunStats(**values)


@pytest.mark.unit
class TestStatsCsv:
    """Test suite for the stats CSV."""

    def test_empty_is_header_only(self):
        """Test that no rows still writes the header."""
        sink = io.BytesIO()
        emit_csv([], sink)
        assert sink.getvalue().decode() == STATS_HEADER + "\n"

    def test_one_row_two_lines(self):
        """Test a single stats row."""
        sink = io.BytesIO()
        emit_csv([_stats()], sink)
        lines = sink.getvalue().decode().splitlines()
        assert len(lines) == 2
        assert lines[0] == STATS_HEADER
        assert lines[1].startswith("P3,CA,20,35.0,35.0")

    def test_missing_optimum_and_omitted_timing_are_empty(self):
        """Test empty cells for unknown optimum and omitted timing."""
        sink = io.StringIO()
        emit_csv([_stats(optimum=None)], sink, omit_timing=True)
        assert sink.getvalue().splitlines()[1].endswith(",0.0,,")

    def test_rows_keep_given_order(self):
        """Test deterministic row order."""
        sink = io.StringIO()
        emit_csv([_stats(instance_name="P9"), _stats(instance_name="P1")], sink)
        assert [line.split(",")[0] for line in sink.getvalue().splitlines()[1:]] == ["P9", "P1"]

    def test_inconsistent_stats_abort_write(self):
        """Test that a row with worst > best is refused and nothing is written."""
        sink = io.BytesIO()
        with pytest.raises(ValueError):
            emit_csv([_stats(worst=40.0)], sink)
        assert sink.getvalue() == b""


@pytest.mark.unit
class TestTraceCsv:
    """Test suite for the convergence trace CSV."""

    def test_fifty_iterations_give_52_lines(self):
        """Test header plus generations 0..50."""
        _, trace = run_ga(builtin_problem("P1"), EvolutionConfig(population_size=10, seed=0))
        sink = io.BytesIO()
        emit_trace_csv(trace, sink)
        lines = sink.getvalue().decode().splitlines()
        assert len(lines) == 52
        assert lines[0] == TRACE_HEADER
        assert lines[1].startswith("0,")
        assert lines[1].endswith(",,")

    def test_emit_csv_dispatches_traces(self):
        """Test that emit_csv accepts a trace as well."""
        _, trace = run_ga(builtin_problem("P3"), EvolutionConfig(population_size=10, max_iterations=3, seed=0))
        sink = io.StringIO()
        emit_csv(trace, sink)
        assert sink.getvalue().splitlines()[0] == TRACE_HEADER

    def test_dip_after_feasible_start_aborts_write(self):
        """Test that a trace feasible from generation 0 must be nondecreasing to be written."""
        trace = ConvergenceTrace([TraceRecord(0, 30.0, 0.5, 0.5), TraceRecord(1, 28.0, 0.5, 0.5)])
        sink = io.StringIO()
        with pytest.raises(ValueError, match="nothing written"):
            emit_trace_csv(trace, sink)
        assert sink.getvalue() == ""

    def test_first_feasible_dip_is_written(self):
        """Test that the one permitted dip, into the first feasible generation, still exports."""
        trace = ConvergenceTrace([TraceRecord(0, 30.0, 0.5, 0.5, feasible=False), TraceRecord(1, 28.0, 0.5, 0.5)])
        sink = io.StringIO()
        emit_trace_csv(trace, sink)
        assert len(sink.getvalue().splitlines()) == 3

    def test_ca_trace_has_belief_cells(self):
        """Test that CA traces fill belief_min and belief_max."""
        result = solve_ca(builtin_problem("P3"), EvolutionConfig(population_size=10, max_iterations=3, seed=0))
        sink = io.StringIO()
        emit_trace_csv(result.trace, sink)
        for line in sink.getvalue().splitlines()[1:]:
            belief_min, belief_max = line.split(",")[4:]
            assert belief_min and belief_max
            assert float(belief_min) <= float(belief_max)


@pytest.mark.unit
class TestBeliefCsv:
    """Test suite for the belief snapshot CSV."""

    def test_rows_per_generation(self):
        """Test one row per generation with space-separated lists."""
        result = solve_ca(
            builtin_problem("P3"),
            EvolutionConfig(population_size=20, max_iterations=4, seed=2),
            record_beliefs=True,
        )
        sink = io.StringIO()
        emit_belief_csv(result.belief_snapshots, sink)
        lines = sink.getvalue().splitlines()
        assert lines[0] == "iteration,elite_count,elite_fitness,gene_frequency"
        assert len(lines) == 6
        iteration, count, fitness, frequency = lines[1].split(",")
        assert iteration == "0"
        assert len(fitness.split()) == int(count)
        assert len(frequency.split()) == 4


@pytest.mark.unit
class TestSummary:
    """Test suite for the text summary."""

    def test_contains_rows(self):
        """Test that every measured row appears."""
        text = format_summary([_stats(), _stats(algorithm="GA", worst=30.0, average=33.0, median=34.0, std_dev=1.5)])
        assert "P3" in text
        assert "CA" in text and "GA" in text
        assert "Std.dev" in text

    def test_published_rows_are_labelled(self):
        """Test interleaving of literature rows."""
        text = format_summary([_stats()], literature_results())
        assert "BGSA (published)" in text
        assert "P11" not in text

    def test_empty(self):
        """Test the empty summary."""
        assert format_summary([]) == "(no results)"
