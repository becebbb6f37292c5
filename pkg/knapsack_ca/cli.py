"""
Command-line front end: solve, bench, gen and oracle.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success and
2 for usage or input errors.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from knapsack_ca import oracle
from knapsack_ca.bench.experiment import Algorithm, RunStats, baseline_stats, run_repeated, summarize_runs
from knapsack_ca.bench.export import emit_belief_csv, emit_csv, emit_trace_csv, format_summary
from knapsack_ca.bench.literature import literature_results
from knapsack_ca.bench.problems import builtin_problems, random_suite
from knapsack_ca.config import available_presets, load_config
from knapsack_ca.cultural.algorithm import solve_ca
from knapsack_ca.evolution.config import EvolutionConfig
from knapsack_ca.evolution.engine import RunResult, solve_ga
from knapsack_ca.exceptions import KnapsackError
from knapsack_ca.knapsack.generator import generate_random_instance
from knapsack_ca.knapsack.instance_io import read_instance, serialize_instance, write_instance
from knapsack_ca.knapsack.problem import Instance
from knapsack_ca.logger import set_level, setup_logger
from knapsack_ca.utils.paths import build_trace_path, ensure_parent

logger = setup_logger("cli")

EXIT_OK = 0
EXIT_USAGE = 2

FITNESS_CHOICES = ["penalty", "zero", "penalized", "zero_if_invalid"]


class UsageError(Exception):
    """Flag combination the parser cannot reject on its own."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="YAML file overriding the bundled defaults")
    parser.add_argument("--preset", choices=available_presets(), help="Named settings applied before --config")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")


def _add_evolution_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pop", type=int, dest="population_size", help="Population size (default 100)")
    parser.add_argument("--iters", type=int, dest="max_iterations", help="Generations (default 50)")
    parser.add_argument("--pc", type=float, dest="base_crossover_rate", help="Base crossover rate P_c (default 0.9)")
    parser.add_argument("--fitness", choices=FITNESS_CHOICES, dest="fitness_mode", help="Fitness for overweight solutions")
    parser.add_argument("--elitism", type=int, dest="elitism_count", help="Members carried over unchanged (default 1)")
    parser.add_argument("--pm", type=float, dest="mutation_rate_override", help="Pin p_m instead of following the schedule")
    parser.add_argument("--schedule", choices=["adaptive", "static"], dest="rate_schedule")
    parser.add_argument("--mutation", choices=["per-gene", "per-chromosome"], dest="mutation_scheme")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knapsack-ca",
        description="Cultural algorithm and GA baseline for the 0-1 knapsack problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Run one GA or CA search on an instance file")
    solve.add_argument("instance", help="Instance file")
    solve.add_argument("--algo", choices=["ga", "ca"], default="ca")
    solve.add_argument("--seed", type=int)
    solve.add_argument("--trace", metavar="PATH", help="Write the convergence trace CSV")
    solve.add_argument("--belief-trace", metavar="PATH", help="Write per-generation belief snapshots (CA only)")
    _add_evolution_flags(solve)
    _add_common(solve)

    bench = sub.add_parser("bench", help="Repeated runs over a benchmark suite")
    bench.add_argument("--suite", choices=["paper", "random"], default="paper")
    bench.add_argument("--algo", choices=["ga", "ca", "both"], default="both")
    bench.add_argument("--runs", type=_positive_int)
    bench.add_argument("--seed", type=int, help="Base seed; run i uses seed + i (random-suite instance i uses seed + 1000 + i)")
    bench.add_argument("--out", metavar="PATH", help="Write the stats CSV")
    bench.add_argument("--jobs", type=_positive_int, help="Worker processes for independent runs")
    bench.add_argument("--trace-dir", metavar="DIR", help="Write one trace CSV per run")
    bench.add_argument("--baselines", action="store_true", help="Add greedy and exact-oracle rows")
    bench.add_argument("--literature", action="store_true", help="Show published results beside the measured rows")
    bench.add_argument("--omit-timing", action="store_true", help="Leave avg_time_s empty for byte-identical CSVs")
    _add_evolution_flags(bench)
    _add_common(bench)

    gen = sub.add_parser("gen", help="Generate a random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--capacity", type=float, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--name", help="Label stored in the file")
    gen.add_argument("--out", metavar="PATH", help="Output file (stdout when omitted)")
    _add_common(gen)

    orc = sub.add_parser("oracle", help="Exact optimum or greedy value of an instance file")
    orc.add_argument("instance", help="Instance file")
    orc.add_argument("--method", choices=["auto", "dp", "brute", "greedy"], default="auto")
    _add_common(orc)

    return parser


def _evolution_config(config: dict[str, Any], args: argparse.Namespace, seed: Optional[int]) -> EvolutionConfig:
    return EvolutionConfig.from_mapping(
        config,
        population_size=args.population_size,
        max_iterations=args.max_iterations,
        base_crossover_rate=args.base_crossover_rate,
        fitness_mode=args.fitness_mode,
        elitism_count=args.elitism_count,
        mutation_rate_override=args.mutation_rate_override,
        rate_schedule=args.rate_schedule,
        mutation_scheme=args.mutation_scheme,
        seed=seed,
    )


def _check_writable(path: Optional[str]) -> None:
    if path is not None and not Path(path).parent.is_dir():
        raise UsageError(f"cannot write '{path}': directory '{Path(path).parent}' does not exist")


def _print_run(inst: Instance, result: RunResult) -> None:
    best = result.best
    selected = " ".join(str(i) for i in best.solution.selected_indices()) or "(none)"
    print(f"algorithm: {result.algorithm}")
    print(f"instance: {inst.name} (n={inst.n}, W={_fmt(inst.capacity)})")
    print(f"best value: {_fmt(best.total_value)}")
    print(f"fitness: {_fmt(best.fitness)}")
    print(f"weight: {_fmt(best.total_weight)}")
    print(f"feasible: {'yes' if best.feasible else 'no'}")
    print(f"selected items: {selected}")
    if inst.known_optimum is not None:
        print(f"known optimum: {_fmt(inst.known_optimum)}")
    print(f"seed: {result.seed}")
    print(f"elapsed: {result.elapsed_seconds:.3f}s")


def cmd_solve(args: argparse.Namespace, config: dict[str, Any]) -> int:
    if args.belief_trace and args.algo != "ca":
        raise UsageError("--belief-trace needs --algo ca")
    _check_writable(args.trace)
    _check_writable(args.belief_trace)

    cfg = _evolution_config(config, args, args.seed)
    inst = read_instance(args.instance)

    if args.algo == "ca":
        result = solve_ca(inst, cfg, record_beliefs=args.belief_trace is not None)
    else:
        result = solve_ga(inst, cfg)

    if args.trace:
        with open(args.trace, "wb") as f:
            emit_trace_csv(result.trace, f)
        logger.info(f"Trace written to {args.trace}")
    if args.belief_trace:
        with open(args.belief_trace, "wb") as f:
            emit_belief_csv(result.belief_snapshots, f)
        logger.info(f"Belief snapshots written to {args.belief_trace}")

    _print_run(inst, result)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, config: dict[str, Any]) -> int:
    _check_writable(args.out)
    bench_cfg = config.get("bench", {})
    oracle_cfg = config.get("oracle", {})
    runs = args.runs or int(bench_cfg.get("runs", 20))
    base_seed = args.seed if args.seed is not None else int(bench_cfg.get("base_seed", 0))
    jobs = args.jobs or int(bench_cfg.get("jobs", 1))
    if runs < 1:
        raise UsageError(f"runs must be at least 1, got {runs}")

    cfg = _evolution_config(config, args, base_seed)
    instances = builtin_problems() if args.suite == "paper" else random_suite(base_seed)
    algorithms = [Algorithm.GA, Algorithm.CA] if args.algo == "both" else [Algorithm.parse(args.algo)]

    stats: list[RunStats] = []
    for inst in instances:
        if args.baselines:
            for baseline in (Algorithm.GREEDY, Algorithm.ORACLE):
                stats.append(
                    baseline_stats(
                        inst,
                        baseline,
                        brute_force_max_items=int(oracle_cfg.get("brute_force_max_items", oracle.BRUTE_FORCE_MAX_ITEMS)),
                        dp_max_cells=int(oracle_cfg.get("dp_max_cells", oracle.DP_MAX_CELLS)),
                    )
                )
        for algorithm in algorithms:
            results = run_repeated(inst, algorithm, cfg, runs, jobs)
            stats.append(summarize_runs(inst, algorithm, results))
            if args.trace_dir:
                for result in results:
                    path = ensure_parent(build_trace_path(args.trace_dir, inst.name, algorithm.value, result.seed))
                    with open(path, "wb") as f:
                        emit_trace_csv(result.trace, f)
                logger.info(f"Wrote {len(results)} traces for {algorithm.value} on {inst.name} to {args.trace_dir}")

    if args.out:
        with open(args.out, "wb") as f:
            emit_csv(stats, f, omit_timing=args.omit_timing)
        logger.info(f"Stats written to {args.out}")

    literature = literature_results() if args.literature else None
    print(format_summary(stats, literature))
    print()
    print(f"{runs} runs per algorithm, seeds {base_seed}..{base_seed + runs - 1}; Std.dev is the population standard deviation.")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: dict[str, Any]) -> int:
    inst = generate_random_instance(args.n, args.capacity, args.seed, name=args.name)
    if args.out:
        write_instance(inst, args.out)
        print(f"wrote {args.out} (n={inst.n}, W={_fmt(inst.capacity)}, seed={args.seed})")
    else:
        sys.stdout.write(serialize_instance(inst))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, config: dict[str, Any]) -> int:
    oracle_cfg = config.get("oracle", {})
    inst = read_instance(args.instance)
    result = oracle.solve(
        inst,
        args.method,
        brute_force_max_items=int(oracle_cfg.get("brute_force_max_items", oracle.BRUTE_FORCE_MAX_ITEMS)),
        dp_max_cells=int(oracle_cfg.get("dp_max_cells", oracle.DP_MAX_CELLS)),
    )

    label = "value" if result.method is oracle.OracleMethod.GREEDY else "optimum"
    print(f"method: {result.method.value}")
    print(f"{label}: {_fmt(result.optimum_value)}")
    print(f"witness: {result.witness.to_string()}")
    print(f"selected items: {' '.join(str(i) for i in result.witness.selected_indices()) or '(none)'}")
    if inst.known_optimum is not None:
        agrees = abs(result.optimum_value - inst.known_optimum) <= oracle.OPTIMUM_TOLERANCE
        print(f"known optimum: {_fmt(inst.known_optimum)} ({'match' if agrees else 'differs'})")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "bench": cmd_bench,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.verbose:
        set_level("DEBUG")

    try:
        config = load_config(args.config, args.preset)
        return COMMANDS[args.command](args, config)
    except (KnapsackError, UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
