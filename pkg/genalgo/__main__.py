#!/usr/bin/env python3
"""Command-line interface for genalgo.

Subcommands:
    run          run a GA experiment from a JSON configuration
    reproduce    recompute the embedded worked tour example
    oracle       exhaustively solve a small edge-list instance
    string-demo  evolve a random string towards a target

Exit codes: 0 success, 1 finished without reaching the target/threshold,
2 configuration or input error, 3 instance too large for the oracle.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from genalgo.core.app import ExperimentRunner, create_experiment_runner
from genalgo.core.errors import ConfigurationError, GAError, InstanceTooLargeError
from genalgo.utils.config import config_manager

EXIT_OK = 0
EXIT_NOT_REACHED = 1
EXIT_INPUT_ERROR = 2
EXIT_TOO_LARGE = 3

logger = logging.getLogger("genalgo")


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    """Add the engine override flags shared by run and string-demo."""
    parser.add_argument("--seed", type=int, help="Seed of the run's random generator.")
    parser.add_argument("--generations", type=int, help="Maximum number of generations.")
    parser.add_argument("--population", type=int, help="Population size.")
    parser.add_argument("--crossover-rate", type=float, help="Crossover probability per pair.")
    parser.add_argument("--mutation-rate", type=float, help="Mutation probability per child.")
    parser.add_argument("--elitism", type=int, help="Elites carried into each generation.")


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Returns:
        Parsed argument namespace.
    """
    parser = argparse.ArgumentParser(
        prog="genalgo", description="Seedable genetic-algorithm experiments."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Run a GA experiment from a JSON config.")
    run_parser.add_argument("config", type=Path, help="Path to a run configuration JSON file.")
    _add_engine_flags(run_parser)
    run_parser.add_argument(
        "--out-dir", type=Path, help="Directory for logs and summaries (default: GA_OUT_DIR)."
    )
    run_parser.add_argument("--runs", type=int, default=1, help="Number of consecutive seeds.")
    run_parser.set_defaults(handler=cmd_run)

    reproduce_parser = subparsers.add_parser(
        "reproduce", help="Recompute the embedded worked tour example."
    )
    reproduce_parser.add_argument("--json", action="store_true", help="Print the report as JSON.")
    reproduce_parser.set_defaults(handler=cmd_reproduce)

    oracle_parser = subparsers.add_parser("oracle", help="Exhaustively solve a small instance.")
    oracle_parser.add_argument("matrix", type=Path, help="Edge-list CSV (From,To,Distance).")
    oracle_parser.set_defaults(handler=cmd_oracle)

    demo_parser = subparsers.add_parser("string-demo", help="Evolve a string towards a target.")
    demo_parser.add_argument("target", help="Target string.")
    demo_parser.add_argument("--alphabet", help="Gene alphabet (default: printable ASCII).")
    _add_engine_flags(demo_parser)
    demo_parser.set_defaults(handler=cmd_string_demo)

    return parser.parse_args(argv)


def cmd_run(args: argparse.Namespace, runner: ExperimentRunner) -> int:
    """Handle the run subcommand.

    Args:
        args: Parsed arguments; unset engine flags are None and leave the file value.
        runner: Experiment runner facade.

    Returns:
        EXIT_OK if every seed reached its threshold, otherwise EXIT_NOT_REACHED.
    """
    overrides = {
        "seed": args.seed,
        "generations": args.generations,
        "population": args.population,
        "crossover_rate": args.crossover_rate,
        "mutation_rate": args.mutation_rate,
        "elitism": args.elitism,
    }
    if args.runs < 1:
        raise ConfigurationError("--runs must be at least 1.", ["runs: must be >= 1"])
    outcomes = runner.run_file(args.config, overrides, args.out_dir, args.runs)
    for outcome in outcomes:
        print(runner.render_outcome(outcome), end="")
    return EXIT_OK if all(o.threshold_reached for o in outcomes) else EXIT_NOT_REACHED


def cmd_reproduce(args: argparse.Namespace, runner: ExperimentRunner) -> int:
    """Handle the reproduce subcommand.

    Returns:
        EXIT_OK if every reproducible cell matches, otherwise EXIT_NOT_REACHED.
    """
    report = runner.reproduce()
    if args.json:
        print(report.model_dump_json(indent=4))
    else:
        print(runner.render_report(report), end="")
    return EXIT_OK if report.all_passed else EXIT_NOT_REACHED


def cmd_oracle(args: argparse.Namespace, runner: ExperimentRunner) -> int:
    """Handle the oracle subcommand and print the optimum as JSON."""
    result = runner.solve_exactly(args.matrix)
    print(json.dumps(result.to_dict(), indent=4))
    return EXIT_OK


def cmd_string_demo(args: argparse.Namespace, runner: ExperimentRunner) -> int:
    """Handle the string-demo subcommand.

    Prints the best string of every generation.

    Returns:
        EXIT_OK if the target was reached, otherwise EXIT_NOT_REACHED.
    """
    run_log = runner.string_demo(
        args.target,
        alphabet=args.alphabet,
        seed=args.seed,
        population=args.population,
        generations=args.generations,
        crossover_rate=args.crossover_rate,
        mutation_rate=args.mutation_rate,
        elitism=args.elitism,
    )
    for stats in run_log.history:
        print(
            f"generation {stats.generation}: {stats.best_chromosome.render()!r} "
            f"(fitness {stats.best_fitness:g})"
        )
    if run_log.best.fitness == 0:
        print(f"✅ Target reached in generation {run_log.history[-1].generation}")
        return EXIT_OK
    print(f"⏹️ Stopped by {run_log.termination_reason} without reaching the target")
    return EXIT_NOT_REACHED


def configure_logging() -> None:
    """Configure root logging at the level named by GA_LOG_LEVEL."""
    logging.basicConfig(
        level=config_manager.get("log_level"),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point function.

    Returns:
        Exit code.
    """
    args = parse_args(argv)
    configure_logging()

    try:
        runner = create_experiment_runner()
        return args.handler(args, runner)
    except InstanceTooLargeError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ConfigurationError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        for violation in e.violations:
            print(f"  - {violation}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (GAError, OSError) as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
