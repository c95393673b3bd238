"""Main application module implementing the Facade design pattern.

``ExperimentRunner`` ties configuration loading, problem construction, the
engine, the oracle and report rendering together behind a few calls used by
the command-line interface.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from genalgo.core.data_models import RunConfigDocument, WorkedExampleReport
from genalgo.core.engine import GAConfig, RunLog, TerminationReason, TerminationSpec, run
from genalgo.core.io_manager import IOManager
from genalgo.core.operators import (
    CrossoverOperator,
    CrossoverSpec,
    MutationOperator,
    MutationSpec,
)
from genalgo.core.oracle import OracleResult, brute_force_tsp
from genalgo.core.problems import DEFAULT_ALPHABET, Problem, TargetStringInstance, TspInstance
from genalgo.core.worked_example import reproduce_worked_example
from genalgo.utils.config import config_manager
from genalgo.utils.template_engine import TemplateEngine

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOutcome:
    """Result of one seed of a configured run.

    Attributes:
        seed: Seed the run used.
        run_log: Engine output.
        csv_path: Generation log written.
        json_path: Run summary written.
        threshold_reached: ``False`` only if a fitness threshold was set and not met.
    """

    seed: int
    run_log: RunLog
    csv_path: Path
    json_path: Path
    threshold_reached: bool


class ExperimentRunner:
    """Facade over the GA engine, the oracle and the worked example.

    Attributes:
        io_manager: Manager for file I/O operations.
        template_engine: Engine for rendering console reports.
    """

    def __init__(self) -> None:
        """Initialize the experiment runner."""
        self.io_manager = IOManager()
        self.template_engine = TemplateEngine()

    def build_problem(self, document: RunConfigDocument, base_dir: str | Path = ".") -> Problem:
        """Create the problem a document describes.

        A relative ``instance`` path for ``tsp`` is resolved against ``base_dir``.
        """
        if document.problem == "string":
            return TargetStringInstance(document.instance, document.alphabet or DEFAULT_ALPHABET)
        path = Path(document.instance)
        if not path.is_absolute():
            path = Path(base_dir) / path
        return TspInstance(self.io_manager.load_distance_matrix(path))

    def run_file(
        self,
        config_path: str | Path,
        overrides: dict[str, Any] | None = None,
        output_dir: str | Path | None = None,
        runs: int = 1,
    ) -> list[RunOutcome]:
        """Run a configuration file for ``runs`` consecutive seeds.

        Seeds ``seed .. seed + runs - 1`` execute on a thread pool; each writes its
        own log and summary, and outcomes are returned in seed order.

        Raises:
            FileNotFoundError: If the configuration or instance file doesn't exist.
            ConfigurationError: If the configuration is invalid.
        """
        if runs < 1:
            raise ValueError("runs must be at least 1.")
        document = self.io_manager.load_run_config(config_path, overrides)
        problem = self.build_problem(document, Path(config_path).parent)
        documents = [
            document.model_copy(update={"seed": document.seed + k}) for k in range(runs)
        ]
        # validate every derived seed before anything runs
        for d in documents:
            RunConfigDocument.from_dict(d.model_dump(mode="json"))

        def execute(doc: RunConfigDocument) -> RunOutcome:
            run_log = run(doc.to_ga_config(), problem)
            csv_path, json_path = self.io_manager.output_paths(config_path, doc.seed, output_dir)
            self.io_manager.save_generation_log(run_log.history, csv_path)
            self.io_manager.save_run_summary(run_log, doc, json_path)
            threshold = doc.termination.fitness_threshold
            return RunOutcome(
                seed=doc.seed,
                run_log=run_log,
                csv_path=csv_path,
                json_path=json_path,
                threshold_reached=threshold is None or run_log.best.fitness <= threshold,
            )

        if runs == 1:
            return [execute(documents[0])]
        with ThreadPoolExecutor(max_workers=config_manager.get("max_workers")) as pool:
            return list(pool.map(execute, documents))

    def render_outcome(self, outcome: RunOutcome) -> str:
        """Render the console summary of one seed's run.

        Args:
            outcome: Result of a single seed.

        Returns:
            The rendered summary text.
        """
        return self.template_engine.render_template(
            "run_summary.j2",
            {
                "seed": outcome.seed,
                "generations": outcome.run_log.generations,
                "reason": outcome.run_log.termination_reason,
                "best_fitness": outcome.run_log.best.fitness,
                "best": outcome.run_log.best.chromosome.render(),
                "csv_path": outcome.csv_path,
                "json_path": outcome.json_path,
            },
        )

    def reproduce(self) -> WorkedExampleReport:
        """Recompute the embedded worked example; no file access."""
        return reproduce_worked_example()

    def render_report(self, report: WorkedExampleReport) -> str:
        """Render the worked-example report for the console."""
        return self.template_engine.render_template(
            "worked_example_report.j2", {"report": report}
        )

    def solve_exactly(self, matrix_path: str | Path) -> OracleResult:
        """Run the exhaustive oracle on an edge-list CSV.

        Raises:
            InstanceTooLargeError: If the instance has more than 11 places.
        """
        instance = TspInstance(self.io_manager.load_distance_matrix(matrix_path))
        return brute_force_tsp(instance)

    def string_demo(
        self,
        target: str,
        alphabet: str | None = None,
        seed: int | None = None,
        population: int | None = None,
        generations: int | None = None,
        crossover_rate: float | None = None,
        mutation_rate: float | None = None,
        elitism: int | None = None,
    ) -> RunLog:
        """Evolve a random string towards ``target``, stopping at fitness 0.

        Unset parameters fall back to the ``GA_STRING_*`` configuration defaults.
        """

        def pick(value: Any, key: str) -> Any:
            return config_manager.get(key) if value is None else value

        problem = TargetStringInstance(target, alphabet or DEFAULT_ALPHABET)
        config = GAConfig(
            population_size=pick(population, "string_population"),
            crossover=CrossoverSpec(
                CrossoverOperator.SINGLE_POINT, pick(crossover_rate, "string_crossover_rate")
            ),
            mutation=MutationSpec(
                MutationOperator.RANDOM_RESET, pick(mutation_rate, "string_mutation_rate")
            ),
            elitism_count=pick(elitism, "string_elitism"),
            seed=pick(seed, "seed"),
            termination=TerminationSpec(
                max_generations=pick(generations, "string_max_generations"),
                fitness_threshold=0,
            ),
        )
        run_log = run(config, problem)
        if run_log.termination_reason not in (
            TerminationReason.EXACT_OPTIMUM,
            TerminationReason.FITNESS_THRESHOLD,
        ):
            logger.info("Target %r not reached", target)
        return run_log


# Factory function to create ExperimentRunner instances
def create_experiment_runner() -> ExperimentRunner:
    """Create a new ExperimentRunner instance."""
    return ExperimentRunner()
