"""Unit tests for app.py module.

Tests for the ExperimentRunner facade.
"""

import json
from unittest.mock import MagicMock, patch

import pytest

from genalgo.core.app import ExperimentRunner, create_experiment_runner
from genalgo.core.data_models import RunConfigDocument
from genalgo.core.engine import TerminationReason
from genalgo.core.errors import ConfigurationError, InstanceTooLargeError
from genalgo.core.io_manager import IOManager
from genalgo.core.problems import TargetStringInstance, TspInstance


@pytest.fixture
def runner() -> ExperimentRunner:
    return create_experiment_runner()


class TestExperimentRunner:
    """Test class for the ExperimentRunner."""

    def test_init(self, runner):
        assert isinstance(runner.io_manager, IOManager)
        assert runner.template_engine is not None

    def test_build_problem_resolves_relative_instance(self, runner, tsp_document, travel_csv):
        document = RunConfigDocument.from_dict(tsp_document)

        problem = runner.build_problem(document, travel_csv.parent)

        assert isinstance(problem, TspInstance)
        assert problem.place_count == 6

    def test_build_string_problem(self, runner):
        document = RunConfigDocument.from_dict(
            {
                "problem": "string",
                "instance": "CAB",
                "alphabet": "ABC",
                "population_size": 10,
                "crossover": {"operator": "single-point", "rate": 0.9},
                "mutation": {"operator": "random-reset", "rate": 0.5},
                "seed": 0,
                "termination": {"max_generations": 10},
            }
        )

        problem = runner.build_problem(document)

        assert problem == TargetStringInstance("CAB", "ABC")

    def test_run_file(self, runner, tsp_config_file, tmp_path):
        """Test a configured run.

        Given: A TSP configuration next to its edge list
        When: run_file is called
        Then: It should write a generation log and a summary named after the config and seed.
        """
        # Setup
        out_dir = tmp_path / "runs"

        # Execute
        (outcome,) = runner.run_file(tsp_config_file, output_dir=out_dir)

        # Assert
        assert outcome.seed == 1
        assert outcome.csv_path == out_dir / "tsp_run_seed1_generations.csv"
        assert outcome.json_path.exists()
        assert outcome.threshold_reached
        assert json.loads(outcome.json_path.read_text())["generations"] == 30

    def test_run_file_is_reproducible(self, runner, tsp_config_file, tmp_path):
        first = runner.run_file(tsp_config_file, output_dir=tmp_path / "a")[0]
        second = runner.run_file(tsp_config_file, output_dir=tmp_path / "b")[0]

        assert first.csv_path.read_bytes() == second.csv_path.read_bytes()
        assert first.json_path.read_bytes() == second.json_path.read_bytes()

    def test_multiple_seeds(self, runner, tsp_config_file, tmp_path):
        outcomes = runner.run_file(tsp_config_file, {"seed": 5}, tmp_path, runs=3)

        assert [o.seed for o in outcomes] == [5, 6, 7]
        assert len({o.csv_path for o in outcomes}) == 3
        single = runner.run_file(tsp_config_file, {"seed": 6}, tmp_path / "single")[0]
        assert single.run_log.history == outcomes[1].run_log.history

    def test_last_seed_out_of_range(self, runner, tsp_config_file, tmp_path):
        with pytest.raises(ConfigurationError):
            runner.run_file(tsp_config_file, {"seed": 2**64 - 1}, tmp_path, runs=2)

    def test_threshold_not_reached(self, runner, tsp_document, travel_csv, tmp_path):
        tsp_document["termination"] = {"max_generations": 1, "fitness_threshold": 1}
        config_path = travel_csv.parent / "strict.json"
        config_path.write_text(json.dumps(tsp_document))

        (outcome,) = runner.run_file(config_path, output_dir=tmp_path)

        assert not outcome.threshold_reached

    def test_render_outcome(self, runner, tsp_config_file, tmp_path):
        outcome = runner.run_file(tsp_config_file, output_dir=tmp_path)[0]

        text = runner.render_outcome(outcome)

        assert text.startswith("seed 1: 30 generation(s), stopped by max_generations")
        assert str(outcome.csv_path) in text

    def test_reproduce_and_render(self, runner):
        report = runner.reproduce()

        text = runner.render_report(report)

        assert report.all_passed
        assert "[selection_probabilities]" in text
        assert "FLAGGED" in text
        assert text.rstrip().endswith("all reproducible cells match")

    def test_solve_exactly(self, runner, travel_csv):
        result = runner.solve_exactly(travel_csv)
        assert result.optimal_length == 22

    def test_solve_exactly_too_large(self, runner, tmp_path):
        path = tmp_path / "big.csv"
        rows = ["From,To,Distance"] + [
            f"P{a},P{b},1" for a in range(1, 13) for b in range(a + 1, 13)
        ]
        path.write_text("\n".join(rows) + "\n")

        with pytest.raises(InstanceTooLargeError):
            runner.solve_exactly(path)

    def test_string_demo_single_letter(self, runner):
        run_log = runner.string_demo("AAAA", alphabet="A", seed=3, population=4, elitism=1)

        assert run_log.best.fitness == 0
        assert run_log.termination_reason is TerminationReason.EXACT_OPTIMUM

    @patch("genalgo.core.app.run")
    def test_string_demo_uses_configured_defaults(self, mock_run, runner):
        """Test fallback to GA_STRING_* defaults.

        Given: No engine parameters
        When: string_demo is called
        Then: The engine should receive the configured string defaults and a zero threshold.
        """
        # Setup
        mock_run.return_value = MagicMock(termination_reason=TerminationReason.FITNESS_THRESHOLD)

        # Execute
        runner.string_demo("HI")

        # Assert
        config, problem = mock_run.call_args.args
        assert problem.target == "HI"
        assert config.population_size == 200
        assert config.crossover.rate == 0.9
        assert config.mutation.rate == 0.8
        assert config.elitism_count == 2
        assert config.termination.max_generations == 2000
        assert config.termination.fitness_threshold == 0
