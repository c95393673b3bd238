"""Unit tests for __main__.py module.

Tests for the command-line interface functionality.
"""

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from genalgo.__main__ import (
    EXIT_INPUT_ERROR,
    EXIT_NOT_REACHED,
    EXIT_OK,
    EXIT_TOO_LARGE,
    main,
    parse_args,
)


class TestParseArgs:
    """Test class for argument parsing."""

    def test_run_arguments(self):
        """Test parsing of the run subcommand.

        Given: A config path and engine overrides
        When: parse_args is called
        Then: It should return the parsed values and leave unset flags as None.
        """
        # Execute
        args = parse_args(["run", "cfg.json", "--seed", "4", "--crossover-rate", "0.5", "--runs", "3"])

        # Assert
        assert args.command == "run"
        assert args.config == Path("cfg.json")
        assert args.seed == 4
        assert args.crossover_rate == 0.5
        assert args.runs == 3
        assert args.generations is None
        assert args.out_dir is None

    def test_string_demo_arguments(self):
        args = parse_args(["string-demo", "HELLO", "--alphabet", "HELO", "--population", "50"])

        assert args.target == "HELLO"
        assert args.alphabet == "HELO"
        assert args.population == 50

    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            parse_args([])


class TestMain:
    """Test class for main and its exit codes."""

    def test_run(self, tsp_config_file, tmp_path, capsys):
        """Test a configured run from the command line.

        Given: A valid TSP configuration without a fitness threshold
        When: main runs it
        Then: It should exit 0 and write both output files.
        """
        # Setup
        out_dir = tmp_path / "out"

        # Execute
        code = main(["run", str(tsp_config_file), "--out-dir", str(out_dir)])

        # Assert
        assert code == EXIT_OK
        assert (out_dir / "tsp_run_seed1_generations.csv").exists()
        assert (out_dir / "tsp_run_seed1_summary.json").exists()
        assert "seed 1:" in capsys.readouterr().out

    def test_run_outputs_are_byte_identical(self, tsp_config_file, tmp_path):
        for name in ("a", "b"):
            assert main(["run", str(tsp_config_file), "--out-dir", str(tmp_path / name)]) == EXIT_OK

        for suffix in ("generations.csv", "summary.json"):
            first = (tmp_path / "a" / f"tsp_run_seed1_{suffix}").read_bytes()
            second = (tmp_path / "b" / f"tsp_run_seed1_{suffix}").read_bytes()
            assert first == second

    def test_run_threshold_not_reached(self, tsp_document, travel_csv, tmp_path):
        tsp_document["termination"] = {"max_generations": 2, "fitness_threshold": 1}
        config_path = travel_csv.parent / "strict.json"
        config_path.write_text(json.dumps(tsp_document))

        assert main(["run", str(config_path), "--out-dir", str(tmp_path)]) == EXIT_NOT_REACHED

    def test_run_invalid_override(self, tsp_config_file, tmp_path, capsys):
        code = main(
            ["run", str(tsp_config_file), "--crossover-rate", "1.5", "--out-dir", str(tmp_path)]
        )

        assert code == EXIT_INPUT_ERROR
        assert "crossover.rate" in capsys.readouterr().err

    def test_run_zero_runs(self, tsp_config_file):
        assert main(["run", str(tsp_config_file), "--runs", "0"]) == EXIT_INPUT_ERROR

    def test_run_missing_config(self, tmp_path, capsys):
        code = main(["run", str(tmp_path / "absent.json")])

        assert code == EXIT_INPUT_ERROR
        assert "not found" in capsys.readouterr().err

    def test_reproduce(self, capsys):
        assert main(["reproduce"]) == EXIT_OK
        assert "all reproducible cells match" in capsys.readouterr().out

    def test_reproduce_json(self, capsys):
        assert main(["reproduce", "--json"]) == EXIT_OK

        report = json.loads(capsys.readouterr().out)
        assert report["all_passed"] is True
        assert report["optimal_length"] == 22

    def test_oracle(self, travel_csv, capsys):
        assert main(["oracle", str(travel_csv)]) == EXIT_OK

        result = json.loads(capsys.readouterr().out)
        assert result["optimal_tour"] == ["P1", "P3", "P2", "P5", "P4", "P6", "P1"]
        assert result["enumerated_count"] == 120

    def test_oracle_missing_edge(self, tmp_path, capsys):
        path = tmp_path / "edges.csv"
        path.write_text("From,To,Distance\nP1,P2,1\nP1,P3,1\n")

        assert main(["oracle", str(path)]) == EXIT_INPUT_ERROR
        assert "P2-P3" in capsys.readouterr().err

    def test_oracle_undecodable_csv(self, tmp_path, capsys):
        """Test an edge list that is not valid UTF-8.

        Given: A CSV whose distance cell contains a stray 0xFF byte
        When: main runs the oracle on it
        Then: It should report the file and exit with the input error code.
        """
        # Setup
        path = tmp_path / "edges.csv"
        path.write_bytes(b"From,To,Distance\nP1,P2,5\xff\n")

        # Execute
        code = main(["oracle", str(path)])

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert "could not be read" in capsys.readouterr().err

    def test_oracle_directory_instead_of_csv(self, tmp_path):
        assert main(["oracle", str(tmp_path)]) == EXIT_INPUT_ERROR

    def test_run_undecodable_config(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_bytes(b'{"problem": "tsp\xff"}')

        assert main(["run", str(path), "--out-dir", str(tmp_path / "out")]) == EXIT_INPUT_ERROR
        assert "could not be read" in capsys.readouterr().err

    def test_run_out_dir_is_a_file(self, tsp_config_file, tmp_path, capsys):
        """Test an output directory that cannot be created.

        Given: A valid configuration and an --out-dir naming an existing file
        When: main runs it
        Then: It should exit with the input error code instead of raising.
        """
        # Setup
        blocker = tmp_path / "occupied"
        blocker.write_text("not a directory")

        # Execute
        code = main(["run", str(tsp_config_file), "--out-dir", str(blocker)])

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert "Error saving" in capsys.readouterr().err

    def test_oracle_too_large(self, tmp_path):
        path = tmp_path / "big.csv"
        rows = ["From,To,Distance"] + [
            f"P{a},P{b},{a + b}" for a in range(1, 13) for b in range(a + 1, 13)
        ]
        path.write_text("\n".join(rows) + "\n")

        assert main(["oracle", str(path)]) == EXIT_TOO_LARGE

    def test_string_demo_forced(self, capsys):
        code = main(["string-demo", "A", "--alphabet", "A", "--population", "4"])

        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "generation 0: 'A' (fitness 0)" in out
        assert "✅ Target reached in generation 0" in out

    def test_string_demo_not_reached(self, capsys):
        code = main(
            ["string-demo", "GENETIC ALGORITHM", "--generations", "1", "--population", "4", "--elitism", "1"]
        )

        assert code == EXIT_NOT_REACHED
        assert "max_generations" in capsys.readouterr().out

    def test_string_demo_foreign_target(self, capsys):
        assert main(["string-demo", "abc", "--alphabet", "ab"]) == EXIT_INPUT_ERROR
        assert "not in the alphabet" in capsys.readouterr().err

    @patch("genalgo.__main__.create_experiment_runner")
    def test_unexpected_errors_propagate(self, mock_create_runner):
        mock_create_runner.return_value.string_demo.side_effect = ValueError("boom")

        with pytest.raises(ValueError):
            main(["string-demo", "X"])
