"""Input/Output manager for file operations.

Loads run configurations and distance edge lists, and writes per-generation CSV
logs and JSON run summaries.
"""

import csv
import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any

from genalgo.core.data_models import RunConfigDocument
from genalgo.core.engine import GenerationStats, RunLog
from genalgo.core.errors import ConfigurationError, InvalidInstanceError, OutputError
from genalgo.core.problems import (
    EDGE_COLUMNS,
    DistanceMatrix,
    Problem,
    distance_edges,
    load_distance_edges,
)
from genalgo.utils.config import config_manager

logger = logging.getLogger(__name__)

LOG_COLUMNS = ("generation", "best_fitness", "mean_fitness", "best_tour")


class IOManager:
    """Handles file input/output operations."""

    @staticmethod
    def load_run_config(
        file_path: str | Path, overrides: dict[str, Any] | None = None
    ) -> RunConfigDocument:
        """Load and validate a run configuration document.

        Args:
            file_path: Path to the JSON document.
            overrides: CLI overrides merged before validation.

        Returns:
            The validated document.

        Raises:
            FileNotFoundError: If the file doesn't exist.
            ConfigurationError: If the file is unreadable, not valid JSON or fails validation.
        """
        path = Path(file_path)
        try:
            with path.open("r", encoding="utf-8") as f:
                raw_data = json.load(f)
        except FileNotFoundError:
            raise FileNotFoundError(f"🔍 File {file_path} not found.")
        except json.JSONDecodeError as e:
            raise ConfigurationError(
                f"📋 File {file_path} contains invalid JSON.", [f"<root>: {e.msg}"]
            )
        except (UnicodeDecodeError, OSError) as e:
            raise ConfigurationError(
                f"📋 File {file_path} could not be read.", [f"<root>: {e}"]
            )
        return RunConfigDocument.from_dict(raw_data, overrides)

    @staticmethod
    def load_distance_matrix(file_path: str | Path) -> DistanceMatrix:
        """Load a ``From,To,Distance`` edge-list CSV.

        Raises:
            FileNotFoundError: If the file doesn't exist.
            InvalidInstanceError: If the file is unreadable or the header or rows are malformed.
            GAError: Any instance error raised while building the matrix.
        """
        path = Path(file_path)
        try:
            with path.open("r", newline="", encoding="utf-8") as f:
                reader = csv.DictReader(f)
                header = [name.strip() for name in reader.fieldnames or []]
                missing = [c for c in EDGE_COLUMNS if c not in header]
                if missing:
                    raise InvalidInstanceError(
                        f"📋 File {file_path} is missing column(s) {missing}."
                    )
                reader.fieldnames = header
                rows = [
                    {k: (v or "").strip() for k, v in row.items() if k is not None}
                    for row in reader
                ]
        except FileNotFoundError:
            raise FileNotFoundError(f"🔍 File {file_path} not found.")
        except csv.Error as e:
            raise InvalidInstanceError(f"📋 File {file_path} is not valid CSV: {e}")
        except (UnicodeDecodeError, OSError) as e:
            raise InvalidInstanceError(f"📋 File {file_path} could not be read: {e}")
        return load_distance_edges(rows)

    @staticmethod
    def save_distance_matrix(matrix: DistanceMatrix, file_path: str | Path) -> Path:
        """Write a matrix as a ``From,To,Distance`` edge list."""
        path = Path(file_path)
        with path.open("w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=EDGE_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(distance_edges(matrix))
        return path

    @staticmethod
    def output_paths(
        config_path: str | Path, seed: int, output_dir: str | Path | None = None
    ) -> tuple[Path, Path]:
        """Per-seed CSV log and JSON summary paths for a run configuration."""
        stem = Path(config_path).stem
        output_dir = Path(output_dir or config_manager.get("out_dir"))
        return (
            output_dir / f"{stem}_seed{seed}_generations.csv",
            output_dir / f"{stem}_seed{seed}_summary.json",
        )

    @staticmethod
    def save_generation_log(history: list[GenerationStats] | tuple, file_path: str | Path) -> Path:
        """Write one CSV row per generation.

        Fitness values are written with ``repr`` so they parse back exactly.

        Raises:
            OutputError: If there's an error saving the file.
        """
        path = Path(file_path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(LOG_COLUMNS)
                for stats in history:
                    writer.writerow(
                        [
                            stats.generation,
                            repr(float(stats.best_fitness)),
                            repr(float(stats.mean_fitness)),
                            stats.best_chromosome.render(),
                        ]
                    )
        except OSError as e:
            raise OutputError(f"❌ Error saving generation log: {e}")
        logger.info("Wrote generation log %s", path)
        return path

    @staticmethod
    def read_generation_log(file_path: str | Path, problem: Problem) -> list[GenerationStats]:
        """Parse a generation log back into statistics.

        Raises:
            FileNotFoundError: If the file doesn't exist.
            InvalidInstanceError: If the header is not the log header.
        """
        path = Path(file_path)
        try:
            with path.open("r", newline="") as f:
                reader = csv.DictReader(f)
                if tuple(reader.fieldnames or ()) != LOG_COLUMNS:
                    raise InvalidInstanceError(f"📋 File {file_path} is not a generation log.")
                return [
                    GenerationStats(
                        generation=int(row["generation"]),
                        best_fitness=float(row["best_fitness"]),
                        mean_fitness=float(row["mean_fitness"]),
                        best_chromosome=problem.parse_rendered(row["best_tour"]),
                    )
                    for row in reader
                ]
        except FileNotFoundError:
            raise FileNotFoundError(f"🔍 File {file_path} not found.")

    @staticmethod
    def run_summary(run_log: RunLog, document: RunConfigDocument) -> dict[str, Any]:
        """Build the JSON-ready summary of a run."""
        return {
            "config": document.model_dump(mode="json"),
            "engine": asdict(run_log.config),
            "termination_reason": str(run_log.termination_reason),
            "generations": run_log.generations,
            "total_evaluations": run_log.total_evaluations,
            "best": {
                "fitness": run_log.best.fitness,
                "chromosome": run_log.best.chromosome.render(),
            },
        }

    @staticmethod
    def save_run_summary(
        run_log: RunLog, document: RunConfigDocument, file_path: str | Path
    ) -> Path:
        """Save the run summary as a JSON file.

        Raises:
            OutputError: If there's an error saving the file.
        """
        path = Path(file_path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w") as f:
                json.dump(IOManager.run_summary(run_log, document), f, indent=4)
        except (OSError, TypeError) as e:
            raise OutputError(f"❌ Error saving run summary: {e}")
        logger.info("Wrote run summary %s", path)
        return path
