"""Pytest configuration and shared fixtures.

This module provides fixtures that can be shared across all test modules.
"""

import json
from collections.abc import Callable
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from genalgo.core.encoding import PermutationChromosome
from genalgo.core.problems import DistanceMatrix, TspInstance
from genalgo.core.worked_example import initial_population, travel_history_instance


@pytest.fixture
def travel_instance() -> TspInstance:
    """The six-place worked-example instance."""
    return travel_history_instance()


@pytest.fixture
def initial_chromosomes() -> list[PermutationChromosome]:
    """The eight printed initial chromosomes."""
    return initial_population()


@pytest.fixture
def two_place_instance() -> TspInstance:
    """Two places five units apart."""
    return TspInstance(DistanceMatrix(np.array([[0.0, 5.0], [5.0, 0.0]])))


@pytest.fixture
def random_instance() -> Callable[[int, int], TspInstance]:
    """Factory for random symmetric integer-distance instances.

    Returns:
        Function ``(place_count, seed) -> TspInstance`` with distances in [1, 20].
    """

    def build(place_count: int, seed: int) -> TspInstance:
        rng = np.random.default_rng(seed)
        entries = np.zeros((place_count, place_count))
        for a, b in combinations(range(place_count), 2):
            entries[a, b] = entries[b, a] = rng.integers(1, 21)
        return TspInstance(DistanceMatrix(entries))

    return build


@pytest.fixture
def travel_csv(tmp_path) -> Path:
    """Write the worked-example edge list, serial column included.

    Returns:
        Path to the CSV file.
    """
    rows = [
        "S. No.,From,To,Distance",
        "1,P1,P2,5", "2,P1,P3,3", "3,P1,P4,4", "45,P1,P5,6", "6,P1,P6,2",
        "7,P2,P3,7", "8,P2,P4,4", "9,P2,P5,3", "10,P2,P6,5", "11,P3,P4,9",
        "12,P3,P5,8", "13,P3,P6,8", "14,P4,P5,4", "15,P4,P6,3", "16,P5,P6,6",
    ]
    path = tmp_path / "travel_history.csv"
    path.write_text("\n".join(rows) + "\n")
    return path


@pytest.fixture
def tsp_document() -> dict:
    """A valid TSP run configuration document referring to ``travel_history.csv``."""
    return {
        "problem": "tsp",
        "instance": "travel_history.csv",
        "population_size": 8,
        "crossover": {"operator": "ox1", "rate": 0.9},
        "mutation": {"operator": "swap", "rate": 0.2},
        "elitism_count": 1,
        "seed": 1,
        "termination": {"max_generations": 30},
    }


@pytest.fixture
def tsp_config_file(tmp_path, travel_csv, tsp_document) -> Path:
    """Write ``tsp_document`` next to ``travel_csv``.

    Returns:
        Path to the JSON configuration.
    """
    path = tmp_path / "tsp_run.json"
    path.write_text(json.dumps(tsp_document))
    return path
