"""Unit tests for worked_example.py module.

Tests that the embedded worked example recomputes to its printed values.
"""

import pytest

from genalgo.core.worked_example import (
    INITIAL_POPULATION,
    INITIAL_TOUR_LENGTHS,
    TRAVEL_HISTORY,
    parse_chromosome,
    reproduce_worked_example,
    travel_history_instance,
)


@pytest.fixture(scope="module")
def report():
    return reproduce_worked_example()


class TestFixtures:
    """Test class for the embedded fixtures."""

    def test_travel_history_covers_every_pair(self):
        assert len(TRAVEL_HISTORY) == 15
        assert travel_history_instance().place_count == 6

    def test_serial_column_is_ignored(self):
        assert any(row["S. No."] == "45" for row in TRAVEL_HISTORY)
        assert travel_history_instance().matrix.distance(0, 4) == 6

    def test_parse_chromosome(self):
        assert parse_chromosome("P2 P3 P5 P4 P6").genes == (1, 2, 4, 3, 5)

    def test_population_rows(self):
        assert len(INITIAL_POPULATION) == len(INITIAL_TOUR_LENGTHS) == 8


class TestReproduceWorkedExample:
    """Test class for reproduce_worked_example."""

    def test_every_reproducible_cell_passes(self, report):
        """Test the full recomputation.

        Given: Only the embedded distances and printed chromosomes
        When: The worked example is recomputed
        Then: Every checked cell should match and the cross-check should agree.
        """
        assert report.failures() == []
        assert report.all_passed
        assert report.held_karp_agrees

    def test_sections(self, report):
        sections = report.sections()

        assert list(sections) == [
            "initial_tour_legs",
            "initial_tour_lengths",
            "selection_values",
            "selection_total",
            "selection_probabilities",
            "cumulative_probabilities",
            "post_mutation_tour_legs",
            "post_mutation_tour_lengths",
        ]
        assert len(sections["initial_tour_legs"]) == 48
        assert len(sections["post_mutation_tour_legs"]) == 48
        assert sections["post_mutation_tour_legs"][0].cell == "row 1 P1P4"
        assert len(sections["selection_total"]) == 1
        assert [c.computed for c in sections["post_mutation_tour_lengths"]] == [
            30, 31, 29, 30, 33, 35, 23, 27,
        ]

    def test_tour_lengths_are_exact(self, report):
        for comparison in report.sections()["initial_tour_lengths"]:
            assert comparison.tolerance == 0
            assert comparison.computed == comparison.expected

    def test_known_inconsistent_sections(self, report):
        sections = {k.section: k for k in report.known_inconsistent}

        assert set(sections) == {"parent_mapping", "crossover_draws", "post_mutation_chromosomes"}
        assert "selects row 2, not row 4" in sections["parent_mapping"].note
        assert len(sections["post_mutation_chromosomes"].cells) == 8
        assert sections["crossover_draws"].cells[0] == "draw 1: 0.76588"

    def test_optimum_and_claims(self, report):
        assert report.optimal_route == "P1-P3-P2-P5-P4-P6-P1"
        assert report.optimal_length == 22
        assert report.enumerated_count == 120
        flagged = [c.name for c in report.claims if not c.consistent_with_optimum]
        assert flagged == ["claimed optimum (label order)", "best post-mutation route"]

    def test_report_serialises(self, report):
        data = report.model_dump(mode="json")

        assert data["all_passed"] is True
        assert all(c["passed"] for c in data["comparisons"])
