"""Data models for genalgo documents.

Run configuration documents and the worked-example report are validated and
serialised with pydantic, so unknown keys and out-of-range values are rejected
before any run starts.
"""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, computed_field, model_validator

from genalgo.core.engine import GAConfig, TerminationSpec
from genalgo.core.errors import ConfigurationError
from genalgo.core.operators import (
    PERMUTATION_CROSSOVERS,
    CrossoverOperator,
    CrossoverSpec,
    MutationOperator,
    MutationSpec,
)
from genalgo.core.problems import DEFAULT_ALPHABET
from genalgo.utils.rng import MAX_SEED

# CLI flag name -> path inside the run configuration document
OVERRIDE_PATHS: dict[str, tuple[str, ...]] = {
    "seed": ("seed",),
    "generations": ("termination", "max_generations"),
    "population": ("population_size",),
    "crossover_rate": ("crossover", "rate"),
    "mutation_rate": ("mutation", "rate"),
    "elitism": ("elitism_count",),
}


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class CrossoverDocument(_Strict):
    """Crossover section of a run configuration."""

    operator: CrossoverOperator
    rate: float = Field(ge=0.0, le=1.0)


class MutationDocument(_Strict):
    """Mutation section of a run configuration."""

    operator: MutationOperator
    rate: float = Field(ge=0.0, le=1.0)


class TerminationDocument(_Strict):
    """Termination section of a run configuration."""

    max_generations: int = Field(ge=1)
    fitness_threshold: float | None = Field(default=None, ge=0.0)
    stagnation_window: int | None = Field(default=None, ge=1)
    wall_clock_ms: int | None = Field(default=None, ge=1)


class RunConfigDocument(_Strict):
    """A complete, validated run configuration.

    Attributes:
        problem: ``"tsp"`` or ``"string"``.
        instance: Edge-list CSV path for ``tsp`` (relative to the config file),
            the target string for ``string``.
        alphabet: Gene alphabet for ``string`` runs; printable ASCII when omitted.
        population_size: Individuals per generation.
        crossover: Crossover operator and rate.
        mutation: Mutation operator and rate.
        elitism_count: Elites carried over per generation.
        seed: Unsigned 64-bit seed.
        termination: Stopping criteria.
    """

    problem: Literal["tsp", "string"]
    instance: str = Field(min_length=1)
    alphabet: str | None = Field(default=None, min_length=1)
    population_size: int = Field(ge=2)
    crossover: CrossoverDocument
    mutation: MutationDocument
    elitism_count: int = Field(default=1, ge=0)
    seed: int = Field(ge=0, le=MAX_SEED)
    termination: TerminationDocument

    @model_validator(mode="after")
    def _check_consistency(self) -> "RunConfigDocument":
        if self.elitism_count >= self.population_size:
            raise ValueError("elitism_count must be smaller than population_size")
        if self.problem == "tsp":
            if self.crossover.operator not in PERMUTATION_CROSSOVERS:
                raise ValueError("crossover.operator must be ox1 or pmx for tsp")
            if self.mutation.operator is not MutationOperator.SWAP:
                raise ValueError("mutation.operator must be swap for tsp")
            if self.alphabet is not None:
                raise ValueError("alphabet only applies to string problems")
        else:
            if self.crossover.operator is not CrossoverOperator.SINGLE_POINT:
                raise ValueError("crossover.operator must be single-point for string")
            if self.mutation.operator is not MutationOperator.RANDOM_RESET:
                raise ValueError("mutation.operator must be random-reset for string")
            foreign = sorted(set(self.instance) - set(self.alphabet or DEFAULT_ALPHABET))
            if foreign:
                raise ValueError(f"target characters {foreign} are not in the alphabet")
        return self

    @classmethod
    def from_dict(
        cls, data: dict[str, Any], overrides: dict[str, Any] | None = None
    ) -> "RunConfigDocument":
        """Merge CLI overrides into a raw document and validate it.

        Args:
            data: Parsed JSON document.
            overrides: Flag values keyed by ``OVERRIDE_PATHS`` names; ``None`` values are ignored.

        Returns:
            The validated document.

        Raises:
            ConfigurationError: Listing one violation per offending field.
        """
        if not isinstance(data, dict):
            raise ConfigurationError(
                "Run configuration must be a JSON object.", ["<root>: not an object"]
            )
        merged = {k: dict(v) if isinstance(v, dict) else v for k, v in data.items()}
        for name, value in (overrides or {}).items():
            if value is None:
                continue
            *parents, leaf = OVERRIDE_PATHS[name]
            target = merged
            for key in parents:
                target = target.setdefault(key, {})
                if not isinstance(target, dict):
                    raise ConfigurationError(f"Cannot override {name}.", [f"{key}: not an object"])
            target[leaf] = value

        try:
            return cls.model_validate(merged)
        except ValidationError as e:
            violations = [
                f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
                for err in e.errors()
            ]
            raise ConfigurationError(
                "Invalid run configuration: " + "; ".join(violations), violations
            )

    def to_ga_config(self) -> GAConfig:
        """Convert the document into engine parameters."""
        termination = self.termination
        return GAConfig(
            population_size=self.population_size,
            crossover=CrossoverSpec(self.crossover.operator, self.crossover.rate),
            mutation=MutationSpec(self.mutation.operator, self.mutation.rate),
            elitism_count=self.elitism_count,
            seed=self.seed,
            termination=TerminationSpec(
                max_generations=termination.max_generations,
                fitness_threshold=termination.fitness_threshold,
                stagnation_window=termination.stagnation_window,
                wall_clock_budget=(
                    termination.wall_clock_ms / 1000 if termination.wall_clock_ms else None
                ),
            ),
        )


class CellComparison(_Strict):
    """One recomputed table cell.

    Attributes:
        section: Which quantity the cell holds, e.g. ``selection_probabilities``.
        cell: Cell coordinate inside the section, e.g. ``row 2``.
        expected: Printed value.
        computed: Recomputed value.
        tolerance: Allowed absolute difference.
    """

    section: str
    cell: str
    expected: float
    computed: float
    tolerance: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return abs(self.expected - self.computed) <= self.tolerance


class KnownInconsistency(_Strict):
    """Cells that are reported but deliberately excluded from pass/fail."""

    section: str
    cells: list[str]
    note: str


class ClaimEntry(_Strict):
    """A route claim adjudicated against the exhaustive optimum."""

    name: str
    route: str
    length: float
    consistent_with_optimum: bool


class WorkedExampleReport(_Strict):
    """Recomputation of the worked tour example.

    Attributes:
        comparisons: Every checked cell.
        known_inconsistent: Sections reported as not checkable.
        claims: Route claims with their lengths.
        optimal_route: Exhaustive optimum route.
        optimal_length: Exhaustive optimum length.
        enumerated_count: Tours enumerated by the oracle.
        held_karp_agrees: Whether the dynamic-programming cross-check matches.
    """

    comparisons: list[CellComparison]
    known_inconsistent: list[KnownInconsistency]
    claims: list[ClaimEntry]
    optimal_route: str
    optimal_length: float
    enumerated_count: int
    held_karp_agrees: bool

    @computed_field
    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.comparisons) and self.held_karp_agrees

    def failures(self) -> list[CellComparison]:
        return [c for c in self.comparisons if not c.passed]

    def sections(self) -> dict[str, list[CellComparison]]:
        grouped: dict[str, list[CellComparison]] = {}
        for comparison in self.comparisons:
            grouped.setdefault(comparison.section, []).append(comparison)
        return grouped
