"""Chromosome representations and their validity rules.

Places are 0-based indices; place 0 is the fixed home place and never appears
in a permutation chromosome. Labels ``P1``..``Pn`` are only used for display.
"""

import re
from collections import Counter
from dataclasses import dataclass, field, replace

import numpy as np

from genalgo.core.errors import ChromosomeValidationError, InvalidInstanceError

HOME = 0

PlaceId = int

_LABEL_PATTERN = re.compile(r"^P([1-9][0-9]*)$")


def place_label(index: PlaceId) -> str:
    """Render a 0-based place index as its ``P<k>`` label."""
    return f"P{index + 1}"


def parse_place_label(label: str) -> PlaceId:
    """Parse a ``P<k>`` label into its 0-based index.

    Raises:
        InvalidInstanceError: If the label is not of the form ``P<k>`` with k >= 1.
    """
    match = _LABEL_PATTERN.match(label.strip())
    if match is None:
        raise InvalidInstanceError(f"Place label {label!r} is not of the form P<k>.")
    return int(match.group(1)) - 1


@dataclass(frozen=True)
class PermutationChromosome:
    """Ordering of the non-home places defining a closed tour.

    Attributes:
        genes: Place indices in visiting order, home excluded.
    """

    genes: tuple[PlaceId, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "genes", tuple(int(g) for g in self.genes))

    def __len__(self) -> int:
        return len(self.genes)

    def render(self) -> str:
        """Render the closed tour, e.g. ``P1-P3-P2-P1``."""
        return "-".join(place_label(p) for p in tour_of(self))


@dataclass(frozen=True)
class StringChromosome:
    """Character sequence evolved towards a target string.

    Attributes:
        genes: The candidate string.
    """

    genes: str

    def __len__(self) -> int:
        return len(self.genes)

    def render(self) -> str:
        return self.genes


Chromosome = PermutationChromosome | StringChromosome


@dataclass(frozen=True)
class Individual:
    """A chromosome together with its (lower is better) fitness.

    Attributes:
        chromosome: The encoded candidate.
        fitness: Problem fitness, ``None`` until evaluated.
    """

    chromosome: Chromosome
    fitness: float | None = None

    @property
    def evaluated(self) -> bool:
        return self.fitness is not None

    def with_fitness(self, fitness: float) -> "Individual":
        return replace(self, fitness=fitness)


@dataclass(frozen=True)
class Population:
    """Ordered population of a single generation.

    Attributes:
        members: Individuals in population order.
        generation: Generation counter, 0 for the initial population.
    """

    members: tuple[Individual, ...]
    generation: int = 0

    def __len__(self) -> int:
        return len(self.members)

    @property
    def fitnesses(self) -> list[float]:
        """Fitness values in population order.

        Raises:
            ValueError: If any member has not been evaluated.
        """
        if not all(m.evaluated for m in self.members):
            raise ValueError("Population has unevaluated members.")
        return [float(m.fitness) for m in self.members]

    def best(self) -> Individual:
        """Return the lowest-fitness member; ties go to the earliest member."""
        fitnesses = self.fitnesses
        return self.members[int(np.argmin(fitnesses))]


@dataclass(frozen=True)
class PermutationVerdict:
    """Outcome of validating a permutation chromosome.

    Attributes:
        duplicates: Places that occur more than once.
        missing: Places in ``[1, n)`` that do not occur.
        home_present: Whether the home place occurs.
        out_of_range: Genes outside ``[0, n)``.
        expected_length: Required chromosome length ``n - 1``.
        actual_length: Observed chromosome length.
    """

    duplicates: tuple[PlaceId, ...] = ()
    missing: tuple[PlaceId, ...] = ()
    home_present: bool = False
    out_of_range: tuple[int, ...] = ()
    expected_length: int = 0
    actual_length: int = 0

    @property
    def wrong_length(self) -> bool:
        return self.expected_length != self.actual_length

    @property
    def valid(self) -> bool:
        return not (
            self.duplicates
            or self.missing
            or self.home_present
            or self.out_of_range
            or self.wrong_length
        )

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> list[str]:
        """List the violations in readable form."""
        problems = []
        if self.duplicates:
            problems.append(
                "duplicate " + ", ".join(place_label(p) for p in self.duplicates)
            )
        if self.missing:
            problems.append("missing " + ", ".join(place_label(p) for p in self.missing))
        if self.home_present:
            problems.append(f"home {place_label(HOME)} present")
        if self.out_of_range:
            problems.append("out of range " + ", ".join(map(str, self.out_of_range)))
        if self.wrong_length:
            problems.append(
                f"length {self.actual_length}, expected {self.expected_length}"
            )
        return problems


@dataclass(frozen=True)
class StringVerdict:
    """Outcome of validating a string chromosome against an instance."""

    expected_length: int
    actual_length: int
    foreign_characters: tuple[str, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return self.expected_length == self.actual_length and not self.foreign_characters

    def __bool__(self) -> bool:
        return self.valid


def random_permutation(place_count: int, rng: np.random.Generator) -> PermutationChromosome:
    """Draw a uniformly random permutation chromosome.

    Args:
        place_count: Number of places including home.
        rng: Seeded random source; consumes one shuffle.

    Returns:
        A valid chromosome of length ``place_count - 1``.

    Raises:
        InvalidInstanceError: If ``place_count < 2``.
    """
    if place_count < 2:
        raise InvalidInstanceError(f"Need at least 2 places, got {place_count}.")
    return PermutationChromosome(tuple(rng.permutation(np.arange(1, place_count))))


def validate_permutation(
    chromosome: PermutationChromosome, place_count: int
) -> PermutationVerdict:
    """Check a chromosome against the permutation invariants for ``place_count`` places."""
    genes = chromosome.genes
    counts = Counter(genes)
    expected = set(range(1, place_count))
    return PermutationVerdict(
        duplicates=tuple(sorted(g for g, c in counts.items() if c > 1)),
        missing=tuple(sorted(expected - counts.keys())),
        home_present=HOME in counts,
        out_of_range=tuple(sorted(g for g in counts if not 0 <= g < place_count)),
        expected_length=place_count - 1,
        actual_length=len(genes),
    )


def require_permutation(chromosome: PermutationChromosome, place_count: int) -> None:
    """Raise if the chromosome is not a valid permutation for ``place_count``.

    Raises:
        ChromosomeValidationError: Carrying the structured verdict.
    """
    verdict = validate_permutation(chromosome, place_count)
    if not verdict:
        raise ChromosomeValidationError(
            f"Invalid permutation {list(chromosome.genes)}: "
            + "; ".join(verdict.describe()),
            verdict,
        )


def tour_of(chromosome: PermutationChromosome) -> tuple[PlaceId, ...]:
    """Expand a chromosome into its closed, home-anchored tour."""
    return (HOME, *chromosome.genes, HOME)


def random_string(length: int, rng: np.random.Generator, alphabet: str) -> StringChromosome:
    """Draw a string of ``length`` characters uniformly from ``alphabet``."""
    if not alphabet:
        raise InvalidInstanceError("Alphabet must not be empty.")
    indices = rng.integers(0, len(alphabet), size=length)
    return StringChromosome("".join(alphabet[i] for i in indices))


def validate_string(
    chromosome: StringChromosome, length: int, alphabet: str
) -> StringVerdict:
    """Check length and alphabet membership of a string chromosome."""
    allowed = set(alphabet)
    return StringVerdict(
        expected_length=length,
        actual_length=len(chromosome),
        foreign_characters=tuple(sorted({c for c in chromosome.genes if c not in allowed})),
    )
