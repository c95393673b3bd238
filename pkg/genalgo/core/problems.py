"""Problem definitions: fitness functions and instance ingestion.

Both problems are minimisation problems. The travelling-salesman fitness is the
closed tour length; the target-string fitness is the number of mismatching
positions.
"""

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import ClassVar, Protocol

import numpy as np

from genalgo.core.encoding import (
    HOME,
    Chromosome,
    PermutationChromosome,
    PlaceId,
    StringChromosome,
    parse_place_label,
    place_label,
    random_permutation,
    random_string,
    require_permutation,
    tour_of,
    validate_string,
)
from genalgo.core.errors import (
    ChromosomeValidationError,
    ConflictError,
    DomainError,
    IncompleteInstanceError,
    InvalidInstanceError,
)

logger = logging.getLogger(__name__)

# The 95 printable 7-bit characters, space through tilde.
DEFAULT_ALPHABET = "".join(chr(code) for code in range(32, 127))

EDGE_COLUMNS = ("From", "To", "Distance")


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric, nonnegative place-to-place distances.

    Attributes:
        entries: Read-only ``n x n`` float array with a zero diagonal.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidInstanceError(f"Distance matrix must be square, got {entries.shape}.")
        if entries.shape[0] < 2:
            raise InvalidInstanceError("Distance matrix needs at least 2 places.")
        if not np.all(np.isfinite(entries)):
            raise DomainError("Distances must be finite.")
        if np.any(entries < 0):
            raise DomainError("Distances must be nonnegative.")
        if np.any(np.diag(entries) != 0):
            raise DomainError("Distance from a place to itself must be 0.")
        if not np.array_equal(entries, entries.T):
            raise InvalidInstanceError("Distance matrix must be symmetric.")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    def distance(self, a: PlaceId, b: PlaceId) -> float:
        return float(self.entries[a, b])

    def min_off_diagonal(self) -> float:
        mask = ~np.eye(self.size, dtype=bool)
        return float(self.entries[mask].min())


class Problem(Protocol):
    """What the engine needs from a problem instance."""

    kind: ClassVar[str]

    def random_chromosome(self, rng: np.random.Generator) -> Chromosome: ...

    def fitness(self, chromosome: Chromosome) -> float: ...

    def check_chromosome(self, chromosome: Chromosome) -> None: ...

    def parse_rendered(self, text: str) -> Chromosome: ...


@dataclass(frozen=True, eq=False)
class TspInstance:
    """Symmetric travelling-salesman instance anchored at the home place.

    Attributes:
        matrix: Place-to-place distances.
        home: The fixed start/end place, always index 0.
    """

    kind: ClassVar[str] = "tsp"

    matrix: DistanceMatrix
    home: PlaceId = HOME

    def __post_init__(self) -> None:
        if self.home != HOME:
            raise InvalidInstanceError("The home place must be index 0.")

    @property
    def place_count(self) -> int:
        return self.matrix.size

    def random_chromosome(self, rng: np.random.Generator) -> PermutationChromosome:
        return random_permutation(self.place_count, rng)

    def fitness(self, chromosome: Chromosome) -> float:
        return tsp_fitness(self, chromosome)

    def check_chromosome(self, chromosome: Chromosome) -> None:
        if not isinstance(chromosome, PermutationChromosome):
            raise ChromosomeValidationError(
                f"Expected a permutation chromosome, got {type(chromosome).__name__}."
            )
        require_permutation(chromosome, self.place_count)

    def parse_rendered(self, text: str) -> PermutationChromosome:
        places = [parse_place_label(label) for label in text.split("-")]
        if len(places) < 2 or places[0] != HOME or places[-1] != HOME:
            raise InvalidInstanceError(f"Route {text!r} is not anchored at home.")
        chromosome = PermutationChromosome(tuple(places[1:-1]))
        self.check_chromosome(chromosome)
        return chromosome


@dataclass(frozen=True)
class TargetStringInstance:
    """Evolve a string until it equals ``target``.

    Attributes:
        target: The string to reproduce.
        alphabet: Ordered gene alphabet; its order defines the draw index.
    """

    kind: ClassVar[str] = "string"

    target: str
    alphabet: str = DEFAULT_ALPHABET

    def __post_init__(self) -> None:
        if not self.target:
            raise InvalidInstanceError("Target string must not be empty.")
        alphabet = "".join(dict.fromkeys(self.alphabet))
        if not alphabet:
            raise InvalidInstanceError("Alphabet must not be empty.")
        foreign = sorted(set(self.target) - set(alphabet))
        if foreign:
            raise InvalidInstanceError(
                f"Target characters {foreign} are not in the alphabet."
            )
        object.__setattr__(self, "alphabet", alphabet)

    def random_chromosome(self, rng: np.random.Generator) -> StringChromosome:
        return random_string(len(self.target), rng, self.alphabet)

    def fitness(self, chromosome: Chromosome) -> float:
        return float(string_fitness(self, chromosome))

    def check_chromosome(self, chromosome: Chromosome) -> None:
        if not isinstance(chromosome, StringChromosome):
            raise ChromosomeValidationError(
                f"Expected a string chromosome, got {type(chromosome).__name__}."
            )
        verdict = validate_string(chromosome, len(self.target), self.alphabet)
        if not verdict:
            raise ChromosomeValidationError(
                f"Invalid string chromosome {chromosome.genes!r}.", verdict
            )

    def parse_rendered(self, text: str) -> StringChromosome:
        chromosome = StringChromosome(text)
        self.check_chromosome(chromosome)
        return chromosome


def tour_length(instance: TspInstance, tour: Sequence[PlaceId]) -> float:
    """Sum the leg distances of an explicit route."""
    route = np.asarray(tour, dtype=int)
    return float(instance.matrix.entries[route[:-1], route[1:]].sum())


def tsp_fitness(instance: TspInstance, chromosome: Chromosome) -> float:
    """Closed tour length of ``chromosome``; lower is better.

    Raises:
        ChromosomeValidationError: If the chromosome is not a valid permutation.
    """
    instance.check_chromosome(chromosome)
    return tour_length(instance, tour_of(chromosome))


def string_fitness(instance: TargetStringInstance, chromosome: StringChromosome) -> int:
    """Number of positions where ``chromosome`` differs from the target.

    Raises:
        ChromosomeValidationError: If the lengths differ.
    """
    if len(chromosome.genes) != len(instance.target):
        raise ChromosomeValidationError(
            f"Candidate length {len(chromosome.genes)} != target length {len(instance.target)}."
        )
    return sum(a != b for a, b in zip(chromosome.genes, instance.target, strict=True))


def _parse_distance(raw: str, row_number: int) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise InvalidInstanceError(f"Row {row_number}: distance {raw!r} is not a number.")
    if not math.isfinite(value) or value < 0:
        raise DomainError(f"Row {row_number}: distance {raw!r} must be finite and >= 0.")
    return value


def load_distance_edges(
    rows: Iterable[Mapping[str, str]], place_count: int | None = None
) -> DistanceMatrix:
    """Build a distance matrix from ``From,To,Distance`` rows.

    Columns other than the three edge columns (e.g. a serial number) are ignored.

    Args:
        rows: Edge rows keyed by column name, labels of the form ``P<k>``.
        place_count: Number of declared places. Defaults to the highest label seen.

    Returns:
        The symmetric matrix.

    Raises:
        InvalidInstanceError: Malformed labels, self-edges or too few places.
        ConflictError: The same pair appears with different distances.
        DomainError: A negative or non-finite distance.
        IncompleteInstanceError: Some unordered pair has no edge.
    """
    edges: dict[tuple[int, int], float] = {}
    for row_number, row in enumerate(rows, start=1):
        absent = [c for c in EDGE_COLUMNS if row.get(c) in (None, "")]
        if absent:
            raise InvalidInstanceError(f"Row {row_number}: missing column(s) {absent}.")
        a = parse_place_label(row["From"])
        b = parse_place_label(row["To"])
        if a == b:
            raise InvalidInstanceError(f"Row {row_number}: {row['From']} connects to itself.")
        distance = _parse_distance(row["Distance"], row_number)
        key = (min(a, b), max(a, b))
        if key in edges and edges[key] != distance:
            raise ConflictError(
                f"Row {row_number}: {place_label(key[0])}-{place_label(key[1])} "
                f"given as both {edges[key]:g} and {distance:g}."
            )
        edges[key] = distance

    highest = max((b for _, b in edges), default=0) + 1
    size = highest if place_count is None else place_count
    if size < 2:
        raise InvalidInstanceError("An instance needs at least 2 places.")
    if highest > size:
        raise InvalidInstanceError(
            f"Edge references {place_label(highest - 1)} but only {size} places are declared."
        )

    missing = [
        (place_label(a), place_label(b))
        for a, b in combinations(range(size), 2)
        if (a, b) not in edges
    ]
    if missing:
        names = ", ".join(f"{a}-{b}" for a, b in missing)
        raise IncompleteInstanceError(f"Missing distance for pair(s): {names}.", missing)

    entries = np.zeros((size, size))
    for (a, b), distance in edges.items():
        entries[a, b] = entries[b, a] = distance
    logger.debug("Loaded %d edges over %d places", len(edges), size)
    return DistanceMatrix(entries)


def format_distance(value: float) -> str:
    """Render a distance without a spurious ``.0`` for whole numbers."""
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def distance_edges(matrix: DistanceMatrix) -> list[dict[str, str]]:
    """Serialise a matrix back into ``From,To,Distance`` rows, one per pair."""
    return [
        {
            "From": place_label(a),
            "To": place_label(b),
            "Distance": format_distance(matrix.distance(a, b)),
        }
        for a, b in combinations(range(matrix.size), 2)
    ]
