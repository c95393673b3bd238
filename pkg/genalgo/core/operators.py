"""Selection, crossover and mutation operators.

Operators are pure functions of their inputs. Where randomness is needed the
caller passes the run's generator explicitly; the draws each operator makes are
listed in its docstring because they are part of the determinism contract.
"""

import math
from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from itertools import accumulate

import numpy as np

from genalgo.core.encoding import Chromosome, PermutationChromosome, StringChromosome
from genalgo.core.errors import ConfigurationError, DomainError


class CrossoverOperator(StrEnum):
    OX1 = "ox1"
    PMX = "pmx"
    SINGLE_POINT = "single-point"


class MutationOperator(StrEnum):
    SWAP = "swap"
    RANDOM_RESET = "random-reset"


PERMUTATION_CROSSOVERS = frozenset({CrossoverOperator.OX1, CrossoverOperator.PMX})


def _check_rate(name: str, rate: float) -> None:
    if not 0.0 <= rate <= 1.0:
        raise ConfigurationError(f"{name} rate {rate} is outside [0, 1].", [f"{name}.rate"])


@dataclass(frozen=True)
class CrossoverSpec:
    """Which crossover to apply and how often.

    Attributes:
        operator: Crossover operator name.
        rate: Probability that a selected pair is recombined instead of cloned.
    """

    operator: CrossoverOperator = CrossoverOperator.OX1
    rate: float = 0.9

    def __post_init__(self) -> None:
        object.__setattr__(self, "operator", CrossoverOperator(self.operator))
        _check_rate("crossover", self.rate)


@dataclass(frozen=True)
class MutationSpec:
    """Which mutation to apply and to what share of children.

    Attributes:
        operator: Mutation operator name.
        rate: Per-individual probability of one mutation.
    """

    operator: MutationOperator = MutationOperator.SWAP
    rate: float = 0.2

    def __post_init__(self) -> None:
        object.__setattr__(self, "operator", MutationOperator(self.operator))
        _check_rate("mutation", self.rate)


@dataclass(frozen=True)
class SelectionWheel:
    """Roulette wheel over a population's reciprocal fitnesses.

    Attributes:
        values: Selection value ``1 / fitness`` per individual.
        total: Sum of the selection values.
        probabilities: ``values[i] / total``.
        cumulative: Running sum of ``probabilities``; the last cell is exactly 1.
    """

    values: tuple[float, ...]
    total: float
    probabilities: tuple[float, ...]
    cumulative: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)


def build_wheel(fitnesses: Sequence[float], decimals: int | None = None) -> SelectionWheel:
    """Build the selection wheel for a generation.

    Args:
        fitnesses: Positive fitness per individual, lower is better.
        decimals: When set, selection values and their total are rounded to this
            many decimals before dividing, which is how hand-computed tables
            printed to fixed precision arrive at their probabilities. The engine
            always uses exact arithmetic.

    Returns:
        The wheel.

    Raises:
        DomainError: If the sequence is empty or any fitness is not a positive finite number.
    """
    if len(fitnesses) == 0:
        raise DomainError("Cannot build a selection wheel for an empty population.")
    for index, fitness in enumerate(fitnesses):
        if not (math.isfinite(fitness) and fitness > 0):
            raise DomainError(f"Fitness at index {index} is {fitness}; must be > 0.")

    exact = [1.0 / float(f) for f in fitnesses]
    if decimals is None:
        values = exact
        total = math.fsum(values)
    else:
        values = [round(v, decimals) for v in exact]
        total = round(math.fsum(exact), decimals)

    probabilities = [v / total for v in values]
    cumulative = [min(c, 1.0) for c in accumulate(probabilities)]
    cumulative[-1] = 1.0
    return SelectionWheel(
        values=tuple(values),
        total=total,
        probabilities=tuple(probabilities),
        cumulative=tuple(cumulative),
    )


def spin(wheel: SelectionWheel, r: float) -> int:
    """Return the 0-based index of the smallest ``i`` with ``r < cumulative[i]``.

    Raises:
        DomainError: If ``r`` is outside ``[0, 1)``.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"Spin value {r} is outside [0, 1).")
    return min(bisect_right(wheel.cumulative, r), len(wheel.cumulative) - 1)


def _check_parents(parent_a: Sequence, parent_b: Sequence) -> None:
    if len(parent_a) != len(parent_b):
        raise DomainError("Parents must have the same length.")
    if set(parent_a) != set(parent_b) or len(set(parent_a)) != len(parent_a):
        raise DomainError("Parents must be permutations of the same places.")


def _check_cuts(cut1: int, cut2: int, length: int) -> None:
    if not 0 <= cut1 <= cut2 <= length:
        raise DomainError(f"Cuts ({cut1}, {cut2}) invalid for length {length}.")


def _ox1_child(keep: tuple[int, ...], donor: tuple[int, ...], cut1: int, cut2: int) -> tuple[int, ...]:
    segment = keep[cut1:cut2]
    taken = set(segment)
    filler = iter(g for g in donor if g not in taken)
    return tuple(
        keep[i] if cut1 <= i < cut2 else next(filler) for i in range(len(keep))
    )


def order_crossover(
    parent_a: PermutationChromosome,
    parent_b: PermutationChromosome,
    cut1: int,
    cut2: int,
) -> tuple[PermutationChromosome, PermutationChromosome]:
    """Order crossover (OX1).

    ``child_a`` keeps ``parent_a[cut1:cut2]`` in place; the other positions are
    filled left to right with ``parent_b``'s genes in ``parent_b``'s order,
    skipping genes already in the segment. ``child_b`` is symmetric.

    Raises:
        DomainError: On mismatched parents or invalid cuts.
    """
    a, b = parent_a.genes, parent_b.genes
    _check_parents(a, b)
    _check_cuts(cut1, cut2, len(a))
    return (
        PermutationChromosome(_ox1_child(a, b, cut1, cut2)),
        PermutationChromosome(_ox1_child(b, a, cut1, cut2)),
    )


def _pmx_child(keep: tuple[int, ...], donor: tuple[int, ...], cut1: int, cut2: int) -> tuple[int, ...]:
    position_in_keep = {keep[i]: i for i in range(cut1, cut2)}
    child = list(donor)
    child[cut1:cut2] = keep[cut1:cut2]
    for i in [*range(cut1), *range(cut2, len(keep))]:
        gene = donor[i]
        # follow the segment mapping until the gene is free
        while gene in position_in_keep:
            gene = donor[position_in_keep[gene]]
        child[i] = gene
    return tuple(child)


def pmx_crossover(
    parent_a: PermutationChromosome,
    parent_b: PermutationChromosome,
    cut1: int,
    cut2: int,
) -> tuple[PermutationChromosome, PermutationChromosome]:
    """Partially mapped crossover (PMX).

    ``child_a`` takes ``parent_a``'s segment and ``parent_b``'s genes elsewhere;
    genes that would repeat are repaired through the segment mapping. With an
    empty segment no mapping applies, so ``child_a`` equals ``parent_b`` and
    ``child_b`` equals ``parent_a``; cuts ``(0, length)`` return the parents in order.

    Raises:
        DomainError: On mismatched parents or invalid cuts.
    """
    a, b = parent_a.genes, parent_b.genes
    _check_parents(a, b)
    _check_cuts(cut1, cut2, len(a))
    return (
        PermutationChromosome(_pmx_child(a, b, cut1, cut2)),
        PermutationChromosome(_pmx_child(b, a, cut1, cut2)),
    )


def single_point_crossover(
    parent_a: StringChromosome, parent_b: StringChromosome, point: int
) -> tuple[StringChromosome, StringChromosome]:
    """Exchange the tails of two strings after ``point``.

    Raises:
        DomainError: On length mismatch or a point outside ``[0, length]``.
    """
    a, b = parent_a.genes, parent_b.genes
    if len(a) != len(b):
        raise DomainError("Parents must have the same length.")
    if not 0 <= point <= len(a):
        raise DomainError(f"Crossover point {point} invalid for length {len(a)}.")
    return StringChromosome(a[:point] + b[point:]), StringChromosome(b[:point] + a[point:])


def swap_mutation(chromosome: PermutationChromosome, i: int, j: int) -> PermutationChromosome:
    """Exchange the genes at positions ``i`` and ``j``.

    Raises:
        DomainError: If either position is out of range.
    """
    genes = list(chromosome.genes)
    for index in (i, j):
        if not 0 <= index < len(genes):
            raise DomainError(f"Position {index} out of range for length {len(genes)}.")
    genes[i], genes[j] = genes[j], genes[i]
    return PermutationChromosome(tuple(genes))


def random_reset_mutation(
    chromosome: StringChromosome,
    position: int,
    rng: np.random.Generator,
    alphabet: str,
) -> StringChromosome:
    """Replace one character with a uniform draw from ``alphabet``.

    Draws one ``rng.integers(0, len(alphabet))``.

    Raises:
        DomainError: If ``position`` is out of range or the alphabet is empty.
    """
    genes = chromosome.genes
    if not 0 <= position < len(genes):
        raise DomainError(f"Position {position} out of range for length {len(genes)}.")
    if not alphabet:
        raise DomainError("Alphabet must not be empty.")
    replacement = alphabet[int(rng.integers(0, len(alphabet)))]
    return StringChromosome(genes[:position] + replacement + genes[position + 1 :])


def recombine(
    spec: CrossoverSpec,
    parent_a: Chromosome,
    parent_b: Chromosome,
    rng: np.random.Generator,
) -> tuple[Chromosome, Chromosome]:
    """Apply the configured crossover, drawing its cut points from ``rng``.

    Permutation operators draw ``integers(0, L + 1, size=2)`` and sort the pair;
    single-point draws ``integers(0, L + 1)``.
    """
    length = len(parent_a)
    if spec.operator is CrossoverOperator.SINGLE_POINT:
        return single_point_crossover(parent_a, parent_b, int(rng.integers(0, length + 1)))
    cut1, cut2 = sorted(int(c) for c in rng.integers(0, length + 1, size=2))
    if spec.operator is CrossoverOperator.PMX:
        return pmx_crossover(parent_a, parent_b, cut1, cut2)
    return order_crossover(parent_a, parent_b, cut1, cut2)


def mutate(
    spec: MutationSpec,
    chromosome: Chromosome,
    rng: np.random.Generator,
    alphabet: str = "",
) -> Chromosome:
    """Apply one configured mutation, drawing its positions from ``rng``.

    Swap draws ``integers(0, L, size=2)``; random reset draws a position with
    ``integers(0, L)`` and then the replacement character.
    """
    length = len(chromosome)
    if spec.operator is MutationOperator.RANDOM_RESET:
        return random_reset_mutation(chromosome, int(rng.integers(0, length)), rng, alphabet)
    i, j = (int(x) for x in rng.integers(0, length, size=2))
    return swap_mutation(chromosome, i, j)
