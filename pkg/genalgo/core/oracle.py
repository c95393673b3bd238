"""Exhaustive ground truth for small tour instances.

``brute_force_tsp`` enumerates every home-anchored tour; ``held_karp_tsp`` is an
independent bitmask dynamic program used to cross-check it.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import permutations

from genalgo.core.encoding import HOME, PermutationChromosome, PlaceId, place_label, tour_of
from genalgo.core.errors import InstanceTooLargeError
from genalgo.core.problems import TspInstance, tour_length

logger = logging.getLogger(__name__)

MAX_ORACLE_PLACES = 11


@dataclass(frozen=True)
class OracleResult:
    """Optimal tour found by exhaustive enumeration.

    Attributes:
        optimal_tour: Home-anchored closed tour.
        optimal_length: Its length.
        enumerated_count: Number of tours examined, ``(n - 1)!``.
    """

    optimal_tour: tuple[PlaceId, ...]
    optimal_length: float
    enumerated_count: int

    @property
    def chromosome(self) -> PermutationChromosome:
        return PermutationChromosome(self.optimal_tour[1:-1])

    def to_dict(self) -> dict:
        return {
            "optimal_tour": [place_label(p) for p in self.optimal_tour],
            "optimal_length": self.optimal_length,
            "enumerated_count": self.enumerated_count,
        }


def _check_size(instance: TspInstance) -> None:
    if instance.place_count > MAX_ORACLE_PLACES:
        raise InstanceTooLargeError(
            f"Exhaustive search is limited to {MAX_ORACLE_PLACES} places, "
            f"instance has {instance.place_count}."
        )


def brute_force_tsp(instance: TspInstance) -> OracleResult:
    """Find the shortest tour by enumerating all ``(n - 1)!`` orderings.

    Orderings are visited in lexicographic order and only a strictly shorter tour
    replaces the incumbent, so ties resolve to the lexicographically smallest
    chromosome.

    Raises:
        InstanceTooLargeError: If the instance has more than 11 places.
    """
    _check_size(instance)
    d = instance.matrix.entries.tolist()
    best_genes: tuple[int, ...] | None = None
    best_length = math.inf
    count = 0
    for genes in permutations(range(1, instance.place_count)):
        count += 1
        length = d[HOME][genes[0]] + d[genes[-1]][HOME]
        for a, b in zip(genes, genes[1:]):
            length += d[a][b]
        if length < best_length:
            best_length, best_genes = length, genes
    logger.info("Enumerated %d tours, optimum %s", count, best_length)
    tour = tour_of(PermutationChromosome(best_genes))
    # recompute along the tour so the reported length is exactly tsp_fitness
    return OracleResult(tour, tour_length(instance, tour), count)


def held_karp_tsp(instance: TspInstance) -> tuple[float, tuple[PlaceId, ...]]:
    """Shortest closed tour by Held-Karp dynamic programming over subsets.

    Returns:
        ``(length, tour)`` with the tour anchored at home.

    Raises:
        InstanceTooLargeError: If the instance has more than 11 places.
    """
    _check_size(instance)
    n = instance.place_count
    d = instance.matrix.entries.tolist()
    if n == 2:
        return d[0][1] + d[1][0], (HOME, 1, HOME)

    # cost[(mask, last)]: shortest path from home through the places in mask ending at last
    cost: dict[tuple[int, int], float] = {}
    parent: dict[tuple[int, int], int] = {}
    for k in range(1, n):
        cost[(1 << k, k)] = d[HOME][k]

    for mask in range(1, 1 << n):
        if mask & 1:
            continue
        for last in range(1, n):
            if not mask & (1 << last) or (mask, last) not in cost:
                continue
            base = cost[(mask, last)]
            for nxt in range(1, n):
                if mask & (1 << nxt):
                    continue
                key = (mask | (1 << nxt), nxt)
                candidate = base + d[last][nxt]
                if candidate < cost.get(key, math.inf):
                    cost[key] = candidate
                    parent[key] = last

    full = (1 << n) - 2
    length, last = min((cost[(full, k)] + d[k][HOME], k) for k in range(1, n))

    path = []
    mask = full
    while True:
        path.append(last)
        previous = parent.get((mask, last))
        mask &= ~(1 << last)
        if previous is None:
            break
        last = previous
    return length, (HOME, *reversed(path), HOME)


@dataclass(frozen=True)
class RouteClaim:
    """A route asserted to be good, checked against the oracle.

    Attributes:
        name: Short description of where the claim comes from.
        tour: Claimed home-anchored route.
        length: Its length under the instance's distances.
        consistent_with_optimum: Whether the length equals the oracle optimum.
    """

    name: str
    tour: tuple[PlaceId, ...]
    length: float
    consistent_with_optimum: bool

    @property
    def route(self) -> str:
        return "-".join(place_label(p) for p in self.tour)


@dataclass(frozen=True)
class RouteClaimReport:
    """Oracle adjudication of a set of route claims.

    Attributes:
        oracle: Exhaustive optimum.
        held_karp_length: Length from the dynamic-programming cross-check.
        claims: Every adjudicated claim.
    """

    oracle: OracleResult
    held_karp_length: float
    claims: tuple[RouteClaim, ...]

    @property
    def cross_check_agrees(self) -> bool:
        return math.isclose(self.held_karp_length, self.oracle.optimal_length, rel_tol=1e-12)

    @property
    def flagged(self) -> tuple[RouteClaim, ...]:
        return tuple(c for c in self.claims if not c.consistent_with_optimum)


def verify_route_claims(
    instance: TspInstance, claims: Sequence[tuple[str, Sequence[PlaceId]]]
) -> RouteClaimReport:
    """Evaluate each claimed route and compare it with the exhaustive optimum.

    Args:
        instance: The instance the claims refer to.
        claims: ``(name, tour)`` pairs; tours are home-anchored.
    """
    oracle = brute_force_tsp(instance)
    held_karp_length, _ = held_karp_tsp(instance)
    adjudicated = []
    for name, tour in claims:
        length = tour_length(instance, tour)
        adjudicated.append(
            RouteClaim(
                name=name,
                tour=tuple(tour),
                length=length,
                consistent_with_optimum=math.isclose(length, oracle.optimal_length, rel_tol=1e-12),
            )
        )
        if not adjudicated[-1].consistent_with_optimum:
            logger.warning(
                "Claim %r has length %s, optimum is %s", name, length, oracle.optimal_length
            )
    return RouteClaimReport(oracle, held_karp_length, tuple(adjudicated))
