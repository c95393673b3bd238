"""The generational GA loop.

A run is fully determined by its configuration, seed and problem: every random
draw comes from the single generator created in ``run`` and is consumed in the
order documented on ``step``.
"""

import logging
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from genalgo.core.encoding import Chromosome, Individual, Population
from genalgo.core.errors import ConfigurationError, DomainError, ExactOptimumFound
from genalgo.core.operators import (
    PERMUTATION_CROSSOVERS,
    CrossoverOperator,
    CrossoverSpec,
    MutationOperator,
    MutationSpec,
    build_wheel,
    mutate,
    recombine,
    spin,
)
from genalgo.core.problems import Problem
from genalgo.utils.rng import MAX_SEED, make_rng

logger = logging.getLogger(__name__)


class TerminationReason(StrEnum):
    EXACT_OPTIMUM = "exact_optimum"
    FITNESS_THRESHOLD = "fitness_threshold"
    STAGNATION = "stagnation"
    WALL_CLOCK = "wall_clock"
    MAX_GENERATIONS = "max_generations"


@dataclass(frozen=True)
class TerminationSpec:
    """When a run stops.

    Attributes:
        max_generations: Number of reproduction steps after which the run always stops.
        fitness_threshold: Stop once the best fitness is at or below this value.
        stagnation_window: Stop once the best fitness has not changed for this
            many consecutive generations.
        wall_clock_budget: Stop once this many seconds have elapsed.
    """

    max_generations: int = 100
    fitness_threshold: float | None = None
    stagnation_window: int | None = None
    wall_clock_budget: float | None = None

    def __post_init__(self) -> None:
        violations = []
        if self.max_generations < 1:
            violations.append("termination.max_generations must be >= 1")
        if self.fitness_threshold is not None and self.fitness_threshold < 0:
            violations.append("termination.fitness_threshold must be >= 0")
        if self.stagnation_window is not None and self.stagnation_window < 1:
            violations.append("termination.stagnation_window must be >= 1")
        if self.wall_clock_budget is not None and self.wall_clock_budget <= 0:
            violations.append("termination.wall_clock_budget must be > 0")
        if violations:
            raise ConfigurationError("; ".join(violations), violations)


@dataclass(frozen=True)
class GAConfig:
    """Engine parameters.

    Attributes:
        population_size: Number of individuals per generation.
        crossover: Crossover operator and rate.
        mutation: Mutation operator and per-individual rate.
        elitism_count: Best individuals copied unchanged into the next generation.
        seed: Unsigned 64-bit seed of the run's generator.
        termination: Stopping criteria.
    """

    population_size: int = 50
    crossover: CrossoverSpec = field(default_factory=CrossoverSpec)
    mutation: MutationSpec = field(default_factory=MutationSpec)
    elitism_count: int = 1
    seed: int = 0
    termination: TerminationSpec = field(default_factory=TerminationSpec)

    def __post_init__(self) -> None:
        violations = []
        if self.population_size < 2:
            violations.append("population_size must be >= 2")
        if self.elitism_count < 0:
            violations.append("elitism_count must be >= 0")
        elif self.elitism_count >= self.population_size:
            violations.append("elitism_count must be smaller than population_size")
        if not 0 <= self.seed <= MAX_SEED:
            violations.append("seed must be an unsigned 64-bit integer")
        if violations:
            raise ConfigurationError("; ".join(violations), violations)


@dataclass(frozen=True)
class GenerationStats:
    """Summary of one generation.

    Attributes:
        generation: Generation counter.
        best_fitness: Lowest fitness in the generation.
        mean_fitness: Mean fitness of the generation.
        best_chromosome: Chromosome of the best individual.
    """

    generation: int
    best_fitness: float
    mean_fitness: float
    best_chromosome: Chromosome


@dataclass(frozen=True)
class RunLog:
    """Everything a run produced.

    Attributes:
        config: The configuration the run used.
        history: Statistics for generation 0 onwards.
        best: Best individual observed over the whole run.
        termination_reason: The criterion that stopped the run.
        total_evaluations: Number of fitness evaluations performed.
    """

    config: GAConfig
    history: tuple[GenerationStats, ...]
    best: Individual
    termination_reason: TerminationReason
    total_evaluations: int

    @property
    def generations(self) -> int:
        """Number of reproduction steps performed."""
        return self.history[-1].generation


def check_compatibility(config: GAConfig, problem: Problem) -> None:
    """Reject operator choices that do not fit the problem's encoding.

    Raises:
        ConfigurationError: Listing every incompatible field.
    """
    violations = []
    if problem.kind == "tsp":
        if config.crossover.operator not in PERMUTATION_CROSSOVERS:
            violations.append(
                f"crossover.operator {config.crossover.operator} cannot recombine tours; use ox1 or pmx"
            )
        if config.mutation.operator is not MutationOperator.SWAP:
            violations.append(
                f"mutation.operator {config.mutation.operator} cannot mutate tours; use swap"
            )
    else:
        if config.crossover.operator is not CrossoverOperator.SINGLE_POINT:
            violations.append(
                f"crossover.operator {config.crossover.operator} only applies to tours; use single-point"
            )
        if config.mutation.operator is not MutationOperator.RANDOM_RESET:
            violations.append(
                f"mutation.operator {config.mutation.operator} only applies to tours; use random-reset"
            )
    if violations:
        raise ConfigurationError("; ".join(violations), violations)


def evaluate(population: Population, problem: Problem) -> Population:
    """Set every member's fitness from the problem.

    Raises:
        ChromosomeValidationError: If any chromosome is invalid for the problem.
    """
    members = []
    for member in population.members:
        problem.check_chromosome(member.chromosome)
        members.append(member.with_fitness(problem.fitness(member.chromosome)))
    return Population(tuple(members), population.generation)


def initialize(config: GAConfig, problem: Problem, rng: np.random.Generator) -> Population:
    """Create and evaluate generation 0 from random chromosomes."""
    check_compatibility(config, problem)
    members = tuple(
        Individual(problem.random_chromosome(rng)) for _ in range(config.population_size)
    )
    return evaluate(Population(members, generation=0), problem)


def step(
    population: Population,
    config: GAConfig,
    problem: Problem,
    rng: np.random.Generator,
) -> Population:
    """Produce the next evaluated generation.

    Draw order: elites take none; if the number of free slots is odd, one spin
    picks a clone; then per pair two spins, one crossover decision and, when it
    fires, the cut draws; then per child one mutation decision and, when it
    fires, the mutation draws.

    Raises:
        ExactOptimumFound: If a member already has fitness 0, which leaves the
            reciprocal wheel undefined.
    """
    fitnesses = population.fitnesses
    if min(fitnesses) == 0:
        raise ExactOptimumFound("A zero-fitness individual is already present.")

    members = population.members
    ranked = sorted(range(len(members)), key=lambda i: (fitnesses[i], i))
    offspring: list[Chromosome] = [members[i].chromosome for i in ranked[: config.elitism_count]]

    wheel = build_wheel(fitnesses)
    alphabet = getattr(problem, "alphabet", "")

    def select() -> Chromosome:
        return members[spin(wheel, float(rng.random()))].chromosome

    if (config.population_size - len(offspring)) % 2:
        offspring.append(select())

    while len(offspring) < config.population_size:
        child_a, child_b = select(), select()
        if rng.random() < config.crossover.rate:
            child_a, child_b = recombine(config.crossover, child_a, child_b, rng)
        for child in (child_a, child_b):
            if rng.random() < config.mutation.rate:
                child = mutate(config.mutation, child, rng, alphabet)
            offspring.append(child)

    next_population = Population(
        tuple(Individual(c) for c in offspring), population.generation + 1
    )
    return evaluate(next_population, problem)


def converged(history: Sequence[GenerationStats], window: int, tolerance: float) -> bool:
    """Whether the best fitness of the last ``window`` generations spans at most ``tolerance``.

    Raises:
        DomainError: If ``window < 1``.
    """
    if window < 1:
        raise DomainError(f"Convergence window must be >= 1, got {window}.")
    if len(history) < window:
        return False
    tail = [stats.best_fitness for stats in history[-window:]]
    return max(tail) - min(tail) <= tolerance


def generation_stats(population: Population) -> GenerationStats:
    """Summarise an evaluated population; ties for best resolve to the lowest index."""
    fitnesses = population.fitnesses
    best = population.best()
    return GenerationStats(
        generation=population.generation,
        best_fitness=float(best.fitness),
        mean_fitness=float(np.mean(fitnesses)),
        best_chromosome=best.chromosome,
    )


def _termination_reason(
    history: Sequence[GenerationStats],
    termination: TerminationSpec,
    elapsed: float,
) -> TerminationReason | None:
    latest = history[-1]
    if latest.best_fitness == 0:
        return TerminationReason.EXACT_OPTIMUM
    if termination.fitness_threshold is not None and latest.best_fitness <= termination.fitness_threshold:
        return TerminationReason.FITNESS_THRESHOLD
    if termination.stagnation_window is not None and converged(
        history, termination.stagnation_window + 1, 0.0
    ):
        return TerminationReason.STAGNATION
    if termination.wall_clock_budget is not None and elapsed >= termination.wall_clock_budget:
        return TerminationReason.WALL_CLOCK
    if latest.generation >= termination.max_generations:
        return TerminationReason.MAX_GENERATIONS
    return None


def run(
    config: GAConfig,
    problem: Problem,
    clock: Callable[[], float] = time.monotonic,
) -> RunLog:
    """Run the GA until one termination criterion holds.

    Args:
        config: Engine parameters.
        problem: Problem instance.
        clock: Monotonic seconds source, only consulted for the wall-clock budget.

    Returns:
        The run log.

    Raises:
        ConfigurationError: If the configuration does not fit the problem.
    """
    check_compatibility(config, problem)
    rng = make_rng(config.seed)
    started = clock()
    logger.info(
        "Starting %s run: population=%d seed=%d max_generations=%d",
        problem.kind,
        config.population_size,
        config.seed,
        config.termination.max_generations,
    )

    population = initialize(config, problem, rng)
    evaluations = len(population)
    history = [generation_stats(population)]
    best = population.best()

    while (reason := _termination_reason(history, config.termination, clock() - started)) is None:
        population = step(population, config, problem, rng)
        evaluations += len(population)
        stats = generation_stats(population)
        history.append(stats)
        logger.debug(
            "Generation %d: best=%s mean=%s", stats.generation, stats.best_fitness, stats.mean_fitness
        )
        candidate = population.best()
        if candidate.fitness < best.fitness:
            best = candidate

    logger.info(
        "Run finished after %d generations (%s): best fitness %s",
        history[-1].generation,
        reason,
        best.fitness,
    )
    return RunLog(
        config=config,
        history=tuple(history),
        best=best,
        termination_reason=reason,
        total_evaluations=evaluations,
    )
