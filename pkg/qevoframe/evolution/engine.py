"""The elitist generational loop."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Callable, Sequence

import numpy as np

from qevoframe.simulation import DomainError, GatePool

from .errors import FitnessEvaluationError
from .genome import Chromosome, MutationMode, mutate, random_chromosome

logger = logging.getLogger(__name__)

FitnessFunction = Callable[[Chromosome], float]


class Direction(StrEnum):
    """Whether lower or higher fitness is better."""

    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"

    def score(self, fitness: float) -> float:
        """Map a fitness value so that larger is always better."""
        return fitness if self == Direction.MAXIMIZE else -fitness


@dataclass(frozen=True)
class EvolutionConfig:
    """The settings of a single evolutionary run."""

    n_qubits: int = 3
    n_gates: int = 3
    population_size: int = 20
    elite_count: int = 4
    mutation_p: float = 0.10
    mutation_mode: MutationMode = MutationMode.GATE_REPLACE
    n_generations: int = 500
    direction: Direction = Direction.MAXIMIZE
    seed: int = 0
    # Refill non-elite slots with fresh random chromosomes instead of mutated elites
    reset_nonelites: bool = False
    pool: GatePool = field(default_factory=GatePool)

    def validate(self) -> None:
        """Check the settings for consistency.

        :raises DomainError: If a setting is out of range.
        """
        if self.population_size < 1:
            raise DomainError("The population needs at least one chromosome")
        if not 1 <= self.elite_count < self.population_size:
            raise DomainError(
                f"Elite count must be in 1..{self.population_size - 1}, got {self.elite_count}"
            )
        if self.n_generations < 1:
            raise DomainError("At least one generation is needed")
        if not 0 <= self.mutation_p <= 1:
            raise DomainError(f"Mutation probability must be in [0, 1], got {self.mutation_p}")
        if self.n_gates < 1:
            raise DomainError("Circuits need at least one gate")
        if not 0 <= self.seed < 1 << 64:
            raise DomainError("The seed must be a non-negative 64-bit integer")

    def to_dict(self) -> dict[str, Any]:
        """Get the settings as JSON-compatible values."""
        return {
            "n_qubits": self.n_qubits,
            "n_gates": self.n_gates,
            "population_size": self.population_size,
            "elite_count": self.elite_count,
            "mutation_p": self.mutation_p,
            "mutation_mode": self.mutation_mode.value,
            "n_generations": self.n_generations,
            "direction": self.direction.value,
            "seed": self.seed,
            "reset_nonelites": self.reset_nonelites,
            "pool": self.pool.names,
        }


@dataclass(frozen=True)
class Generation:
    """A population of chromosomes together with their fitness."""

    chromosomes: tuple[Chromosome, ...]
    fitness: tuple[float, ...]

    def __post_init__(self) -> None:
        assert len(self.chromosomes) == len(self.fitness)

    def ranking(self, direction: Direction) -> list[int]:
        """Get the chromosome indices from best to worst.

        Ties keep the lower index first.
        """
        return sorted(range(len(self.fitness)), key=lambda i: -direction.score(self.fitness[i]))

    def best_index(self, direction: Direction) -> int:
        """Get the index of the fittest chromosome."""
        return self.ranking(direction)[0]

    def best_fitness(self, direction: Direction) -> float:
        """Get the fitness of the fittest chromosome."""
        return self.fitness[self.best_index(direction)]

    def mean_fitness(self) -> float:
        """Get the mean fitness of the population."""
        return float(np.mean(self.fitness))


@dataclass(frozen=True)
class GenerationStats:
    """The statistics recorded for one generation."""

    g: int
    best: float
    mean: float


@dataclass(frozen=True)
class RunRecord:
    """The outcome of one evolutionary run.

    `per_generation` holds the initial population as generation 0,
    followed by one entry per evolution step.
    """

    seed: int
    config: EvolutionConfig
    per_generation: tuple[GenerationStats, ...]
    best_chromosome: Chromosome
    best_fitness: float

    def best_series(self) -> list[float]:
        """Get the best fitness of every generation."""
        return [stats.best for stats in self.per_generation]

    def mean_series(self) -> list[float]:
        """Get the mean fitness of every generation."""
        return [stats.mean for stats in self.per_generation]

    def to_dict(self) -> dict[str, Any]:
        """Get the record in its JSON layout."""
        return {
            "seed": self.seed,
            "config": self.config.to_dict(),
            "generations": [
                {"g": stats.g, "best": stats.best, "mean": stats.mean}
                for stats in self.per_generation
            ],
            "best_chromosome": self.best_chromosome.to_csv(),
            "best_fitness": self.best_fitness,
        }


def evaluate(chromosomes: Sequence[Chromosome], fitness_fn: FitnessFunction) -> Generation:
    """Evaluate the fitness of every chromosome.

    :raises FitnessEvaluationError: If the fitness function fails or returns a non-finite
    value, with the index of the chromosome attached.
    """
    fitness = []
    for index, chromosome in enumerate(chromosomes):
        try:
            value = float(fitness_fn(chromosome))
        except Exception as err:
            raise FitnessEvaluationError(index, str(err)) from err

        if not math.isfinite(value):
            raise FitnessEvaluationError(index, f"fitness {value} is not finite")
        fitness.append(value)

    return Generation(tuple(chromosomes), tuple(fitness))


def evolve_step(
    generation: Generation,
    config: EvolutionConfig,
    fitness_fn: FitnessFunction,
    rng: np.random.Generator,
) -> Generation:
    """Create and evaluate the next generation.

    The elites are copied verbatim, best first. Offspring `i` mutates elite
    `i mod elite_count`, so the best fitness can never get worse.
    """
    elites = [generation.chromosomes[i] for i in generation.ranking(config.direction)]
    elites = elites[: config.elite_count]

    offspring = []
    for i in range(config.population_size - config.elite_count):
        if config.reset_nonelites:
            child = random_chromosome(config.n_qubits, config.n_gates, rng, config.pool)
        else:
            parent = elites[i % config.elite_count]
            child = mutate(parent, config.mutation_p, config.mutation_mode, rng)
        offspring.append(child)

    return evaluate(elites + offspring, fitness_fn)


def run(config: EvolutionConfig, fitness_fn: FitnessFunction) -> RunRecord:
    """Evolve a random initial population for `n_generations` steps."""
    config.validate()
    rng = np.random.default_rng(config.seed)

    generation = evaluate(
        [
            random_chromosome(config.n_qubits, config.n_gates, rng, config.pool)
            for _ in range(config.population_size)
        ],
        fitness_fn,
    )
    stats = [_stats(0, generation, config.direction)]

    report_every = max(1, config.n_generations // 10)
    for g in range(1, config.n_generations + 1):
        generation = evolve_step(generation, config, fitness_fn, rng)
        stats.append(_stats(g, generation, config.direction))

        if g % report_every == 0:
            logger.info(
                f"run seed={config.seed}: generation {g}/{config.n_generations} "
                f"best={stats[-1].best:.6g} mean={stats[-1].mean:.6g}"
            )

    best_index = generation.best_index(config.direction)
    return RunRecord(
        seed=config.seed,
        config=config,
        per_generation=tuple(stats),
        best_chromosome=generation.chromosomes[best_index],
        best_fitness=generation.fitness[best_index],
    )


def _stats(g: int, generation: Generation, direction: Direction) -> GenerationStats:
    return GenerationStats(
        g=g, best=generation.best_fitness(direction), mean=generation.mean_fitness()
    )
