"""The configuration of a multi-run experiment."""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path
from typing import Any, Optional

from qevoframe.evolution import Direction, EvolutionConfig, MutationMode
from qevoframe.fitness import MeyerWallachMode, NeighborhoodEncoding
from qevoframe.simulation import GatePool
from qevoframe.simulation.gates import DEFAULT_POOL

from .errors import ConfigError


class FitnessKind(StrEnum):
    """The fitness an experiment optimizes."""

    KL = "kl"
    MW = "mw"
    VN = "vn"

    @property
    def direction(self) -> Direction:
        """KL divergence is minimized, the entanglement measures are maximized."""
        return Direction.MINIMIZE if self == FitnessKind.KL else Direction.MAXIMIZE


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce an experiment.

    `target` is only used by KL fitness, where it is required.
    """

    fitness: FitnessKind = FitnessKind.MW
    target: Optional[str] = None
    n_qubits: int = 3
    n_gates: int = 3
    population_size: int = 20
    elite_count: int = 4
    mutation_p: float = 0.10
    mutation_mode: MutationMode = MutationMode.GATE_REPLACE
    n_generations: int = 500
    runs: int = 50
    # 0 means exact probabilities
    shots: int = 0
    seed: int = 0
    jobs: int = 1
    out_dir: Path = Path("results")
    pool: tuple[str, ...] = field(default_factory=lambda: tuple(k.value for k in DEFAULT_POOL))
    encoding: NeighborhoodEncoding = NeighborhoodEncoding.L2_M1_R0
    mw_mode: MeyerWallachMode = MeyerWallachMode.CANONICAL
    reset_nonelites: bool = False

    @property
    def direction(self) -> Direction:
        """Whether the fitness of this experiment is minimized or maximized."""
        return self.fitness.direction

    def gate_pool(self) -> GatePool:
        """Get the gate pool the chromosomes draw from."""
        return GatePool.from_names(self.pool)

    def evolution_config(self, seed: int) -> EvolutionConfig:
        """Get the settings for the run with the given seed."""
        return EvolutionConfig(
            n_qubits=self.n_qubits,
            n_gates=self.n_gates,
            population_size=self.population_size,
            elite_count=self.elite_count,
            mutation_p=self.mutation_p,
            mutation_mode=self.mutation_mode,
            n_generations=self.n_generations,
            direction=self.direction,
            seed=seed,
            reset_nonelites=self.reset_nonelites,
            pool=self.gate_pool(),
        )

    def replace(self, **overrides: Any) -> ExperimentConfig:
        """Get a copy with some values replaced; `None` values are ignored."""
        return ExperimentConfig.from_dict(
            {**self.to_dict(), **{k: v for k, v in overrides.items() if v is not None}}
        )

    def to_dict(self) -> dict[str, Any]:
        """Get the configuration as JSON-compatible values."""
        values = {k: v.value if isinstance(v, StrEnum) else v for k, v in vars(self).items()}
        values["out_dir"] = str(self.out_dir)
        values["pool"] = list(self.pool)
        return values

    @classmethod
    def from_dict(cls, values: dict[str, Any]) -> ExperimentConfig:
        """Build a configuration from plain values, as found in a JSON file.

        :raises ConfigError: If a key is unknown or a value has the wrong form.
        """
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")

        converters: dict[str, Any] = {
            "fitness": FitnessKind,
            "mutation_mode": MutationMode,
            "out_dir": Path,
            "pool": tuple,
            "encoding": NeighborhoodEncoding,
            "mw_mode": MeyerWallachMode,
        }
        converted = {}
        for key, value in values.items():
            try:
                converted[key] = converters[key](value) if key in converters else value
            except (ValueError, TypeError) as err:
                raise ConfigError(f"Invalid value {value!r} for {key}: {err}") from None

        return cls(**converted)

    @classmethod
    def from_json(cls, path: Path) -> ExperimentConfig:
        """Read a configuration file."""
        try:
            values = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as err:
            raise ConfigError(f"Cannot read configuration {path}: {err}") from None

        if not isinstance(values, dict):
            raise ConfigError(f"Configuration {path} must hold a JSON object")
        return cls.from_dict(values)
