"""Tests for the experiment configuration."""
import json
from pathlib import Path

import pytest

from qevoframe.evolution import Direction, MutationMode
from qevoframe.experiment import ConfigError, ExperimentConfig, FitnessKind
from qevoframe.fitness import MeyerWallachMode


class TestExperimentConfig:
    """Tests for building and converting configurations."""

    def test_defaults(self) -> None:
        """The defaults match the reference setup."""
        config = ExperimentConfig()

        assert (config.population_size, config.elite_count) == (20, 4)
        assert (config.n_generations, config.runs) == (500, 50)
        assert config.mutation_p == 0.10
        assert config.mutation_mode == MutationMode.GATE_REPLACE
        assert config.shots == 0
        assert config.pool == ("H", "X", "Z", "CNOT", "SWAP")

    def test_direction_follows_fitness(self) -> None:
        """KL is minimized, the entanglement measures are maximized."""
        assert ExperimentConfig(fitness=FitnessKind.KL).direction == Direction.MINIMIZE
        assert ExperimentConfig(fitness=FitnessKind.VN).direction == Direction.MAXIMIZE

    def test_replace_ignores_none(self) -> None:
        """Only given values override."""
        config = ExperimentConfig(runs=3).replace(runs=None, seed=9)

        assert (config.runs, config.seed) == (3, 9)

    def test_dict_is_json_compatible(self) -> None:
        """Enums, paths and the pool become plain values."""
        config = ExperimentConfig(out_dir=Path("out"), mw_mode=MeyerWallachMode.NORMALIZED)
        values = config.to_dict()

        assert json.loads(json.dumps(values)) == values
        assert values["out_dir"] == "out"
        assert values["mw_mode"] == "normalized"
        assert ExperimentConfig.from_dict(values) == config

    def test_from_json(self, tmp_path: Path) -> None:
        """Configuration files hold a JSON object with any subset of the fields."""
        path = tmp_path / "config.json"
        path.write_text('{"fitness": "kl", "target": "rule:90", "pool": ["H", "CNOT"]}')

        config = ExperimentConfig.from_json(path)

        assert config.fitness == FitnessKind.KL
        assert config.target == "rule:90"
        assert config.gate_pool().names == ["H", "CNOT"]

    @pytest.mark.parametrize(
        "text", ['{"generation": 5}', '{"fitness": "entropy"}', "[1, 2]", "{not json"]
    )
    def test_invalid_files(self, tmp_path: Path, text: str) -> None:
        """Unknown keys, bad values and malformed JSON are configuration errors."""
        path = tmp_path / "config.json"
        path.write_text(text)

        with pytest.raises(ConfigError):
            ExperimentConfig.from_json(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """A missing file is a configuration error."""
        with pytest.raises(ConfigError):
            ExperimentConfig.from_json(tmp_path / "missing.json")

    def test_evolution_config(self) -> None:
        """Run settings carry the seed of the run and the derived direction."""
        config = ExperimentConfig(fitness=FitnessKind.KL, target="critical", n_gates=7)
        evolution = config.evolution_config(seed=123)

        assert evolution.seed == 123
        assert evolution.n_gates == 7
        assert evolution.direction == Direction.MINIMIZE
