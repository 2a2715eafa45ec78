"""Tests for running whole experiments."""
import json
from pathlib import Path

import numpy as np
import pytest
from pytest import approx

from qevoframe.evolution import decode
from qevoframe.experiment import (
    ConfigError,
    Experiment,
    ExperimentConfig,
    ExperimentModule,
    ExperimentSummary,
    FitnessKind,
    OutputDirError,
    PhaseTimes,
    SweepParameter,
    module_for,
    mw_module,
    run_experiment,
    run_sweep,
)
from qevoframe.fitness import ca_response, rule_to_table
from qevoframe.simulation import load_circuit


def small_config(out_dir: Path, **overrides: object) -> ExperimentConfig:
    """A configuration that runs in a fraction of a second."""
    return ExperimentConfig(
        fitness=FitnessKind.MW,
        n_generations=3,
        runs=2,
        population_size=6,
        elite_count=2,
        out_dir=out_dir,
    ).replace(**overrides)


class TestRunExperiment:
    """Tests for the files and values of an experiment."""

    def test_output_files(self, tmp_path: Path) -> None:
        """Every run writes its record next to the configuration and the summary."""
        run_experiment(small_config(tmp_path, n_generations=1))

        assert {path.name for path in tmp_path.iterdir()} == {
            "config.json",
            "run_0.json",
            "run_1.json",
            "summary.csv",
            "best_circuit.txt",
        }

    def test_run_file_layout(self, tmp_path: Path) -> None:
        """Run files hold the seed, the settings and one entry per generation."""
        run_experiment(small_config(tmp_path))

        values = json.loads((tmp_path / "run_0.json").read_text())

        assert set(values) == {"seed", "config", "generations", "best_chromosome", "best_fitness"}
        assert [g["g"] for g in values["generations"]] == [0, 1, 2, 3]
        assert values["config"]["seed"] == values["seed"]

    def test_config_file(self, tmp_path: Path) -> None:
        """The stored configuration reproduces the experiment."""
        config = small_config(tmp_path)
        run_experiment(config)

        assert ExperimentConfig.from_json(tmp_path / "config.json") == config

    def test_summary_matches_run_files(self, tmp_path: Path) -> None:
        """The best-fitness column is the mean over the run files."""
        summary = run_experiment(small_config(tmp_path, runs=3))

        runs = [json.loads((tmp_path / f"run_{i}.json").read_text()) for i in range(3)]
        bests = np.array([[g["best"] for g in run["generations"]] for run in runs])
        columns = [line.split(",") for line in (tmp_path / "summary.csv").read_text().split()[1:]]

        assert [float(row[3]) for row in columns] == approx(list(bests.mean(axis=0)), abs=1e-12)
        assert [g.best_fitness_mean for g in summary.generations] == approx(
            list(bests.mean(axis=0))
        )

    def test_best_circuit_file(self, tmp_path: Path) -> None:
        """The best circuit is stored in the circuit text format."""
        summary = run_experiment(small_config(tmp_path))

        circuit = load_circuit(tmp_path / "best_circuit.txt")

        assert circuit.n_qubits == 3
        assert len(circuit) == len(summary.best_chromosome)

    def test_reproducible(self, tmp_path: Path) -> None:
        """The same configuration gives byte-identical summaries."""
        run_experiment(small_config(tmp_path / "a"))
        run_experiment(small_config(tmp_path / "b"))

        assert (tmp_path / "a" / "summary.csv").read_bytes() == (
            tmp_path / "b" / "summary.csv"
        ).read_bytes()

    def test_jobs_do_not_change_results(self, tmp_path: Path) -> None:
        """Runs in parallel give the same results as runs in sequence."""
        run_experiment(small_config(tmp_path / "serial", runs=4))
        run_experiment(small_config(tmp_path / "parallel", runs=4, jobs=3))

        for name in ["summary.csv", "run_3.json"]:
            assert (tmp_path / "serial" / name).read_bytes() == (
                tmp_path / "parallel" / name
            ).read_bytes()

    def test_best_series_is_monotone(self, tmp_path: Path) -> None:
        """Elitism is visible in every run file."""
        run_experiment(small_config(tmp_path, fitness=FitnessKind.VN, n_generations=10))

        for i in range(2):
            values = json.loads((tmp_path / f"run_{i}.json").read_text())
            best = [g["best"] for g in values["generations"]]
            assert best == sorted(best)

    def test_kl_experiment(self, tmp_path: Path) -> None:
        """KL experiments minimize the divergence to the target."""
        summary = run_experiment(
            small_config(tmp_path, fitness=FitnessKind.KL, target="rule:90", shots=16)
        )

        for run_best in summary.final_best:
            assert summary.best_fitness <= run_best

    def test_kl_reports_best_response(self, tmp_path: Path) -> None:
        """KL experiments write the best circuit's response next to the target table."""
        summary = run_experiment(small_config(tmp_path, fitness=FitnessKind.KL, target="rule:90"))

        rows = [line.split(",") for line in (tmp_path / "best_response.csv").read_text().split()]
        response = ca_response(decode(summary.best_chromosome)).probs

        assert rows[0] == ["neighborhood", "target", "response"]
        assert [row[0] for row in rows[1:]] == [f"{i:03b}" for i in range(8)]
        assert [float(row[1]) for row in rows[1:]] == list(rule_to_table(90).probs)
        assert [float(row[2]) for row in rows[1:]] == approx(list(response))

    def test_entanglement_has_no_response_file(self, tmp_path: Path) -> None:
        """Only KL experiments compare against a table."""
        run_experiment(small_config(tmp_path))

        assert not (tmp_path / "best_response.csv").exists()

    def test_single_run_has_no_spread(self, tmp_path: Path) -> None:
        """With one run the standard errors are zero."""
        summary = run_experiment(small_config(tmp_path, runs=1))

        assert all(g.best_fitness_se == 0 for g in summary.generations)


class TestValidation:
    """Tests for the configuration checks before any run starts."""

    @pytest.mark.parametrize(
        "overrides",
        [
            {"fitness": FitnessKind.KL},
            {"fitness": FitnessKind.KL, "target": "rule:256"},
            {"fitness": FitnessKind.KL, "target": "critical", "n_qubits": 4},
            {"fitness": FitnessKind.MW, "target": "critical"},
            {"fitness": FitnessKind.VN, "n_qubits": 1},
            {"elite_count": 6},
            {"runs": 0},
            {"jobs": 0},
            {"shots": -1},
            {"pool": ("H", "RX")},
        ],
    )
    def test_invalid_configs(self, tmp_path: Path, overrides: dict[str, object]) -> None:
        """Invalid settings are reported as configuration errors without writing anything."""
        out_dir = tmp_path / "out"

        with pytest.raises(ConfigError):
            run_experiment(small_config(out_dir, **overrides))

        assert not out_dir.exists()

    def test_unwritable_out_dir(self, tmp_path: Path) -> None:
        """The output directory is checked before any run starts."""
        blocker = tmp_path / "file"
        blocker.write_text("")

        with pytest.raises(OutputDirError):
            run_experiment(small_config(blocker / "out"))


class TestExperimentPipeline:
    """Tests for the staged experiment."""

    def test_phases_can_be_run_one_by_one(self, tmp_path: Path) -> None:
        """Each phase returns the next stage; the report holds the summary and times."""
        result = (
            Experiment("staged")
            .add_modules(mw_module)
            .initialize(small_config(tmp_path))
            .validate()
            .prepare()
            .evolve()
            .report()
        )

        assert isinstance(result[ExperimentSummary], ExperimentSummary)
        assert result[PhaseTimes].total >= result[PhaseTimes].evolve

    def test_one_fitness_module_is_required(self, tmp_path: Path) -> None:
        """Without a fitness module there is nothing to optimize."""
        with pytest.raises(ConfigError):
            Experiment("empty").add_modules(ExperimentModule()).initialize(small_config(tmp_path))

    def test_modules_by_fitness(self) -> None:
        """Every fitness kind has a module."""
        for kind in FitnessKind:
            assert module_for(kind).fitness is not None


class TestSweep:
    """Tests for parameter sweeps."""

    def test_gate_sweep(self, tmp_path: Path) -> None:
        """One experiment per value, each in its own directory, plus sweep.csv."""
        sweep = run_sweep(small_config(tmp_path), SweepParameter.GATES, [1, 2])

        assert [row.value for row in sweep.rows] == [1, 2]
        assert (tmp_path / "gates_1" / "summary.csv").exists()
        assert (tmp_path / "gates_2" / "summary.csv").exists()

        lines = (tmp_path / "sweep.csv").read_text().split("\n")
        assert lines[0] == (
            "value,best_fitness_mean,best_fitness_se,best_fitness_min,best_fitness_max,overall_best"
        )
        assert lines[1].startswith("1,")

    def test_row_statistics(self, tmp_path: Path) -> None:
        """The row spans the final best fitness of the runs."""
        sweep = run_sweep(small_config(tmp_path, runs=3), SweepParameter.MUTATION, [0.5])
        row = sweep.rows[0]

        assert (tmp_path / "mutation_0.5").is_dir()
        assert row.best_fitness_min <= row.best_fitness_mean <= row.best_fitness_max
        assert row.overall_best == row.best_fitness_max

    def test_fractional_gate_count(self, tmp_path: Path) -> None:
        """Gate counts must be whole numbers."""
        with pytest.raises(ConfigError):
            run_sweep(small_config(tmp_path), SweepParameter.GATES, [2.5])
