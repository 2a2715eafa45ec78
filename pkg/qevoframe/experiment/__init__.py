"""Multi-run experiments: configuration, the staged pipeline, statistics and sweeps."""
from .config import ExperimentConfig, FitnessKind
from .default_tasks import OutputLayout, RunRecords, RunSeeds
from .errors import ConfigError, OutputDirError
from .experiment import Experiment, ExperimentModule
from .inspection import Metric, dump_table, measure
from .metrics import PhaseTimes
from .modules import kl_module, module_for, mw_module, vn_module
from .runner import SweepParameter, SweepRow, SweepSummary, run_experiment, run_sweep
from .summary import ExperimentSummary, GenerationAggregate, standard_error
from .tasks import FitnessConstructionTask, ReportingTask, ValidationTask

__all__ = [
    "ConfigError",
    "Experiment",
    "ExperimentConfig",
    "ExperimentModule",
    "ExperimentSummary",
    "FitnessConstructionTask",
    "FitnessKind",
    "GenerationAggregate",
    "Metric",
    "OutputDirError",
    "OutputLayout",
    "PhaseTimes",
    "ReportingTask",
    "RunRecords",
    "RunSeeds",
    "SweepParameter",
    "SweepRow",
    "SweepSummary",
    "ValidationTask",
    "dump_table",
    "kl_module",
    "measure",
    "module_for",
    "mw_module",
    "run_experiment",
    "run_sweep",
    "standard_error",
    "vn_module",
]
