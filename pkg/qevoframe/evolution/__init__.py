"""Chromosome encoding and the elitist evolutionary loop."""
from .engine import (
    Direction,
    EvolutionConfig,
    FitnessFunction,
    Generation,
    GenerationStats,
    RunRecord,
    evaluate,
    evolve_step,
    run,
)
from .errors import FitnessEvaluationError
from .genome import (
    Chromosome,
    GateGene,
    MutationMode,
    decode,
    encode,
    mutate,
    random_chromosome,
    random_gene,
    repair,
)
from .seeds import run_seed, splitmix64, stream

__all__ = [
    "Chromosome",
    "Direction",
    "EvolutionConfig",
    "FitnessEvaluationError",
    "FitnessFunction",
    "GateGene",
    "Generation",
    "GenerationStats",
    "MutationMode",
    "RunRecord",
    "decode",
    "encode",
    "evaluate",
    "evolve_step",
    "mutate",
    "random_chromosome",
    "random_gene",
    "repair",
    "run",
    "run_seed",
    "splitmix64",
    "stream",
]
