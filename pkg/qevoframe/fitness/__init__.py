"""Fitness functions and the cellular-automaton target tables they compare against."""
from .ca import CA_QUBITS, NeighborhoodEncoding, ResponseVector, ca_response
from .cache import FitnessCache
from .functions import (
    ChromosomeFitness,
    KlFitness,
    MeyerWallachMode,
    MwFitness,
    VnFitness,
    kl_divergence,
    kl_fitness,
    mw_fitness,
    vn_fitness,
)
from .tables import (
    RANDOM_TABLES,
    TargetTable,
    critical_ca_table,
    format_table,
    load_table,
    named_table,
    parse_table,
    parse_target,
    random_table,
    rule_to_table,
    table_to_rule,
)

__all__ = [
    "CA_QUBITS",
    "ChromosomeFitness",
    "FitnessCache",
    "KlFitness",
    "MeyerWallachMode",
    "MwFitness",
    "NeighborhoodEncoding",
    "RANDOM_TABLES",
    "ResponseVector",
    "TargetTable",
    "VnFitness",
    "ca_response",
    "critical_ca_table",
    "format_table",
    "kl_divergence",
    "kl_fitness",
    "load_table",
    "mw_fitness",
    "named_table",
    "parse_table",
    "parse_target",
    "random_table",
    "rule_to_table",
    "table_to_rule",
    "vn_fitness",
]
