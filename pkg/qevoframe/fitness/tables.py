"""Cellular-automaton target tables.

A table holds the probability that the middle cell updates to 1 for each of the
8 neighborhood triads (l, m, r), indexed by l·4 + m·2 + r.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from qevoframe.simulation import CircuitFormatError, DomainError

N_NEIGHBORHOODS = 8


@dataclass(frozen=True)
class TargetTable:
    """The update probability for each neighborhood, in order [0,0,0] … [1,1,1]."""

    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probs)
        if len(probs) != N_NEIGHBORHOODS:
            raise DomainError(f"A target table has {N_NEIGHBORHOODS} entries, got {len(probs)}")
        if not all(0 <= p <= 1 for p in probs):
            raise DomainError(f"Target probabilities must lie in [0, 1], got {probs}")
        object.__setattr__(self, "probs", probs)

    def __getitem__(self, neighborhood: int) -> float:
        """Get the probability for the neighborhood with index l·4 + m·2 + r."""
        return self.probs[neighborhood]

    def entry(self, left: int, middle: int, right: int) -> float:
        """Get the probability for the neighborhood (l, m, r)."""
        return self.probs[left * 4 + middle * 2 + right]

    def is_deterministic(self) -> bool:
        """Check whether the table describes an elementary rule."""
        return all(p in (0.0, 1.0) for p in self.probs)


# The stochastic CA tuned to criticality
CRITICAL_TABLE = TargetTable((0.394221, 0.094721, 0.239492, 0.408455, 0, 0.730203, 0.915034, 1))

# Randomly drawn stochastic CAs used as further benchmarks
RANDOM_TABLES = {
    "random1": TargetTable((0.6364, 0.6603, 0.5261, 0.1748, 0.8820, 0.3371, 0.0340, 0.4444)),
    "random2": TargetTable((0.4778, 0.5604, 0.8528, 0.4818, 0.3143, 0.3464, 0.0678, 0.9124)),
    "random3": TargetTable((0.1988, 0.4701, 0.9836, 0.7115, 0.6616, 0.1218, 0.1328, 0.7306)),
}


def critical_ca_table() -> TargetTable:
    """Get the table of the critical stochastic cellular automaton."""
    return CRITICAL_TABLE


def rule_to_table(rule: int) -> TargetTable:
    """Get the deterministic table of an elementary CA rule (Wolfram numbering).

    Bit i of the rule number is the update for neighborhood i.
    """
    if not 0 <= rule <= 255:
        raise DomainError(f"Elementary rules are numbered 0..255, got {rule}")
    return TargetTable(tuple(float((rule >> i) & 1) for i in range(N_NEIGHBORHOODS)))


def table_to_rule(table: TargetTable) -> int:
    """Reassemble the rule number of a deterministic table."""
    if not table.is_deterministic():
        raise DomainError("Only deterministic tables correspond to a rule number")
    return sum(int(p) << i for i, p in enumerate(table.probs))


def random_table(seed: int) -> TargetTable:
    """Draw a stochastic table with uniform probabilities rounded to 4 decimals."""
    rng = np.random.default_rng(seed)
    return TargetTable(tuple(round(float(p), 4) for p in rng.random(N_NEIGHBORHOODS)))


def named_table(name: str) -> TargetTable:
    """Get a built-in table: `critical`, `random1`, `random2` or `random3`."""
    if name == "critical":
        return CRITICAL_TABLE
    if name in RANDOM_TABLES:
        return RANDOM_TABLES[name]
    raise DomainError(f"Unknown target table {name!r}")


def parse_target(target: str) -> TargetTable:
    """Resolve a target string to its table.

    Accepted forms are `critical`, `random1`..`random3`, `rule:<0..255>`,
    `random:<seed>` and `file:<path>`.
    """
    kind, _, argument = target.partition(":")

    if kind == "rule":
        if not (argument.isascii() and argument.isdigit()):
            raise DomainError(f"Expected 'rule:<0..255>', got {target!r}")
        return rule_to_table(int(argument))
    if kind == "random" and argument:
        if not (argument.isascii() and argument.isdigit()):
            raise DomainError(f"Expected 'random:<seed>', got {target!r}")
        return random_table(int(argument))
    if kind == "file":
        return load_table(Path(argument))
    if argument:
        raise DomainError(f"Unknown target {target!r}")

    return named_table(kind)


def format_table(table: TargetTable) -> str:
    """Serialize a table: 8 lines, one decimal each."""
    return "".join(f"{format(p, '.15g')}\n" for p in table.probs)


def parse_table(text: str) -> TargetTable:
    """Parse the 8-line table format.

    :raises CircuitFormatError: If a line is not a number in [0, 1]
    or the count of lines is not 8.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != N_NEIGHBORHOODS:
        raise CircuitFormatError(f"expected {N_NEIGHBORHOODS} lines, got {len(lines)}")

    probs = []
    for line_number, line in enumerate(lines, start=1):
        try:
            value = float(line)
        except ValueError:
            raise CircuitFormatError(f"expected a decimal, got {line!r}", line_number) from None
        if not 0 <= value <= 1:
            raise CircuitFormatError(f"{value} is not a probability", line_number)
        probs.append(value)

    return TargetTable(tuple(probs))


def load_table(path: Path) -> TargetTable:
    """Read a custom table file."""
    return parse_table(path.read_text(encoding="utf-8"))

