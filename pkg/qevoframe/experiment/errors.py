"""The error classes for running experiments."""
from pathlib import Path


class ConfigError(ValueError):
    """The experiment configuration is invalid."""

    pass


class OutputDirError(OSError):
    """The output directory cannot be created or written to."""

    def __init__(self, out_dir: Path, reason: str):
        super().__init__(f"Cannot write to output directory {out_dir}: {reason}")
