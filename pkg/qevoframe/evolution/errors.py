"""The error classes for the evolutionary loop."""


class FitnessEvaluationError(RuntimeError):
    """The fitness function failed on a chromosome of the population."""

    index: int

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"Fitness evaluation failed for chromosome {index}: {reason}")
