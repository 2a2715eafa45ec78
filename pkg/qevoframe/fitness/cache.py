"""A thread-safe memo of fitness values keyed by serialized genes."""
from __future__ import annotations

import threading
from typing import Callable


class FitnessCache:
    """Remember computed fitness values.

    Elites recur verbatim in every generation, so most of them are scored only once.
    Several runs may share a cache; values are pure, so sharing never changes results.
    """

    max_size: int
    hits: int
    misses: int

    def __init__(self, max_size: int = 100_000):
        self.max_size = max_size
        self.hits = 0
        self.misses = 0
        self._values: dict[str, float] = {}
        self._lock = threading.Lock()

    def get_or_compute(self, key: str, compute: Callable[[], float]) -> float:
        """Get the value stored for `key`, computing and storing it if missing."""
        with self._lock:
            if key in self._values:
                self.hits += 1
                return self._values[key]

        # Compute outside the lock; a concurrent duplicate computes the same value
        value = compute()

        with self._lock:
            self.misses += 1
            if len(self._values) >= self.max_size:
                self._values.clear()
            self._values[key] = value

        return value

    def __len__(self) -> int:
        """Get the number of stored values."""
        with self._lock:
            return len(self._values)
