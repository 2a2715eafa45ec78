"""Tests for seed derivation."""
from hypothesis import given

from qevoframe.evolution import run_seed, splitmix64, stream
from tests.strategies import seeds


class TestSplitMix64:
    """Tests for the SplitMix64 step."""

    def test_reference_value(self) -> None:
        """The first output of SplitMix64 seeded with 0."""
        assert splitmix64(0) == 0xE220A8397B1DCDAF

    @given(seeds)
    def test_stays_in_64_bits(self, seed: int) -> None:
        """Outputs are unsigned 64-bit integers."""
        assert 0 <= splitmix64(seed) < 1 << 64


class TestRunSeed:
    """Tests for deriving per-run seeds."""

    def test_combines_master_seed_and_index(self) -> None:
        """Run i of master seed s uses splitmix64(s XOR i)."""
        assert run_seed(12345, 7) == splitmix64(12345 ^ 7)

    def test_runs_get_distinct_seeds(self) -> None:
        """Fifty runs never share a seed."""
        assert len({run_seed(2024, i) for i in range(50)}) == 50


class TestStream:
    """Tests for keyed random generators."""

    def test_same_keys_same_numbers(self) -> None:
        """Keyed streams are reproducible."""
        assert stream(1, 2, 3).random() == stream(1, 2, 3).random()

    def test_keys_matter(self) -> None:
        """Different keys give different streams."""
        assert stream(1, 2, 3).random() != stream(1, 3, 2).random()
