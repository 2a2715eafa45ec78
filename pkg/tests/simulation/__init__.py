"""Tests for the circuit simulation and the entanglement measures."""
