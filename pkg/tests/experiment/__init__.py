"""Tests for experiments and their outputs."""
