"""Tests for the fitness functions and target tables."""
