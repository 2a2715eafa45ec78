"""Tests for the chromosome encoding and the evolutionary loop."""
