"""Tests for qevoframe."""
