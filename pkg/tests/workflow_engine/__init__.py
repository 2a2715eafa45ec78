"""Tests for the task scheduling the experiment pipeline runs on."""
