"""Tests for end-periodic operators."""
