"""Tests for perispec."""
