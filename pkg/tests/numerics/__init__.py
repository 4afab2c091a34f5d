"""Tests for numerics modules."""
