"""Tests for affine families."""
