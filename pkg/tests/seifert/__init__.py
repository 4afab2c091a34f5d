"""Tests for Seifert homology spheres."""
