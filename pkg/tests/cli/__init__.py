"""Tests for the command-line application."""
