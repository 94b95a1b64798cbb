"""Bundled expected-values fixtures."""
