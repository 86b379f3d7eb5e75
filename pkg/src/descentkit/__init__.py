"""Exact checks for geometric infinite-descent irrationality arguments."""

__version__ = "0.1.0"
