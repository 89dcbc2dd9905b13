"""Soluble graphs and related generation graphs of finite permutation groups."""

__version__ = "0.1.0"
