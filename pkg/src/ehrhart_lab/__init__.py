"""Exact Ehrhart theory toolkit."""

__version__ = "0.1.0"
