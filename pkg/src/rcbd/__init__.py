"""Friedman test, F-transformations, exact null distribution and power for RCBDs."""

__version__ = "0.1.0"
