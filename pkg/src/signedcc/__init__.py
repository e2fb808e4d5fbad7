"""Correlation clustering for signed graphs."""
__version__ = "0.1.0"
