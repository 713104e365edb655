"""Quadratic-form valued rational curve counts, computed exactly."""

__version__ = "0.1.0"
