"""Gelfand-Tsetlin degenerations of type A flag varieties, computed exactly."""

__version__ = "0.1.0"
