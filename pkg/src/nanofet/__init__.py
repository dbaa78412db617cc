"""Geometry, electronic and performance models for a hydrocarbon molecular FET."""

__version__ = "0.1.0"
