"""Represented matroids over prime fields, Dowling geometries and frame templates."""

__version__ = "0.1.0"
