"""Exact algebra for tau-deformed cyclic quiver varieties and their ideals."""

__version__ = "0.1.0"
