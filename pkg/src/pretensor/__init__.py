"""Exact computations with finite-dimensional algebras, their bimodule categories and Z+-pseudorings."""
from __future__ import annotations

__version__ = "0.1.0"
