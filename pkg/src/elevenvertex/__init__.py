"""Exact and numerical tools for the rational top, its relativistic and
many-body avatars, Gaudin models, classical spin chains and 1+1 field
theories built on the same 11-vertex r-matrix.

Submodules: ``exactcore`` (rational polynomials and 2x2 / 4x4 matrices),
``rmatrix``, ``poisson``, ``tops``, ``manybody``, ``lattice``, ``field``,
``checks`` (verification suites) and ``cli``.
"""
from . import exactcore, field, lattice, manybody, poisson, rmatrix, tops

__version__ = "0.1.0"

__all__ = ["exactcore", "rmatrix", "poisson", "tops", "manybody", "lattice", "field", "__version__"]
