"""The rational 11-vertex quantum R-matrix and its classical r-matrix.

Spectral parameter ``z`` and Planck constant ``hbar`` may be exact scalars
(:class:`fractions.Fraction`) or generators (``var("z")``); in the latter
case entries are Laurent polynomials and limits/expansions become exact
coefficient extractions.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exactcore import (
    SparsePoly,
    commutator,
    embed,
    eye,
    mat_coeff,
    permutation,
    var,
)

__all__ = [
    "quantum_R",
    "classical_r",
    "deformed_R",
    "deformed_r",
    "xxx_r",
    "xxx_R",
    "classical_limit",
    "swap_legs",
    "cybe_residual",
    "quantum_ybe_residual",
    "series_coeff_R",
    "series_coeff_r",
]


def _check_nonzero(**kw):
    for name, v in kw.items():
        if not isinstance(v, SparsePoly) and v == 0:
            raise ZeroDivisionError(f"pole at {name}=0")


def _op4(rows):
    out = np.empty((4, 4), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x if isinstance(x, SparsePoly) else Fraction(x)
    return out


def quantum_R(hbar, z):
    """R^hbar(z) as a 4x4 operator on C^2 (x) C^2."""
    _check_nonzero(hbar=hbar, z=z)
    ih, iz = 1 / hbar, 1 / z
    s = hbar + z
    return _op4([
        [ih + iz, 0, 0, 0],
        [-s, ih, iz, 0],
        [-s, iz, ih, 0],
        [-(hbar**3 + 2 * z * hbar**2 + 2 * hbar * z**2 + z**3), s, s, ih + iz],
    ])


def classical_r(z):
    """r_12(z): the hbar^0 term of R^hbar(z) - hbar^-1 * 1."""
    _check_nonzero(z=z)
    iz = 1 / z
    return _op4([
        [iz, 0, 0, 0],
        [-z, 0, iz, 0],
        [-z, iz, 0, 0],
        [-z**3, z, z, iz],
    ])


def _limit_in(expr_builder, eps):
    """Evaluate ``expr_builder(eps)``; at eps == 0 take the exact eps^0 coefficient."""
    if isinstance(eps, SparsePoly) or eps != 0:
        return expr_builder(eps)
    e = var("_eps")
    full = expr_builder(e)
    for x in full.ravel():
        if isinstance(x, SparsePoly) and x.min_degree("_eps") < 0:
            raise ArithmeticError("deformation is singular at eps=0")
    return mat_coeff(full, "_eps", 0)


def deformed_r(z, eps):
    """eps * r(eps * z); eps=0 gives P_12 / z."""
    return _limit_in(lambda e: classical_r(e * z) * e, eps)


def deformed_R(hbar, z, eps):
    """eps * R^{eps hbar}(eps z); eps=0 gives hbar^-1 * 1 + P_12 / z."""
    return _limit_in(lambda e: quantum_R(e * hbar, e * z) * e, eps)


def xxx_r(z):
    return permutation() * (1 / Fraction(z) if not isinstance(z, SparsePoly) else z**-1)


def xxx_R(hbar, z):
    iz = z**-1 if isinstance(z, SparsePoly) else 1 / Fraction(z)
    ih = hbar**-1 if isinstance(hbar, SparsePoly) else 1 / Fraction(hbar)
    return eye(4) * ih + permutation() * iz


def classical_limit(z):
    """hbar^0 coefficient of R^hbar(z) - hbar^-1 * 1, with hbar symbolic.

    Raises if any negative power of hbar survives the subtraction.
    """
    h = var("_hbar")
    diff = quantum_R(h, z) - eye(4) * h**-1
    for x in diff.ravel():
        if isinstance(x, SparsePoly) and x.min_degree("_hbar") < 0:
            raise ArithmeticError("hbar pole survives the subtraction")
    return mat_coeff(diff, "_hbar", 0)


def swap_legs(t):
    """t_21 = P t_12 P."""
    p = permutation()
    return p @ t @ p


def cybe_residual(z, w, r=classical_r):
    """[r12(z-w), r13(z)] + [r12(z-w), r23(w)] + [r13(z), r23(w)] as an 8x8 operator."""
    if z == w:
        raise ZeroDivisionError("pole collision z == w")
    r12 = embed(r(z - w), "12")
    r13 = embed(r(z), "13")
    r23 = embed(r(w), "23")
    return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23)


def quantum_ybe_residual(hbar, z, w, eps=1):
    """R12(z-w) R13(z) R23(w) - R23(w) R13(z) R12(z-w)."""
    if z == w:
        raise ZeroDivisionError("pole collision z == w")
    R = (lambda x: quantum_R(hbar, x)) if eps == 1 else (lambda x: deformed_R(hbar, x, eps))
    r12 = embed(R(z - w), "12")
    r13 = embed(R(z), "13")
    r23 = embed(R(w), "23")
    return r12 @ r13 @ r23 - r23 @ r13 @ r12


def series_coeff_R(hbar, k):
    """Exact z^k coefficient of R^hbar(z); k = -1 gives P_12."""
    return mat_coeff(quantum_R(hbar, var("_z")), "_z", k)


def series_coeff_r(k):
    """Exact z^k coefficient of r_12(z)."""
    return mat_coeff(classical_r(var("_z")), "_z", k)
