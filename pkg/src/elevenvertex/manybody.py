"""Two-body Ruijsenaars-Schneider and Calogero-Moser models and their spin forms.

Canonical pair ``(p, q)`` with {p, q} = 1 in the centre-of-mass frame.  For
exact work the exponential ``exp(p/c)`` is adjoined as a Laurent generator
``u`` (so ``u * u**-1 == 1`` automatically) with {u, q} = u/c.
"""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

from .exactcore import SparsePoly, mat2, var
from .poisson import bracket, canonical_table
from .tops import rk4_step

__all__ = [
    "rs_map",
    "rs_map_exact",
    "rs_ham",
    "rs_ham_exact",
    "tilde_map",
    "tilde_map_exact",
    "cm_map",
    "cm_ham",
    "canonical_rs_table",
    "canonical_cm_table",
    "rs_flow_factor",
    "limit_remainder",
    "limit_slope",
    "canonical_flow",
    "cm_vector_field",
    "rs_vector_field",
]


def _check_q(q):
    if not isinstance(q, SparsePoly) and q == 0:
        raise ZeroDivisionError("q = 0 is a pole of the bosonization maps")


def _rs_entries(u, ui, q, eta):
    iq = 1 / q
    half = Fraction(1, 2) if isinstance(q, (SparsePoly, Fraction)) else 0.5
    a = u * (q - eta) ** 2 - ui * (q + eta) ** 2
    return (
        -half * q * (u - ui),
        half * iq * (u - ui),
        -half * q * a,
        half * iq * a,
    )


def rs_map(p, q, eta, c):
    """Spin matrix of the eta-dependent top from RS canonical variables."""
    _check_q(q)
    if c == 0:
        raise ZeroDivisionError("c must be nonzero")
    u = math.exp(p / c)
    return mat2(*_rs_entries(u, 1 / u, float(q), eta))


def rs_map_exact(eta, u="u", q="q"):
    """rs_map in the Laurent generators ``u = exp(p/c)`` and ``q``."""
    U, Q = var(u), var(q)
    return mat2(*_rs_entries(U, U**-1, Q, Fraction(eta)))


def rs_ham(p, q, eta, c):
    _check_q(q)
    x = p / c
    return (2 * q - eta) / (2 * q) * math.exp(x) + (2 * q + eta) / (2 * q) * math.exp(-x)


def rs_ham_exact(eta, u="u", q="q"):
    U, Q = var(u), var(q)
    eta = Fraction(eta)
    iq = Q**-1 * Fraction(1, 2)
    return (2 * Q - eta) * iq * U + (2 * Q + eta) * iq * U**-1


def _tilde_entries(u, ui, q, eta):
    exact = isinstance(q, SparsePoly)
    iq = 1 / q
    one = Fraction(1) if exact else 1.0
    s0 = eta * (eta - 2 * q) * iq * (one / 2) * u - eta * (eta + 2 * q) * iq * (one / 2) * ui
    d = -eta * iq * (one / 4) * (u * (2 * q - eta) ** 2 - ui * (2 * q + eta) ** 2)
    s12 = eta * iq * (one / 2) * (u - ui)
    s21 = -eta * iq * (one / 32) * (u * (2 * q - eta) ** 4 - ui * (2 * q + eta) ** 4)
    return s0, mat2(d * (one / 2), s12, s21, -d * (one / 2))


def tilde_map(p, q, eta, c):
    """(S0, traceless S~) of the eta-independent top from RS canonical variables."""
    _check_q(q)
    u = math.exp(p / c)
    return _tilde_entries(u, 1 / u, float(q), eta)


def tilde_map_exact(eta, u="u", q="q"):
    U, Q = var(u), var(q)
    return _tilde_entries(U, U**-1, Q, Fraction(eta))


def cm_map(p, q, nu):
    """Residue matrix of the CM model; eigenvalues 0 and nu."""
    _check_q(q)
    if isinstance(q, (SparsePoly, Fraction)) or isinstance(p, SparsePoly):
        half = Fraction(1, 2)
        iq = q**-1 if isinstance(q, SparsePoly) else 1 / q
    else:
        half, iq = 0.5, 1.0 / q
    return mat2(
        half * p * q,
        -half * p * iq,
        half * (p * q**3 - 2 * nu * q**2),
        -half * p * q + nu,
    )


def cm_ham(p, q, nu):
    _check_q(q)
    return 0.5 * p * p - nu * p / (2 * q) if not isinstance(p, SparsePoly) else (
        Fraction(1, 2) * p * p - nu * p * q**-1 * Fraction(1, 2)
    )


def canonical_rs_table(c, u="u", q="q"):
    return canonical_table([(u, q, c)])


def canonical_cm_table(p="p", q="q"):
    return canonical_table([(p, q)])


def rs_flow_factor(eta, c):
    """Constant k with {H_RS, S_ij}_canonical = k * {tr S, S_ij}_eta-table.

    Measured entrywise with the bracket engine; raises if the ratio is not
    one and the same constant for all entries.
    """
    from .poisson import eta_table

    S = rs_map_exact(eta)
    H = rs_ham_exact(eta)
    can = canonical_rs_table(c)
    et = eta_table(eta, "T")
    sub = {f"T{i + 1}{j + 1}": S[i, j] for i in range(2) for j in range(2)}
    trT = var("T11") + var("T22")
    ratio = None
    for i in range(2):
        for j in range(2):
            lhs = bracket(H, S[i, j], can)
            rhs = bracket(trT, var(f"T{i + 1}{j + 1}"), et).subs(sub)
            if not rhs:
                if lhs:
                    raise ArithmeticError("flows are not proportional")
                continue
            # rhs is a polynomial; find k with lhs == k * rhs from one term
            mono, coef = next(iter(rhs.terms.items()))
            k = lhs.terms.get(mono, Fraction(0)) / coef
            if lhs != rhs * k:
                raise ArithmeticError("flows are not proportional")
            if ratio is not None and ratio != k:
                raise ArithmeticError("entrywise ratios differ")
            ratio = k
    return ratio


def limit_remainder(p, q, nu, c, dps=60):
    """|H_RS - 2 - 2 H_CM / c^2| at eta = nu/c, evaluated in high precision."""
    with mpmath.workdps(dps):
        p, q, nu, c = (mpmath.mpf(x) for x in (p, q, nu, c))
        eta = nu / c
        x = p / c
        hrs = (2 * q - eta) / (2 * q) * mpmath.exp(x) + (2 * q + eta) / (2 * q) * mpmath.exp(-x)
        hcm = p * p / 2 - nu * p / (2 * q)
        return float(abs(hrs - 2 - 2 * hcm / c**2))


def limit_slope(p, q, nu, cs=(10.0, 1e2, 1e3, 1e4)):
    """Least-squares slope of log|remainder| against log c."""
    r = [limit_remainder(p, q, nu, c) for c in cs]
    return float(np.polyfit(np.log(cs), np.log(r), 1)[0])


def cm_vector_field(nu):
    def rhs(y):
        q, p = y
        return np.array([p - nu / (2 * q), -nu * p / (2 * q * q)])
    return rhs


def rs_vector_field(eta, c):
    def rhs(y):
        q, p = y
        ex, emx = math.exp(p / c), math.exp(-p / c)
        a, b = (2 * q - eta) / (2 * q), (2 * q + eta) / (2 * q)
        dHdp = (a * ex - b * emx) / c
        dHdq = eta / (2 * q * q) * (ex - emx)
        return np.array([dHdp, -dHdq])
    return rhs


def canonical_flow(rhs, q0, p0, dt, steps, qmin=1e-8):
    """RK4 for (q, p) with q' = dH/dp, p' = -dH/dq.  Returns array of rows (t, q, p)."""
    y = np.array([q0, p0], dtype=float)
    out = np.empty((steps + 1, 3))
    out[0] = (0.0, *y)
    for n in range(steps):
        y = rk4_step(y, rhs, dt)
        if not np.all(np.isfinite(y)) or abs(y[0]) < qmin:
            raise FloatingPointError(f"q left the admissible region at step {n + 1}: q={y[0]}")
        out[n + 1] = ((n + 1) * dt, *y)
    return out
