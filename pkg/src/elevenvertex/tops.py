"""Rational 11-vertex tops in three descriptions.

* non-relativistic: ``L(z, S)`` with the linear Poisson-Lie brackets,
* eta-dependent relativistic: ``L^eta(z, S)`` built from the quantum R-matrix,
* eta-independent (Sklyanin): ``L~(z, S0, S)``.

Every function here is written entrywise, so ``S`` may be a 2x2 matrix of
exact scalars, of :class:`~elevenvertex.exactcore.SparsePoly`, of floats, or a
stacked ``(N, 2, 2)`` float array.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exactcore import (
    SparsePoly,
    commutator,
    eye,
    kron,
    mat2,
    partial_trace_2,
)
from .rmatrix import classical_r, deformed_r, quantum_R

__all__ = [
    "lax_nonrel",
    "lax_from_r",
    "inertia_J",
    "m_cal",
    "m_tilde",
    "lax_eta",
    "lax_eta_from_R",
    "inertia_J_eta",
    "m_eta",
    "lax_tilde",
    "change_vars",
    "tilde_from_eta",
    "l_of_l_residual",
    "m_tilde_alt_residual",
    "change_vars_residual",
    "hamiltonian_top",
    "casimirs_nonrel",
    "casimirs_eta",
    "casimirs_tilde",
    "top_rhs",
    "eta_top_rhs",
    "rk4_step",
    "flow_run",
    "lax_residual_series",
]


def _inv(z):
    if isinstance(z, SparsePoly):
        return z**-1
    if z == 0:
        raise ZeroDivisionError("pole at z=0")
    if isinstance(z, int):
        return Fraction(1, z)
    return 1 / z


def _entries(S):
    return S[..., 0, 0], S[..., 0, 1], S[..., 1, 0], S[..., 1, 1]


def _scalar(S, c):
    """c * identity shaped like S."""
    if isinstance(S, np.ndarray) and S.ndim == 3:
        return np.asarray(c)[..., None, None] * np.eye(2)
    zero = 0.0 if S.dtype != object else Fraction(0)
    return mat2(c, zero, zero, c)


def lax_nonrel(z, S, eps=1):
    """L(z, S); ``eps`` is the XXX deformation (eps=0 gives S/z)."""
    s11, s12, s21, s22 = _entries(S)
    iz = _inv(z)
    e2 = eps * eps
    z2 = z * z
    return mat2(
        (s11 - e2 * z2 * s12) * iz,
        s12 * iz,
        (s21 - e2 * z2 * (s11 - s22) - e2 * e2 * z2 * z2 * s12) * iz,
        (s22 + e2 * z2 * s12) * iz,
    )


def lax_from_r(z, S, eps=1):
    """tr_2(r_12(z) S_2), the r-matrix route to :func:`lax_nonrel`."""
    r = classical_r(z) if eps == 1 else deformed_r(z, eps)
    return partial_trace_2(r @ kron(eye(2), np.asarray(S, dtype=object)))


def inertia_J(S, eps=1):
    """Inverse inertia tensor J(S) (times eps^2 for the deformed top)."""
    s11, s12, s21, s22 = _entries(S)
    e2 = eps * eps
    return mat2(-e2 * s12, 0 * s12, -e2 * (s11 - s22), e2 * s12)


def m_cal(z, S, eps=1):
    """M-operator of the linear description; m_cal(0, S) = J(S)."""
    s11, s12, s21, s22 = _entries(S)
    e2 = eps * eps
    return mat2(-e2 * s12, 0 * s12, -e2 * (s11 - s22 + 2 * e2 * z * z * s12), e2 * s12)


def m_tilde(z, S):
    """L(z)/z - m_cal(z): S/z^2 + z^2 s12 E_21."""
    return lax_nonrel(z, S) * _inv(z) - m_cal(z, S)


def lax_eta(z, S, eta):
    """Relativistic Lax matrix L^eta(z, S)."""
    s11, s12, s21, s22 = _entries(S)
    iz, ie = _inv(z), _inv(eta)
    tr = (s11 + s22) * ie
    a = z + eta
    return mat2(
        s11 * iz + tr - a * s12,
        s12 * iz,
        s21 * iz - a * ((s11 - s22) + (eta * eta + z * z + eta * z) * s12),
        s22 * iz + tr + a * s12,
    )


def lax_eta_from_R(z, S, eta):
    """tr_2(R^eta_12(z) S_2)."""
    return partial_trace_2(quantum_R(eta, z) @ kron(eye(2), np.asarray(S, dtype=object)))


def inertia_J_eta(S, eta):
    """z^0 coefficient of L^eta: the relativistic inverse inertia tensor."""
    s11, s12, s21, s22 = _entries(S)
    ie = _inv(eta)
    tr = (s11 + s22) * ie
    return mat2(
        -eta * s12 + tr,
        0 * s12,
        -(eta**3 * s12 + eta * (s11 - s22)),
        eta * s12 + tr,
    )


def m_eta(z, S):
    """M-operator of the eta-dependent description, M = -L(z, S)."""
    return -lax_nonrel(z, S)


def lax_tilde(z, S0, S):
    """S0 * 1 plus the traceless part of L(z, S)."""
    s11, s12, s21, s22 = _entries(S)
    iz = _inv(z)
    half = 0.5 if not isinstance(S, np.ndarray) or S.dtype != object else Fraction(1, 2)
    d = (s11 - s22) * half
    z2 = z * z
    return mat2(
        S0 + (d - z2 * s12) * iz,
        s12 * iz,
        (s21 - z2 * (s11 - s22) - z2 * z2 * s12) * iz,
        S0 + (-d + z2 * s12) * iz,
    )


def change_vars(eta, S0, S):
    """eta-dependent variables from the eta-independent ones: 1/2 L~(eta/2)."""
    if eta == 0:
        raise ZeroDivisionError("eta must be nonzero")
    half = Fraction(1, 2) if np.asarray(S).dtype == object else 0.5
    return lax_tilde(eta * half, S0, S) * half


def tilde_from_eta(eta, S):
    """Inverse component map: (S0, traceless S~) from the eta-dependent S."""
    s11, s12, s21, s22 = _entries(S)
    exact = np.asarray(S).dtype == object
    h = Fraction(1, 2) if exact else 0.5
    d = eta * (s11 - s22) + h * eta**3 * s12
    s21t = eta * s21 + (eta**3 * (s11 - s22)) * (h * h) + (Fraction(3, 16) if exact else 3 / 16) * eta**5 * s12
    return s11 + s22, mat2(d * h, eta * s12, s21t, -d * h)


def change_vars_residual(z, eta, S0, S):
    """L^eta(z - eta/2, L~(eta/2)) - phi(z - eta/2) L~(z), phi(x) = (2x + eta)/(x eta)."""
    half = Fraction(1, 2)
    x = z - eta * half
    phi = (2 * x + eta) * _inv(x) * _inv(eta)
    return lax_eta(x, lax_tilde(eta * half, S0, S), eta) - lax_tilde(z, S0, S) * phi


def l_of_l_residual(z, S):
    """L(z, L(z, S)) - S/z^2 - 2 J(S)."""
    return lax_nonrel(z, lax_nonrel(z, S)) - S * _inv(z) ** 2 - inertia_J(S) * 2


def m_tilde_alt_residual(z, S0, S):
    """1/2 J^{2z}(L~(z)) - m_cal(z, S) - S0/(2z) * 1."""
    X = lax_tilde(z, S0, S)
    half = Fraction(1, 2)
    return inertia_J_eta(X, 2 * z) * half - m_cal(z, S) - eye(2) * (S0 * _inv(2 * z))


# -- Hamiltonians and Casimirs ------------------------------------------

def hamiltonian_top(S):
    """H = -S12 (S11 - S22) = 1/2 tr(S J(S))."""
    s11, s12, s21, s22 = _entries(S)
    return -s12 * (s11 - s22)


def casimirs_nonrel(S):
    """(tr S, 1/2 tr S^2)."""
    s11, s12, s21, s22 = _entries(S)
    half = Fraction(1, 2) if np.asarray(S).dtype == object else 0.5
    return s11 + s22, half * (s11 * s11 + s22 * s22) + s12 * s21


def casimirs_eta(S, eta):
    """(C1, C2) with det L^eta(z) = C2/z^2 + (1/(z eta) + 1/eta^2) C1."""
    s11, s12, s21, s22 = _entries(S)
    c2 = s11 * s22 - s12 * s21
    c1 = (s11 + s22 + eta**2 * s12) ** 2 - 4 * eta**2 * s12 * s22
    return c1, c2


def casimirs_tilde(S0, S):
    """(C~2, C~0) with det L~(z) = C~2/z^2 + C~0."""
    s11, s12, s21, s22 = _entries(S)
    q = Fraction(1, 4) if np.asarray(S).dtype == object else 0.25
    d = s11 - s22
    return -q * d * d - s12 * s21, S0 * S0 + 2 * s12 * d


# -- integrators ------------------------------------------------------

def top_rhs(S, eps=1):
    """dS/dt = [S, J(S)]."""
    return commutator(S, inertia_J(S, eps))


def eta_top_rhs(S, eta):
    """dS/dt = [S, J^eta(S)], the flow of tr S under the eta-dependent brackets."""
    return commutator(S, inertia_J_eta(S, eta))


def rk4_step(state, rhs, dt):
    k1 = rhs(state)
    k2 = rhs(state + 0.5 * dt * k1)
    k3 = rhs(state + 0.5 * dt * k2)
    k4 = rhs(state + dt * k3)
    return state + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def flow_run(state, rhs, dt, steps, monitors=None, project=None):
    """Fixed-step RK4 trajectory.

    Returns ``(trajectory, drift)`` where ``trajectory`` has shape
    ``(steps + 1,) + state.shape`` and ``drift`` maps each monitor name to
    its per-step relative deviation from the initial value.  ``project`` is
    an optional callable applied after every step.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    state = np.asarray(state, dtype=float)
    traj = np.empty((steps + 1,) + state.shape)
    traj[0] = state
    monitors = monitors or {}
    ref = {k: f(state) for k, f in monitors.items()}
    drift = {k: np.zeros(steps + 1) for k in monitors}
    for n in range(steps):
        state = rk4_step(state, rhs, dt)
        if project is not None:
            state = project(state)
        if not np.all(np.isfinite(state)):
            raise FloatingPointError(f"non-finite state after step {n + 1}")
        traj[n + 1] = state
        for k, f in monitors.items():
            scale = max(abs(ref[k]), 1e-300)
            drift[k][n + 1] = abs(f(state) - ref[k]) / scale
    return traj, drift


def lax_residual_series(traj, dt, lax, mop):
    """max_t ||dL/dt - [L, M]|| with dL/dt from the five-point stencil.

    ``lax`` and ``mop`` map a state to L and M at fixed spectral parameter.
    The stencil is fourth order, so for an RK4 trajectory the residual
    decays like dt^4.
    """
    Ls = np.array([lax(s) for s in traj])
    dL = (-Ls[4:] + 8 * Ls[3:-1] - 8 * Ls[1:-3] + Ls[:-4]) / (12 * dt)
    mid = traj[2:-2]
    res = [np.abs(d - commutator(lax(s), mop(s))).max() for d, s in zip(dL, mid)]
    return float(max(res))
