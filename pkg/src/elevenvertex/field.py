"""1+1 field theories: Landau-Lifshitz, the rational chiral model and 1+1 Gaudin.

Two layers live here.  Jet functions act on a single point ``(S, S_x,
S_xx)`` and work with exact entries, so zero-curvature identities can be
checked without a grid.  Grid functions act on periodic ``(N, 2, 2)`` float
arrays and feed a method-of-lines RK4 integrator with second order central
differences in x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactcore import RationalSampler, commutator, mat2, trace
from .tops import inertia_J, lax_nonrel, m_cal, rk4_step

__all__ = [
    "Jet",
    "random_ll_jet",
    "ll_h",
    "ll_v1",
    "ll_uv",
    "ll_jet_residual",
    "ll_alpha",
    "ll_initial",
    "dx_central",
    "dxx_central",
    "ll_rhs",
    "ll_hamiltonian",
    "ll_energy",
    "zs_residual",
    "chiral_rhs",
    "chiral_jet_residual",
    "chiral_xxx_residual",
    "light_cone_residual",
    "gaudin1p1_rhs",
    "coupled_top_rhs",
    "pde_run",
]


# -- jets -------------------------------------------------------------------

@dataclass
class Jet:
    S: np.ndarray
    Sx: np.ndarray
    Sxx: np.ndarray
    lam: object
    k: object = 1


def random_ll_jet(rs: RationalSampler, k=1):
    """Exact jet with tr S = 0 and S^2 = lam^2, differentiated consistently.

    S11, S12, lam and the free derivatives are random rationals; S21 and its
    derivatives follow from S11^2 + S12 S21 = lam^2.
    """
    while True:
        a, b, lam = rs.rational(), rs.rational(), rs.rational()
        if lam * lam != a * a:
            break
    c = (lam * lam - a * a) / b
    a1, b1, a2, b2 = (rs.rational() for _ in range(4))
    # 2 a a' + b' c + b c' = 0
    c1 = -(2 * a * a1 + b1 * c) / b
    # 2 a'^2 + 2 a a'' + b'' c + 2 b' c' + b c'' = 0
    c2 = -(2 * a1 * a1 + 2 * a * a2 + b2 * c + 2 * b1 * c1) / b
    return Jet(mat2(a, b, c, -a), mat2(a1, b1, c1, -a1), mat2(a2, b2, c2, -a2), lam, Fraction(k))


def ll_h(jet):
    """h = -(k / 4 lam^2) [S, S_x]."""
    if jet.lam == 0:
        raise ZeroDivisionError("lambda must be nonzero")
    return commutator(jet.S, jet.Sx) * (-jet.k / (4 * jet.lam * jet.lam))


def ll_v1(z, S):
    """L(z, S)/z - 2 M(z, S)."""
    return lax_nonrel(z, S) * (1 / z) - m_cal(z, S) * 2


def ll_uv(z, jet):
    """(U, V1, V2, V) with U = L(z, S), V2 = L(z, h) and V = -(V1 + V2)/2."""
    U = lax_nonrel(z, jet.S)
    V1 = ll_v1(z, jet.S)
    V2 = lax_nonrel(z, ll_h(jet))
    return U, V1, V2, (V1 + V2) * Fraction(-1, 2)


def ll_jet_residual(z, jet):
    """-k d_x V1 - [L, V2] at a jet (d_x V1 = V1(z, S_x) by linearity)."""
    U, V1, V2, _ = ll_uv(z, jet)
    return -jet.k * ll_v1(z, jet.Sx) - commutator(U, V2)


# -- grids ----------------------------------------------------------------------

def ll_alpha(k, lam):
    return k * k / (8 * lam * lam)


def ll_initial(N, lam=1.0, length=2 * math.pi):
    """Smooth periodic LL data on the constraint surface.

    S12 = -(1 + 0.3 cos x), S11 = lam cos(theta), theta = 1 + 0.5 sin x and
    S21 = (lam^2 - S11^2) / S12.
    """
    x = np.arange(N) * (length / N)
    s12 = -(1 + 0.3 * np.cos(2 * math.pi * x / length))
    theta = 1 + 0.5 * np.sin(2 * math.pi * x / length)
    s11 = lam * np.cos(theta)
    s21 = (lam * lam - s11 * s11) / s12
    return x, mat2(s11, s12, s21, -s11)


def dx_central(F, dx):
    return (np.roll(F, -1, axis=0) - np.roll(F, 1, axis=0)) / (2 * dx)


def dxx_central(F, dx):
    return (np.roll(F, -1, axis=0) - 2 * F + np.roll(F, 1, axis=0)) / (dx * dx)


def _lap_comm(S, dx):
    """[S, D2 S]; equals the forward difference of [S, D_minus S], so it is a discrete x-derivative."""
    return commutator(S, dxx_central(S, dx))


def ll_rhs(S, dx, alpha, eps=1):
    """dS/dt = alpha [S, S_xx] + [S, J(S)] on a periodic grid."""
    return alpha * _lap_comm(S, dx) + commutator(S, inertia_J(S, eps))


def _trap(f, dx):
    # periodic trapezoid rule
    v = np.sum(f) * dx
    return complex(v) if np.iscomplexobj(v) else float(v)


def ll_hamiltonian(S, dx):
    """1/2 integral of tr(S_x^2) + tr(S J(S)) with central-difference S_x."""
    Sx = dx_central(S, dx)
    dens = trace(Sx @ Sx) + trace(S @ inertia_J(S))
    return 0.5 * _trap(dens, dx)


def ll_energy(S, dx, alpha, eps=1):
    """1/2 integral of tr(S J(S)) - alpha tr(S_x^2), forward-difference S_x.

    This combination is conserved by :func:`ll_rhs` in continuous time; with
    the forward difference it pairs exactly with the three-point Laplacian.
    """
    Sx = (np.roll(S, -1, axis=0) - S) / dx
    dens = trace(S @ inertia_J(S, eps)) - alpha * trace(Sx @ Sx)
    return 0.5 * _trap(dens, dx)


def zs_residual(z, snapshots, dt, dx, k, lam):
    """Max-norm of d_t U - k d_x V - [U, V] at the centre snapshot.

    ``snapshots`` holds 2 (forward difference, first order) or 5 (five-point
    stencil, fourth order) consecutive states; the residual is taken at the
    first or the middle one respectively.
    """
    snaps = [np.asarray(s) for s in snapshots]
    if len({s.shape for s in snaps}) != 1:
        raise ValueError("snapshots live on different grids")
    if len(snaps) == 2:
        S = snaps[0]
        St = (snaps[1] - snaps[0]) / dt
    elif len(snaps) == 5:
        S = snaps[2]
        St = (-snaps[4] + 8 * snaps[3] - 8 * snaps[1] + snaps[0]) / (12 * dt)
    else:
        raise ValueError("need 2 or 5 snapshots")
    h = commutator(S, dx_central(S, dx)) * (-k / (4 * lam * lam))
    U = lax_nonrel(z, S)
    V = (ll_v1(z, S) + lax_nonrel(z, h)) * -0.5
    Ut = lax_nonrel(z, St)
    res = Ut - k * dx_central(V, dx) - commutator(U, V)
    return float(np.abs(res).max())


# -- chiral -------------------------------------------------------------------

def chiral_rhs(S1, S2, dx, k, z1, z2, eps=1):
    """Time derivatives of the two chiral fields on a periodic grid."""
    if z1 == z2:
        raise ZeroDivisionError("poles must be distinct")
    d1 = k * dx_central(S1, dx) - 2 * commutator(S1, lax_nonrel(z1 - z2, S2, eps))
    d2 = -k * dx_central(S2, dx) - 2 * commutator(lax_nonrel(z2 - z1, S1, eps), S2)
    return d1, d2


def chiral_jet_residual(z, jet1, jet2, k, z1, z2):
    """Zero-curvature residual of U = L1 + L2, V = L1 - L2 with time derivatives from :func:`chiral_rhs`.

    ``jet1``, ``jet2`` supply S and S_x of each field (constraints are not
    needed); the result must vanish identically in z.
    """
    S1, S2 = jet1.S, jet2.S
    t1 = k * jet1.Sx - 2 * commutator(S1, lax_nonrel(z1 - z2, S2))
    t2 = -k * jet2.Sx - 2 * commutator(lax_nonrel(z2 - z1, S1), S2)
    L1, L2 = lax_nonrel(z - z1, S1), lax_nonrel(z - z2, S2)
    Ut = lax_nonrel(z - z1, t1) + lax_nonrel(z - z2, t2)
    Vx = lax_nonrel(z - z1, jet1.Sx) - lax_nonrel(z - z2, jet2.Sx)
    return Ut - k * Vx - commutator(L1 + L2, L1 - L2)


def chiral_xxx_residual(jet1, jet2, k, z1, z2):
    """With eps = 0, d_t S^- - k d_x S^+ + 2/(z1 - z2) [S^-, S^+] and d_t S^+ - k d_x S^-.

    Both vanish identically; the coefficient of [S^-, S^+] equals the
    conventional unit coefficient when z1 - z2 = -2.
    """
    S1, S2 = jet1.S, jet2.S
    t1 = k * jet1.Sx - 2 * commutator(S1, lax_nonrel(z1 - z2, S2, 0))
    t2 = -k * jet2.Sx - 2 * commutator(lax_nonrel(z2 - z1, S1, 0), S2)
    Sm, Sp = S1 - S2, S1 + S2
    Smx, Spx = jet1.Sx - jet2.Sx, jet1.Sx + jet2.Sx
    delta = z1 - z2
    r_minus = (t1 - t2) - k * Spx + commutator(Sm, Sp) * (2 / Fraction(delta) if not isinstance(delta, float) else 2 / delta)
    r_plus = (t1 + t2) - k * Smx
    return r_minus, r_plus


def light_cone_residual(S1, delta):
    """[S1, L(delta, S2_red)] + [S1, J(S1)] with S2_red = -L(delta, S1)/2.

    Vanishes identically, so the reduced flow d_eta S1 = -2 [S1, L(delta, S2_red)]
    is 2 [S1, J(S1)].
    """
    S2 = lax_nonrel(delta, S1) * Fraction(-1, 2)
    return commutator(S1, lax_nonrel(delta, S2)) + commutator(S1, inertia_J(S1))


# -- 1+1 Gaudin -----------------------------------------------------------------

def gaudin1p1_rhs(fields, zs, dx, alpha, a=1):
    """t_a flow of the interacting LL magnets for fields ``S^1..S^n`` (site a is 1-based)."""
    n = len(fields)
    if len(set(zs)) != n:
        raise ZeroDivisionError("poles must be distinct")
    i = a - 1
    Sa = fields[i]
    others = [c for c in range(n) if c != i]
    ha = alpha * commutator(Sa, dx_central(Sa, dx))
    for c in others:
        ha = ha + lax_nonrel(zs[i] - zs[c], fields[c])
    # d_x h^a with the alpha part written as the discrete derivative [S, D2 S]
    dha = alpha * _lap_comm(Sa, dx)
    if others:
        dha = dha + dx_central(sum(lax_nonrel(zs[i] - zs[c], fields[c]) for c in others), dx)
    out = [None] * n
    own = dha + commutator(Sa, inertia_J(Sa))
    for c in others:
        own = own + commutator(ha, lax_nonrel(zs[c] - zs[i], fields[c]))
        own = own - commutator(ll_v1(zs[c] - zs[i], fields[c]), Sa)
    out[i] = own
    for b in others:
        out[b] = commutator(fields[b], ll_v1(zs[b] - zs[i], Sa) - lax_nonrel(zs[i] - zs[b], ha))
    return out


def coupled_top_rhs(spins, zs, a=1):
    """x-independent limit of :func:`gaudin1p1_rhs`, coded on plain 2x2 matrices."""
    n = len(spins)
    i = a - 1
    Sa = spins[i]
    ha = sum((lax_nonrel(zs[i] - zs[c], spins[c]) for c in range(n) if c != i), np.zeros_like(Sa))
    out = []
    for b in range(n):
        if b == i:
            v = Sa @ inertia_J(Sa) - inertia_J(Sa) @ Sa
            for c in range(n):
                if c != i:
                    Lc = lax_nonrel(zs[c] - zs[i], spins[c])
                    V1 = ll_v1(zs[c] - zs[i], spins[c])
                    v = v + (ha @ Lc - Lc @ ha) - (V1 @ Sa - Sa @ V1)
        else:
            X = ll_v1(zs[b] - zs[i], Sa) - lax_nonrel(zs[i] - zs[b], ha)
            v = spins[b] @ X - X @ spins[b]
        out.append(v)
    return out


# -- integrator -------------------------------------------------------------------

def pde_run(state, rhs, dt, steps, monitors=None, every=1, guard=None):
    """RK4 method of lines.

    ``state`` is an array (several fields are stacked on a leading axis);
    ``rhs`` maps state to its time derivative.  ``guard`` is an optional
    maximal stable dt.  Returns ``(snapshots, monitor_series)``; snapshots are
    kept every ``every`` steps (including step 0).
    """
    if guard is not None and dt > guard:
        raise ValueError(f"dt={dt} exceeds the stability bound {guard:.3g}")
    state = np.asarray(state)
    state = state.astype(np.result_type(state, float))
    monitors = monitors or {}
    series = {name: [f(state)] for name, f in monitors.items()}
    snaps = [state.copy()]
    for n in range(steps):
        state = rk4_step(state, rhs, dt)
        if not np.all(np.isfinite(state)):
            raise FloatingPointError(f"non-finite field after step {n + 1} (last stable step {n})")
        for name, f in monitors.items():
            series[name].append(f(state))
        if (n + 1) % every == 0:
            snaps.append(state.copy())
    return np.array(snaps), {k: np.array(v) for k, v in series.items()}
