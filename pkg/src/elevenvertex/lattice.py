"""Gaudin models and classical spin chains built from the 11-vertex tops.

Site ``a`` of a symbolic model carries generators named ``{prefix}{a}_11``,
``{prefix}{a}_12`` and so on (plus ``{prefix}{a}_0`` for the scalar generator
of a chain in the eta-independent description).  The phase space is the
direct sum of the single-site brackets.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactcore import (
    RationalSampler,
    SparsePoly,
    commutator,
    det2,
    eye,
    is_zero,
    trace,
    var,
    zeros,
)
from .poisson import (
    bracket,
    bracket_at,
    direct_sum,
    lie_poisson_table,
    sklyanin_table,
    spin_matrix,
)
from .rmatrix import classical_r, quantum_R
from .tops import (
    casimirs_eta,
    casimirs_tilde,
    inertia_J,
    lax_eta,
    lax_nonrel,
    lax_tilde,
    m_cal,
)

__all__ = [
    "GaudinData",
    "site_prefix",
    "symbolic_gaudin",
    "gaudin_table",
    "gaudin_lax",
    "gaudin_hac",
    "gaudin_h",
    "gaudin_h0",
    "gaudin_spectral_tail",
    "gaudin_flow",
    "gaudin_M",
    "engine_flow",
    "involution_exact",
    "involution_random",
    "canonical_trace_cm",
    "canonical_gaudin_h",
    "canonical_gaudin_h0",
    "canonical_trace_rs",
    "Site",
    "chain_table",
    "symbolic_chain",
    "transfer_T",
    "transfer_T0_tensor",
    "double_row_T",
    "boundary_constraint_residual",
    "trace_commutativity_random",
    "local_point",
    "local_eval",
]


def site_prefix(a, prefix="S"):
    return f"{prefix}{a}_"


# -- Gaudin ---------------------------------------------------------------

@dataclass
class GaudinData:
    """Inhomogeneities ``zs`` (distinct) and one spin matrix per site."""

    zs: list
    spins: list
    eps: object = 1

    def __post_init__(self):
        if len(self.zs) != len(self.spins):
            raise ValueError("one inhomogeneity per site is required")
        if len(set(self.zs)) != len(self.zs):
            raise ValueError("inhomogeneities must be pairwise distinct")

    @property
    def n(self):
        return len(self.zs)


def gaudin_table(n, prefix="S"):
    return direct_sum(*(lie_poisson_table(site_prefix(a, prefix)) for a in range(1, n + 1)))


def symbolic_gaudin(zs, eps=1, prefix="S"):
    zs = [Fraction(z) for z in zs]
    spins = [spin_matrix(site_prefix(a, prefix)) for a in range(1, len(zs) + 1)]
    return GaudinData(zs, spins, eps)


def gaudin_lax(z, data):
    """Sum of single-site Lax matrices L(z - z_a, S^a)."""
    if any(z == za for za in data.zs):
        raise ZeroDivisionError("spectral parameter at a site pole")
    out = None
    for za, S in zip(data.zs, data.spins):
        L = lax_nonrel(z - za, S, data.eps)
        out = L if out is None else out + L
    return out


def gaudin_hac(a, c, data):
    """Pair term -tr(S^a L(z_a - z_c, S^c)); sites are 1-based."""
    Sa, Sc = data.spins[a - 1], data.spins[c - 1]
    return -trace(Sa @ lax_nonrel(data.zs[a - 1] - data.zs[c - 1], Sc, data.eps))


def gaudin_h(a, data):
    if data.n < 2:
        raise ValueError("h_a needs at least two sites")
    out = 0
    for c in range(1, data.n + 1):
        if c != a:
            out = out + gaudin_hac(a, c, data)
    return out


def gaudin_h0(data, form="trace"):
    """h0 as 1/2 sum_{b,c} tr(S^b M(z_b - z_c, S^c)) or in its expanded component form."""
    S, zs, eps = data.spins, data.zs, data.eps
    n = data.n
    if form == "trace":
        out = 0
        for b in range(n):
            for c in range(n):
                out = out + trace(S[b] @ m_cal(zs[b] - zs[c], S[c], eps)) * Fraction(1, 2)
        return out
    if form != "explicit":
        raise ValueError(f"unknown form {form!r}")
    e2 = eps * eps
    d = [s[0, 0] - s[1, 1] for s in S]
    out = 0
    for a in range(n):
        out = out - e2 * S[a][0, 1] * d[a]
    for b in range(n):
        for c in range(b):
            out = out - e2 * (S[b][0, 1] * d[c] + S[c][0, 1] * d[b]) - 2 * e2 * e2 * S[b][0, 1] * S[c][0, 1] * (
                zs[b] - zs[c]
            ) ** 2
    return out


def _lagrange(xs, ys):
    """Coefficients (low to high) of the interpolating polynomial; exact for Fraction input."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] = coeffs[k] + ys[i] * basis[k] / denom
    return coeffs


def _spectral_residual(z, data, hs, h0):
    L = gaudin_lax(z, data)
    val = trace(L @ L) * Fraction(1, 2)
    for a, (za, S) in enumerate(zip(data.zs, data.spins)):
        x = z - za
        val = val - trace(S @ S) * Fraction(1, 2) / (x * x) + hs[a] / x
    return val - 2 * h0


def gaudin_spectral_tail(data, degree=6, seed=0):
    """Polynomial tail of 1/2 tr L(z)^2 minus its pole part and 2 h0.

    The residual is evaluated at ``degree + 1`` exact sample points and
    interpolated; three further points certify that the residual is indeed
    this polynomial.  Returns the coefficient list (low to high), with
    trailing zeros stripped; an empty list means the expansion is exact.
    """
    hs = [gaudin_h(a, data) for a in range(1, data.n + 1)] if data.n > 1 else [SparsePoly()]
    h0 = gaudin_h0(data)
    rs = RationalSampler(seed)
    xs = []
    while len(xs) < degree + 4:
        z = rs.rational() * 3
        if z not in xs and z not in data.zs:
            xs.append(z)
    ys = [_spectral_residual(z, data, hs, h0) for z in xs]
    coeffs = _lagrange(xs[: degree + 1], ys[: degree + 1])
    for x, y in zip(xs[degree + 1:], ys[degree + 1:]):
        p = sum((c * x**k for k, c in enumerate(coeffs)), Fraction(0))
        if not is_zero(p - y):
            raise ArithmeticError("residual is not a polynomial of the assumed degree")
    coeffs = [SparsePoly.lift(c) for c in coeffs]
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def gaudin_flow(d, data):
    """Right-hand sides of the t_d flow (d = 0 or a site index) as per-site matrices."""
    S, zs, eps, n = data.spins, data.zs, data.eps, data.n
    out = []
    if d == 0:
        for a in range(n):
            rhs = commutator(S[a], inertia_J(S[a], eps))
            for c in range(n):
                if c != a:
                    rhs = rhs + commutator(S[a], m_cal(zs[a] - zs[c], S[c], eps))
            out.append(rhs)
        return out
    a = d - 1
    for b in range(n):
        if b != a:
            out.append(-commutator(S[b], lax_nonrel(zs[a] - zs[b], S[a], eps)))
        else:
            rhs = None
            for c in range(n):
                if c != a:
                    t = commutator(S[a], lax_nonrel(zs[c] - zs[a], S[c], eps))
                    rhs = t if rhs is None else rhs + t
            out.append(rhs)
    return out


def gaudin_M(d, z, data):
    """M-operator with dL/dt_d = [L, M_d] for the flows of :func:`gaudin_flow`.

    For a site flow this is +L(z - z_a, S^a), so the site operators sum to
    +L(z) rather than -L(z).
    """
    S, zs, eps = data.spins, data.zs, data.eps
    if d == 0:
        out = None
        for za, Sa in zip(zs, S):
            t = m_cal(z - za, Sa, eps)
            out = t if out is None else out + t
        return out
    return lax_nonrel(z - zs[d - 1], S[d - 1], eps)


def engine_flow(H, data, table):
    """Per-site matrices of {H, S^a} computed by the bracket engine."""
    out = []
    for S in data.spins:
        M = np.empty((2, 2), dtype=object)
        for i in range(2):
            for j in range(2):
                g = S[i, j]
                M[i, j] = bracket(H, g, table)
        out.append(M)
    return out


def involution_exact(data, table=None):
    """Exact brackets between all pairs of Gaudin Hamiltonians; returns the nonzero ones."""
    table = table or gaudin_table(data.n)
    hs = {f"h{a}": gaudin_h(a, data) for a in range(1, data.n + 1)}
    hs["h0"] = gaudin_h0(data)
    bad = {}
    for (na, fa), (nb, fb) in itertools.combinations(hs.items(), 2):
        v = bracket(fa, fb, table)
        if not is_zero(v):
            bad[(na, nb)] = v
    return bad


def involution_random(n, seed=0, points=20):
    """Random-point certificate of involution for an n-site model.

    Inhomogeneities are drawn once from the seed; each Hamiltonian pair is
    evaluated at ``points`` seeded spin configurations.  Returns the list of
    failing ``(pair, point_index, value)`` entries.
    """
    rs = RationalSampler(seed)
    zs = []
    while len(zs) < n:
        z = rs.rational()
        if z not in zs:
            zs.append(z)
    data = symbolic_gaudin(zs)
    table = gaudin_table(n)
    hs = {f"h{a}": gaudin_h(a, data) for a in range(1, n + 1)}
    hs["h0"] = gaudin_h0(data)
    gens = list(table.generators)
    failures = []
    for k in range(points):
        pt = rs.point(gens)
        for (na, fa), (nb, fb) in itertools.combinations(hs.items(), 2):
            v = bracket_at(fa, fb, table, pt)
            if v != 0:
                failures.append(((na, nb), k, v))
    return failures


# -- canonical forms ------------------------------------------------------

def _half():
    return Fraction(1, 2)


def canonical_trace_cm(pa, qa, nua, pb, qb, nub):
    """tr(S^a S^b) for residues parametrized by CM variables, printed product form."""
    h = _half()
    return (pa * qa**-1 * h * (qb * qb - qa * qa) + nua) * (pb * qb**-1 * h * (qa * qa - qb * qb) + nub)


def canonical_gaudin_h(a, ps, qs, nus, zs, printed=True):
    """h_a written directly in CM variables.

    ``printed=True`` keeps the published signs of the linear and cubic terms;
    ``printed=False`` gives the form obtained by substituting the CM residue
    into the pair terms, which differs by the sign of those two terms.
    """
    h = _half()
    sg = 1 if printed else -1
    a -= 1
    out = SparsePoly()
    for c in range(len(zs)):
        if c == a:
            continue
        dz = zs[a] - zs[c]
        pa, qa, na, pc, qc, nc = ps[a], qs[a], nus[a], ps[c], qs[c], nus[c]
        out = out - canonical_trace_cm(pa, qa, na, pc, qc, nc) * (1 / Fraction(dz))
        out = out + sg * dz * h * (pa * qa**-1 * (pc * qc - nc) + pc * qc**-1 * (pa * qa - na))
        out = out - sg * dz**3 * pa * pc * (qa * qc) ** -1 * Fraction(1, 4)
    return out


def canonical_gaudin_h0(ps, qs, nus, zs, printed=True):
    """h0 written directly in CM variables.

    ``printed=False`` doubles the (z_b - z_c)^2 coupling, which is what the
    substitution of the CM residue into h0 produces.
    """
    h = _half()
    w = h if printed else Fraction(1)
    n = len(zs)
    out = SparsePoly()
    for a in range(n):
        out = out + ps[a] * qs[a] ** -1 * h * (ps[a] * qs[a] - nus[a])
    for b in range(n):
        for c in range(b):
            pb, qb, nb, pc, qc, nc = ps[b], qs[b], nus[b], ps[c], qs[c], nus[c]
            term = (
                pb * qb**-1 * (pc * qc - nc)
                + pc * qc**-1 * (pb * qb - nb)
                - (zs[b] - zs[c]) ** 2 * pb * pc * (qb * qc) ** -1 * w
            )
            out = out + h * term
    return out


def canonical_trace_rs(ua, qa, eta_a, ub, qb, eta_b):
    """tr(S^a S^b) for RS-parametrized sites, printed product form (u = exp(p/c))."""
    h = _half()
    uai, ubi = ua**-1, ub**-1
    first = qa * h * (ub - ubi) - qa**-1 * h * (ub * (qb - eta_b) ** 2 - ubi * (qb + eta_b) ** 2)
    second = qb * h * (ua - uai) - qb**-1 * h * (ua * (qa - eta_a) ** 2 - uai * (qa + eta_a) ** 2)
    return first * second


# -- chains -----------------------------------------------------------------

@dataclass
class Site:
    """One chain site: inhomogeneity, eta and spin (plus S0 for the tilde description)."""

    z: object
    spin: object
    eta: object = 1
    s0: object = None


def chain_table(n, desc="tilde", prefix="R", boundaries=False):
    if desc == "tilde":
        tabs = [sklyanin_table(site_prefix(a, prefix)) for a in range(1, n + 1)]
        if boundaries:
            tabs += [sklyanin_table(f"{prefix}p_"), sklyanin_table(f"{prefix}m_")]
        return direct_sum(*tabs)
    raise ValueError("bracket tables are provided for the tilde description only")


def symbolic_chain(zs, desc="tilde", etas=None, prefix="R", boundaries=False):
    sites = []
    for a, z in enumerate(zs, start=1):
        p = site_prefix(a, prefix)
        s0 = var(f"{p}0") if desc == "tilde" else None
        eta = Fraction(etas[a - 1]) if etas else Fraction(1)
        sites.append(Site(Fraction(z), spin_matrix(p), eta, s0))
    if not boundaries:
        return sites
    bp = Site(Fraction(0), spin_matrix(f"{prefix}p_"), Fraction(1), var(f"{prefix}p_0"))
    bm = Site(Fraction(0), spin_matrix(f"{prefix}m_"), Fraction(1), var(f"{prefix}m_0"))
    return sites, bp, bm


def _site_lax(z, site, desc):
    if desc == "eta":
        return lax_eta(z - site.z, site.spin, site.eta)
    if desc == "tilde":
        return lax_tilde(z - site.z, site.s0, site.spin)
    if desc == "nonrel":
        return lax_nonrel(z - site.z, site.spin)
    raise ValueError(f"unknown description {desc!r}")


def transfer_T(z, sites, desc="eta"):
    """Ordered product of site Lax matrices, site 1 leftmost."""
    out = None
    for s in sites:
        L = _site_lax(z, s, desc)
        out = L if out is None else out @ L
    return out


def _embed_0a(t, a, n):
    """Two-site operator acting on auxiliary space 0 and quantum space a of n+1 spaces."""
    dim = 2 ** (n + 1)
    out = zeros(dim)
    t4 = np.asarray(t).reshape(2, 2, 2, 2)
    for row in range(dim):
        rbits = [(row >> (n - k)) & 1 for k in range(n + 1)]
        for i in range(2):
            for k in range(2):
                v = t4[rbits[0], rbits[a], i, k]
                if is_zero(v):
                    continue
                cbits = list(rbits)
                cbits[0], cbits[a] = i, k
                col = sum(b << (n - idx) for idx, b in enumerate(cbits))
                out[row, col] = v
    return out


def _embed_site(m, a, n):
    """Single-site matrix placed on space a of n+1 spaces (space 0 auxiliary)."""
    dim = 2 ** (n + 1)
    out = zeros(dim)
    for row in range(dim):
        rbits = [(row >> (n - k)) & 1 for k in range(n + 1)]
        for j in range(2):
            v = m[rbits[a], j]
            if is_zero(v):
                continue
            cbits = list(rbits)
            cbits[a] = j
            out[row, sum(b << (n - idx) for idx, b in enumerate(cbits))] = v
    return out


def transfer_T0_tensor(z, sites, desc="eta"):
    """Auxiliary-space matrix tr_{1..n}(R_01 ... R_0n S^1_1 ... S^n_n).

    ``desc="eta"`` uses R^{eta_a}(z - z_a); ``desc="r"`` uses the classical
    r(z - z_a).  Computed in the full 2^(n+1)-dimensional space.
    """
    n = len(sites)
    op = eye(2 ** (n + 1))
    for a, s in enumerate(sites, start=1):
        R = quantum_R(s.eta, z - s.z) if desc == "eta" else classical_r(z - s.z)
        op = op @ _embed_0a(R, a, n)
    for a, s in enumerate(sites, start=1):
        op = op @ _embed_site(s.spin, a, n)
    half = 2**n
    out = zeros(2)
    for i in range(2):
        for j in range(2):
            acc = Fraction(0)
            for m in range(half):
                acc = acc + op[i * half + m, j * half + m]
            out[i, j] = acc
    return out


def double_row_T(z, sites, bplus, bminus):
    """L~(S+, z) L~(S^1, z-z_1)...L~(S^n, z-z_n) L~(S-, z) L~(S^n, z-z_n)...L~(S^1, z-z_1)."""
    out = lax_tilde(z, bplus.s0, bplus.spin)
    for s in sites:
        out = out @ _site_lax(z, s, "tilde")
    out = out @ lax_tilde(z, bminus.s0, bminus.spin)
    for s in reversed(sites):
        out = out @ _site_lax(z, s, "tilde")
    return out


def boundary_constraint_residual(z, S0, S):
    """L~(z) L~(-z) - det L~(z) * 1."""
    A = lax_tilde(z, S0, S) @ lax_tilde(-z, S0, S)
    return A - eye(2) * det2(lax_tilde(z, S0, S))


def trace_commutativity_random(Tfun, table, seed=0, points=20, avoid=()):
    """Random-point certificate that {tr T(z), tr T(w)} vanishes.

    ``Tfun(z)`` returns the symbolic transfer matrix; for every sample a
    fresh pair (z, w) and a fresh spin point are drawn.  Returns the list of
    nonzero values (empty on success).
    """
    rs = RationalSampler(seed)
    gens = list(table.generators)
    bad = []
    for k in range(points):
        while True:
            z, w = rs.rational(), rs.rational()
            if z != w and all(z != x and w != x for x in avoid):
                break
        fz, fw = trace(Tfun(z)), trace(Tfun(w))
        v = bracket_at(fz, fw, table, rs.point(gens))
        if v != 0:
            bad.append((k, z, w, v))
    return bad


# -- local Hamiltonian point ------------------------------------------------

def _exact_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return math.sqrt(x)


def local_point(sites, desc="eta"):
    """Root z0 of det L(z0) = 0 shared by all sites of a homogeneous chain.

    All sites must sit at z = 0 and carry equal Casimir values (and equal
    eta in the eta description).  Returns both roots, exact when the
    discriminant is a rational square.  Raises ValueError when the roots are
    complex.
    """
    if any(s.z != 0 for s in sites):
        raise ValueError("local Hamiltonian point requires a homogeneous chain (all z_a = 0)")
    if desc == "eta":
        etas = {s.eta for s in sites}
        if len(etas) != 1:
            raise ValueError("sites carry different eta")
        eta = etas.pop()
        cas = {casimirs_eta(s.spin, eta) for s in sites}
        if len(cas) != 1:
            raise ValueError(f"Casimir values differ across sites: {sorted(cas)}")
        c1, c2 = cas.pop()
        if c1 == 0:
            raise ValueError("degenerate site: C1 = 0")
        # C1 z^2 + eta C1 z + eta^2 C2 = 0
        disc = (eta * c1) ** 2 - 4 * c1 * eta**2 * c2
        root = _exact_sqrt(disc) if isinstance(disc, Fraction) else (math.sqrt(disc) if disc >= 0 else None)
        if root is None:
            r = complex(disc) ** 0.5
            raise ValueError(
                f"no real root: z0 = {(-eta * c1 + r) / (2 * c1)}, {(-eta * c1 - r) / (2 * c1)}"
            )
        return ((-eta * c1 + root) / (2 * c1), (-eta * c1 - root) / (2 * c1))
    if desc == "tilde":
        cas = {casimirs_tilde(s.s0, s.spin) for s in sites}
        if len(cas) != 1:
            raise ValueError(f"Casimir values differ across sites: {sorted(cas)}")
        c2, c0 = cas.pop()
        if c0 == 0:
            raise ValueError("degenerate site: C~0 = 0")
        x = -c2 / c0
        root = _exact_sqrt(x) if isinstance(x, Fraction) else (math.sqrt(x) if x >= 0 else None)
        if root is None or root == 0:
            raise ValueError(f"no real nonzero root: z0^2 = {x}")
        return (root, -root)
    raise ValueError(f"unknown description {desc!r}")


def local_eval(sites, desc="eta", which=0):
    """Transfer matrix at the local Hamiltonian point, with z0 and tr T(z0)."""
    z0 = local_point(sites, desc)[which]
    T = transfer_T(z0, sites, desc)
    return {"z0": z0, "T": T, "trace": trace(T)}
