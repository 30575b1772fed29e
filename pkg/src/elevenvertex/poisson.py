"""Poisson brackets on polynomial algebras and r-matrix structure checks.

A :class:`BracketTable` stores the brackets between generators; everything
else follows from bilinearity and the Leibniz rule,

    {f, g} = sum_{a, b} (df/dx_a) (dg/dx_b) {x_a, x_b}.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .exactcore import SparsePoly, eye, is_zero, kron, mat2, poly_eval, var
from .rmatrix import classical_r

__all__ = [
    "BracketTable",
    "spin_matrix",
    "spin_names",
    "lie_poisson_table",
    "eta_table",
    "eta_table_from_r_matrix",
    "sklyanin_table",
    "canonical_table",
    "direct_sum",
    "bracket",
    "bracket_at",
    "bracket_matrix",
    "check_linear",
    "check_quadratic",
    "check_reflection",
    "jacobi_residual",
    "is_casimir",
    "hamiltonian_flow",
]


class BracketTable:
    """Antisymmetric generator brackets with an optional global multiplier.

    Only one orientation of each pair needs to be supplied; the opposite one
    is filled in with the sign flipped.  Pairs that are not listed bracket to
    zero.
    """

    def __init__(self, generators, table, scale=1):
        self.generators = tuple(generators)
        self.scale = Fraction(scale)
        gens = set(self.generators)
        full = {}
        for (a, b), v in table.items():
            if a not in gens or b not in gens:
                raise KeyError(f"unknown generator in pair {(a, b)}")
            v = SparsePoly.lift(v)
            if a == b:
                if not is_zero(v):
                    raise ValueError(f"{{{a},{a}}} must vanish")
                continue
            if (b, a) in full and full[(b, a)] != -v:
                raise ValueError(f"inconsistent antisymmetry for {(a, b)}")
            full[(a, b)] = v
            full[(b, a)] = -v
        self._table = {k: v for k, v in full.items() if not is_zero(v)}

    def __getitem__(self, pair):
        v = self._table.get(pair)
        if v is None:
            return SparsePoly()
        return v * self.scale if self.scale != 1 else v

    def pairs(self):
        for (a, b), v in self._table.items():
            yield a, b, (v * self.scale if self.scale != 1 else v)

    def scaled(self, factor):
        return BracketTable(
            self.generators,
            {(a, b): v for (a, b), v in self._table.items() if a < b},
            self.scale * Fraction(factor),
        )

    def with_entry(self, a, b, value):
        """Copy of the table with one pair replaced."""
        entries = {(x, y): v for (x, y), v in self._table.items() if x < y}
        entries.pop((a, b), None)
        entries.pop((b, a), None)
        entries[(a, b)] = value
        return BracketTable(self.generators, entries, self.scale)

    def __repr__(self):
        return f"BracketTable({len(self.generators)} generators, {len(self._table) // 2} pairs)"


def spin_names(prefix):
    return [f"{prefix}{i}{j}" for i in (1, 2) for j in (1, 2)]


def spin_matrix(prefix):
    """2x2 matrix of generators named ``{prefix}11, {prefix}12, ...``."""
    n = spin_names(prefix)
    return mat2(var(n[0]), var(n[1]), var(n[2]), var(n[3]))


def lie_poisson_table(prefix="S"):
    """{S_ij, S_kl} = delta_il S_kj - delta_kj S_il."""
    S = {(i, j): var(f"{prefix}{i}{j}") for i in (1, 2) for j in (1, 2)}
    table = {}
    for (i, j), (k, l) in itertools.combinations(sorted(S), 2):
        v = SparsePoly()
        if i == l:
            v = v + S[(k, j)]
        if k == j:
            v = v - S[(i, l)]
        table[(f"{prefix}{i}{j}", f"{prefix}{k}{l}")] = v
    return BracketTable(spin_names(prefix), table)


def eta_table(eta, prefix="T"):
    """Quadratic brackets of the eta-dependent relativistic top."""
    eta = Fraction(eta)
    if eta == 0:
        raise ZeroDivisionError("eta must be nonzero")
    s11, s12, s21, s22 = (var(n) for n in spin_names(prefix))
    ie = 1 / eta
    tr = s11 + s22
    n = spin_names(prefix)
    return BracketTable(n, {
        (n[0], n[1]): -ie * tr * s12 + eta * s12**2,
        (n[3], n[1]): ie * tr * s12 + eta * s12**2,
        (n[0], n[2]): ie * s21 * tr + eta * (s11**2 - s11 * s22 - s12 * s21) + eta**3 * s11 * s12,
        (n[2], n[3]): ie * s21 * tr - eta * (s22**2 - s11 * s22 - s12 * s21) + eta**3 * s12 * s22,
        (n[1], n[2]): -tr * (ie * (s11 - s22) + eta * s12),
        (n[0], n[3]): eta * s12 * (s11 - s22 + eta**2 * s12),
    })


def eta_table_from_r_matrix(eta, prefix="T"):
    """Brackets read off from {S_1, S_2} = [J^eta(S)_1 S_2, P_12].

    Independent route to :func:`eta_table`, used to cross-check the printed
    component formulas.
    """
    from .exactcore import permutation
    from .tops import inertia_J_eta

    S = spin_matrix(prefix)
    J = inertia_J_eta(S, eta)
    P = permutation()
    op = kron(J, eye(2)) @ kron(eye(2), S)
    rhs = op @ P - P @ op
    n = spin_names(prefix)
    table = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    a, b = f"{prefix}{i + 1}{j + 1}", f"{prefix}{k + 1}{l + 1}"
                    if a < b:
                        table[(a, b)] = rhs[2 * i + k, 2 * j + l]
    return BracketTable(n, table)


def sklyanin_table(prefix="R"):
    """Quadratic algebra of the eta-independent top with extra generator ``{prefix}0``.

    sl_2 brackets equal the linear ones times the scalar generator; brackets
    with the scalar generator reproduce the non-relativistic top flow.
    """
    s0 = var(f"{prefix}0")
    s11, s12, s21, s22 = (var(n) for n in spin_names(prefix))
    n = spin_names(prefix)
    z = f"{prefix}0"
    lin = lie_poisson_table(prefix)
    table = {(a, b): s0 * v for a, b, v in lin.pairs() if a < b}
    d = s11 - s22
    table.update({
        (z, n[0]): -s12 * d,
        (z, n[3]): s12 * d,
        (z, n[1]): 2 * s12**2,
        (z, n[2]): -2 * s12 * s21 + d**2,
    })
    return BracketTable([z] + n, table)


def canonical_table(pairs, scale=1):
    """Canonical brackets {p, q} = 1 for each ``(p, q)`` name pair.

    A pair may also be ``("u", "q", c)`` where u stands for exp(p/c); then
    {u, q} = u/c.  Laurent powers of u and q are handled by the Leibniz rule.
    """
    gens, table = [], {}
    for pair in pairs:
        if len(pair) == 2:
            p, q = pair
            table[(p, q)] = Fraction(1)
        else:
            u, q, c = pair
            table[(u, q)] = var(u) * (1 / Fraction(c))
            p = u
        gens += [p, q]
    return BracketTable(gens, table, scale)


def direct_sum(*tables):
    """Brackets on the union of disjoint generator sets; each summand keeps its own multiplier."""
    gens, entries = [], {}
    for t in tables:
        if set(gens) & set(t.generators):
            raise ValueError("direct summands must have disjoint generators")
        gens += list(t.generators)
        entries.update({(a, b): v for a, b, v in t.pairs() if a < b})
    return BracketTable(gens, entries)


def _gradient(f, gens):
    f = SparsePoly.lift(f)
    known = set(gens)
    unknown = [v for v in f.variables if v not in known]
    if unknown:
        raise KeyError(f"unknown generators {unknown}")
    return {v: f.diff(v) for v in f.variables}


def bracket(f, g, t):
    """Leibniz extension of the generator brackets in ``t``."""
    gf = _gradient(f, t.generators)
    gg = _gradient(g, t.generators)
    out = SparsePoly()
    for a, da in gf.items():
        for b, db in gg.items():
            if a == b:
                continue
            v = t[(a, b)]
            if v:
                out = out + da * db * v
    return out


def bracket_at(f, g, t, point):
    """{f, g} evaluated at ``point`` without expanding the product symbolically."""
    gf = {a: poly_eval(d, point) for a, d in _gradient(f, t.generators).items()}
    gg = {b: poly_eval(d, point) for b, d in _gradient(g, t.generators).items()}
    total = Fraction(0)
    for a, da in gf.items():
        if da == 0:
            continue
        for b, db in gg.items():
            if a == b or db == 0:
                continue
            v = t[(a, b)]
            if v:
                total += da * db * poly_eval(v, point)
    return total


def bracket_matrix(L, M, t):
    """{L_1, M_2} = sum E_ij (x) E_kl {L_ij, M_kl} as a 4x4 matrix."""
    out = np.empty((4, 4), dtype=object)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    out[2 * i + k, 2 * j + l] = bracket(L[i, j], M[k, l], t)
    return out


def _legs(A, B):
    return kron(A, eye(2)), kron(eye(2), B)


def _distinct(z, w, *extra):
    if z == w or z == 0 or w == 0 or any(x == 0 for x in extra):
        raise ZeroDivisionError("spectral parameters hit a pole")


def check_linear(lax, t, z, w, r=classical_r):
    """{L_1(z), L_2(w)} - [L_1(z) + L_2(w), r_12(z - w)]."""
    _distinct(z, w)
    Lz, Lw = lax(z), lax(w)
    L1, L2 = _legs(Lz, Lw)
    rr = r(z - w)
    X = L1 + L2
    return bracket_matrix(Lz, Lw, t) - (X @ rr - rr @ X)


def check_quadratic(lax, t, z, w, r=classical_r):
    """{L_1(z), L_2(w)} - [L_1(z) L_2(w), r_12(z - w)]."""
    _distinct(z, w)
    Lz, Lw = lax(z), lax(w)
    L1, L2 = _legs(Lz, Lw)
    rr = r(z - w)
    X = L1 @ L2
    return bracket_matrix(Lz, Lw, t) - (X @ rr - rr @ X)


def check_reflection(lax, t, z, w, shift=0, r=classical_r):
    """Residual of the classical reflection algebra.

    {L_1(z), L_2(w)} = 1/2 [L_1 L_2, r(z-w)] - 1/2 L_1 r(z+w+shift) L_2
                       + 1/2 L_2 r(z+w+shift) L_1
    """
    _distinct(z, w, z + w + shift, z - w)
    Lz, Lw = lax(z), lax(w)
    L1, L2 = _legs(Lz, Lw)
    rm, rp = r(z - w), r(z + w + shift)
    X = L1 @ L2
    half = Fraction(1, 2)
    rhs = (X @ rm - rm @ X) * half - (L1 @ rp @ L2) * half + (L2 @ rp @ L1) * half
    return bracket_matrix(Lz, Lw, t) - rhs


def jacobi_residual(t):
    """Nonzero cyclic sums {a,{b,c}} + {b,{c,a}} + {c,{a,b}} keyed by generator triple."""
    out = {}
    for a, b, c in itertools.combinations(t.generators, 3):
        va, vb, vc = var(a), var(b), var(c)
        res = (
            bracket(va, bracket(vb, vc, t), t)
            + bracket(vb, bracket(vc, va, t), t)
            + bracket(vc, bracket(va, vb, t), t)
        )
        if not is_zero(res):
            out[(a, b, c)] = res
    return out


def is_casimir(C, t):
    """(True, {}) iff {C, g} = 0 for every generator g; otherwise the nonzero brackets."""
    res = {g: bracket(C, var(g), t) for g in t.generators}
    res = {g: v for g, v in res.items() if not is_zero(v)}
    return not res, res


def hamiltonian_flow(H, t):
    """Time derivatives dg/dt = {H, g} for every generator."""
    return {g: bracket(H, var(g), t) for g in t.generators}
