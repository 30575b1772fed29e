"""Exact rationals, sparse Laurent polynomials and small matrix/tensor algebra.

All algebraic identity checks in the package run on :class:`fractions.Fraction`
coefficients and :class:`SparsePoly` entries stored in numpy ``object`` arrays,
so matrix products, Kronecker products and traces are exact.  Float arrays are
used only by the integrators.
"""
from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational

import numpy as np

ExactScalar = Fraction

__all__ = [
    "ExactScalar",
    "SparsePoly",
    "LaurentBi",
    "var",
    "const",
    "is_zero",
    "poly_eval",
    "mat2",
    "eye",
    "zeros",
    "elementary",
    "permutation",
    "kron",
    "partial_trace_2",
    "embed",
    "commutator",
    "trace",
    "det2",
    "is_zero_matrix",
    "mat_eval",
    "mat_coeff",
    "RationalSampler",
]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


class SparsePoly:
    """Multivariate Laurent polynomial with exact rational coefficients.

    Terms are stored as ``{monomial: Fraction}`` where a monomial is a sorted
    tuple of ``(name, exponent)`` pairs with nonzero (possibly negative)
    exponents.  Zero coefficients are never stored, so two polynomials are
    equal iff their term dictionaries are equal.

    >>> x, y = var("x"), var("y")
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _frac(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    # -- construction helpers -------------------------------------------
    @staticmethod
    def lift(x):
        if isinstance(x, SparsePoly):
            return x
        c = _frac(x)
        return SparsePoly._raw({(): c} if c else {})

    @property
    def variables(self):
        """Sorted names of the generators that occur."""
        return tuple(sorted({v for mono in self.terms for v, _ in mono}))

    def degree(self, name=None):
        """Total degree, or the top exponent of ``name``; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e for _, e in mono) for mono in self.terms)
        return max(dict(mono).get(name, 0) for mono in self.terms)

    def min_degree(self, name):
        if not self.terms:
            return 0
        return min(dict(mono).get(name, 0) for mono in self.terms)

    def is_constant(self):
        return all(mono == () for mono in self.terms)

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, np.ndarray):
                return NotImplemented
            try:
                other = SparsePoly.lift(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        try:
            return self + (-SparsePoly.lift(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, np.ndarray):
                return NotImplemented
            try:
                c = _frac(other)
            except TypeError:
                return NotImplemented
            if not c:
                return SparsePoly._raw({})
            return SparsePoly._raw({m: v * c for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SparsePoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SparsePoly):
            if len(other.terms) != 1:
                raise ZeroDivisionError("division only by nonzero monomials")
            return self * other ** -1
        c = _frac(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return SparsePoly._raw({m: v / c for m, v in self.terms.items()})

    def __rtruediv__(self, other):
        return SparsePoly.lift(other) * self ** -1

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer exponents only")
        if n < 0:
            if len(self.terms) != 1:
                raise ZeroDivisionError("only monomials are invertible")
            ((mono, c),) = self.terms.items()
            return SparsePoly._raw(
                {tuple((v, e * n) for v, e in mono): Fraction(1) / c ** -n}
            )
        result = SparsePoly._raw({(): Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        try:
            other = SparsePoly.lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / substitution ----------------------------------------
    def diff(self, name):
        """Partial derivative with respect to the generator ``name``."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(name, 0)
            if not e:
                continue
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            m = tuple(sorted(d.items()))
            out[m] = out.get(m, 0) + c * e
        return SparsePoly(out)

    def coeff(self, name, k):
        """Coefficient of ``name**k`` as a polynomial in the remaining generators."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.get(name, 0) != k:
                continue
            d.pop(name, None)
            out[tuple(sorted(d.items()))] = c
        return SparsePoly._raw(out)

    def subs(self, values):
        """Substitute some generators by scalars or polynomials.

        Negative powers require the substituted value to be invertible
        (a nonzero scalar or a monomial).
        """
        out = SparsePoly._raw({})
        cache = {}
        for mono, c in self.terms.items():
            term = SparsePoly._raw({(): c})
            keep = []
            for v, e in mono:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = SparsePoly.lift(values[v]) ** e
                    term = term * cache[key]
                else:
                    keep.append((v, e))
            if keep:
                term = term * SparsePoly._raw({tuple(keep): Fraction(1)})
            out = out + term
        return out

    def __call__(self, point):
        return poly_eval(self, point)

    # -- display ---------------------------------------------------------
    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[mono]
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


# Laurent data in the spectral and deformation parameters uses the same
# representation with negative exponents allowed.
LaurentBi = SparsePoly


def var(name):
    return SparsePoly._raw({((name, 1),): Fraction(1)})


def const(x):
    return SparsePoly.lift(x)


def is_zero(x):
    if isinstance(x, SparsePoly):
        return not x.terms
    return x == 0


def poly_eval(p, point):
    """Evaluate ``p`` at ``point`` (a mapping generator -> value).

    Every generator of ``p`` must be assigned; with Fraction values the
    result is exact.
    """
    if not isinstance(p, SparsePoly):
        return p
    missing = [v for v in p.variables if v not in point]
    if missing:
        raise KeyError(f"unassigned generators: {missing}")
    total = 0
    for mono, c in p.terms.items():
        term = c
        for v, e in mono:
            term = term * point[v] ** e
        total = total + term
    return total if p.terms else Fraction(0)


# -- 2x2 / 4x4 / 8x8 matrices ------------------------------------------

def _is_array(x):
    return isinstance(x, np.ndarray) and x.ndim > 0


def mat2(a, b, c, d):
    """Build a 2x2 matrix; stacked (N,) inputs give an (N, 2, 2) float or complex array."""
    if any(_is_array(x) for x in (a, b, c, d)):
        arrs = [np.asarray(x) for x in (a, b, c, d)]
        dt = np.result_type(*arrs, float)
        a, b, c, d = np.broadcast_arrays(*(x.astype(dt) for x in arrs))
        return np.stack([np.stack([a, b], -1), np.stack([c, d], -1)], -2)
    entries = (a, b, c, d)
    if all(isinstance(x, (float, np.floating)) for x in entries):
        return np.array([[a, b], [c, d]], dtype=float)
    if any(isinstance(x, (float, np.floating)) for x in entries) and not any(
        isinstance(x, SparsePoly) for x in entries
    ):
        return np.array([[float(a), float(b)], [float(c), float(d)]])
    out = np.empty((2, 2), dtype=object)
    out[0, 0], out[0, 1], out[1, 0], out[1, 1] = entries
    return out


def eye(n, exact=True):
    if not exact:
        return np.eye(n)
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = Fraction(int(i == j))
    return out


def zeros(n, exact=True):
    if not exact:
        return np.zeros((n, n))
    out = np.empty((n, n), dtype=object)
    out[...] = Fraction(0)
    return out


def elementary(i, j, n=2):
    """E_ij with 1-based indices."""
    out = zeros(n)
    out[i - 1, j - 1] = Fraction(1)
    return out


def permutation():
    """The two-site permutation operator sum_ij E_ij (x) E_ji."""
    out = zeros(4)
    for i in range(2):
        for j in range(2):
            out[2 * i + j, 2 * j + i] = Fraction(1)
    return out


def _role(x):
    if isinstance(x, SparsePoly):
        return "poly"
    if isinstance(x, Fraction) or isinstance(x, int):
        return "exact"
    return "float"


def _roles(a):
    return {_role(x) for x in np.asarray(a, dtype=object).ravel()}


def kron(a, b):
    """Tensor product with leg order (1, 2); row index of E_ij (x) E_kl is 2(i-1)+(k-1)."""
    if a.dtype == object or b.dtype == object:
        ra, rb = _roles(a), _roles(b)
        if ("float" in ra) != ("float" in rb) and (ra | rb) - {"float"}:
            raise TypeError("scalar role mismatch between tensor factors")
        a = np.asarray(a, dtype=object)
        b = np.asarray(b, dtype=object)
    return np.kron(a, b)


def partial_trace_2(t):
    """Trace out the second leg of a two-site operator."""
    t = np.asarray(t)
    if t.shape[-2:] != (4, 4):
        raise ValueError(f"expected a 4x4 two-site operator, got {t.shape}")
    blocks = t.reshape(t.shape[:-2] + (2, 2, 2, 2))
    return blocks[..., :, 0, :, 0] + blocks[..., :, 1, :, 1]


def embed(t, legs):
    """Embed a two-site operator into three sites on ``legs`` in {12, 13, 23}."""
    t = np.asarray(t)
    if t.shape != (4, 4):
        raise ValueError("expected a 4x4 two-site operator")
    legs = str(legs)
    if legs not in ("12", "13", "23"):
        raise ValueError(f"invalid leg pair {legs!r}")
    exact = t.dtype == object
    out = zeros(8, exact)
    t4 = t.reshape(2, 2, 2, 2)  # (i, k, j, l)
    for i in range(2):
        for k in range(2):
            for j in range(2):
                for l in range(2):
                    v = t4[i, k, j, l]
                    if is_zero(v):
                        continue
                    for m in range(2):
                        if legs == "12":
                            r, c = (i, k, m), (j, l, m)
                        elif legs == "13":
                            r, c = (i, m, k), (j, m, l)
                        else:
                            r, c = (m, i, k), (m, j, l)
                        out[4 * r[0] + 2 * r[1] + r[2], 4 * c[0] + 2 * c[1] + c[2]] = v
    return out


def commutator(a, b):
    return a @ b - b @ a


def trace(a):
    a = np.asarray(a)
    n = a.shape[-1]
    out = a[..., 0, 0]
    for i in range(1, n):
        out = out + a[..., i, i]
    return out


def det2(a):
    return a[..., 0, 0] * a[..., 1, 1] - a[..., 0, 1] * a[..., 1, 0]


def is_zero_matrix(a):
    return all(is_zero(x) for x in np.asarray(a, dtype=object).ravel())


def mat_eval(a, point):
    """Evaluate every entry of a polynomial matrix at ``point``."""
    a = np.asarray(a, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = poly_eval(x, point) if isinstance(x, SparsePoly) else x
    return out


def mat_coeff(a, name, k):
    """Entrywise coefficient of ``name**k``."""
    a = np.asarray(a, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        if isinstance(x, SparsePoly):
            out[idx] = x.coeff(name, k)
        else:
            out[idx] = x if k == 0 else Fraction(0)
    return out


class RationalSampler:
    """Seeded random rationals p/q with p in [-9, 9] \\ {0} and q in [1, 9].

    ``sample_spectral`` resamples until none of the supplied linear forms
    vanish, which keeps evaluation points off the poles of every formula.
    """

    def __init__(self, seed=0):
        self.rng = random.Random(seed)

    def rational(self):
        p = 0
        while p == 0:
            p = self.rng.randint(-9, 9)
        return Fraction(p, self.rng.randint(1, 9))

    def point(self, names):
        return {n: self.rational() for n in names}

    def sample_spectral(self, names, avoid=()):
        """Draw values for ``names`` such that every callable in ``avoid`` is nonzero."""
        while True:
            pt = self.point(names)
            if all(f(pt) != 0 for f in avoid):
                return pt
