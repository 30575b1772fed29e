import math
from fractions import Fraction

import numpy as np
import pytest

from elevenvertex import field, poisson, tops
from elevenvertex.exactcore import (
    RationalSampler,
    commutator,
    is_zero_matrix,
    mat2,
    trace,
    var,
)


@pytest.fixture(scope="module")
def jets():
    rs = RationalSampler(21)
    return [field.random_ll_jet(rs, k=Fraction(3, 2)) for _ in range(50)]


def test_jets_respect_constraint(jets):
    for j in jets:
        S2 = j.S @ j.S
        assert is_zero_matrix(S2 - np.diag([j.lam**2, j.lam**2]).astype(object))
        # derivative of S^2 vanishes
        assert is_zero_matrix(j.S @ j.Sx + j.Sx @ j.S)


def test_ll_zero_curvature_on_jets(jets):
    z = var("z")
    for j in jets:
        assert is_zero_matrix(field.ll_jet_residual(z, j))
        assert is_zero_matrix(commutator(j.S, field.ll_h(j)) + j.Sx * j.k)


def test_chiral_zero_curvature_and_xxx(jets):
    for j1, j2 in zip(jets[:10:2], jets[1:10:2]):
        for z in (Fraction(9, 7), Fraction(-4, 3)):
            assert is_zero_matrix(field.chiral_jet_residual(z, j1, j2, Fraction(2), Fraction(1), Fraction(-1, 2)))
        for r in field.chiral_xxx_residual(j1, j2, Fraction(2), Fraction(1), Fraction(3)):
            assert is_zero_matrix(r)
        # unit coefficient of [S^-, S^+] when z1 - z2 = -2
        for r in field.chiral_xxx_residual(j1, j2, Fraction(2), Fraction(0), Fraction(2)):
            assert is_zero_matrix(r)


def test_light_cone_identity():
    S1 = poisson.spin_matrix("S")
    d = var("d")
    S2 = tops.lax_nonrel(d, S1) * Fraction(-1, 2)
    lhs = tops.lax_nonrel(d, S2)
    rhs = (S1 * d**-2 + tops.inertia_J(S1) * 2) * Fraction(-1, 2)
    assert is_zero_matrix(lhs - rhs)
    assert is_zero_matrix(field.light_cone_residual(S1, d))


def test_chiral_rhs_hand_value():
    x = np.zeros(8)
    S1 = mat2(x + 1, x, x, x - 1)
    S2 = mat2(x, x, x + 1, x)
    d1, d2 = field.chiral_rhs(S1, S2, 1.0, 1.0, 1.0, 0.0)
    # L(1, E21) = E21 and [diag(1, -1), E21] = -2 E21
    assert np.allclose(d1[:, 1, 0], 4.0)
    assert np.allclose(d1[:, 0, 0], 0.0)
    with pytest.raises(ZeroDivisionError):
        field.chiral_rhs(S1, S2, 1.0, 1.0, 1.0, 1.0)


def test_ll_complex_run_conserves():
    lam = 1j
    x, S = field.ll_initial(64, lam)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, lam)
    mon = {
        "cas": lambda s: float(np.abs(trace(s @ s) - 2 * lam * lam).max()),
        "E": lambda s: field.ll_energy(s, dx, alpha),
    }
    _, series = field.pde_run(S, lambda s: field.ll_rhs(s, dx, alpha), 2e-3, 200, mon)
    assert series["cas"].max() < 1e-10
    E = series["E"]
    assert np.abs(E - E[0]).max() / abs(E[0]) < 1e-9


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_ll_real_lambda_is_unstable():
    x, S = field.ll_initial(128, 1.0)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, 1.0)
    with pytest.raises(FloatingPointError, match="last stable step"):
        field.pde_run(S, lambda s: field.ll_rhs(s, dx, alpha), 1e-3, 400)


def test_zs_residual_decreases_with_grid():
    res = []
    for N in (32, 64):
        x, S = field.ll_initial(N, 1j)
        dx = x[1] - x[0]
        alpha = field.ll_alpha(1.0, 1j)
        snaps, _ = field.pde_run(S, lambda s: field.ll_rhs(s, dx, alpha), 1e-4, 4)
        res.append(field.zs_residual(0.7, list(snaps), 1e-4, dx, 1.0, 1j))
    assert res[1] < res[0] / 3


def test_chiral_integrals_conserved():
    N = 64
    x = np.arange(N) * (2 * math.pi / N)
    dx = x[1] - x[0]
    S1 = mat2(0.3 * np.sin(x), -(0.1 + 0.03 * np.cos(x)), 0.5 + 0.1 * np.cos(2 * x), -0.3 * np.sin(x))
    S2 = mat2(0.2 * np.cos(x), -(0.1 + 0.02 * np.sin(x)), 0.4 * np.sin(x), -0.2 * np.cos(x))
    mon = {f"I{a}": (lambda s, a=a: float(np.sum(trace(s[a] @ s[a])) * dx)) for a in (0, 1)}
    rhs = lambda s: np.array(field.chiral_rhs(s[0], s[1], dx, 1.0, 1.0, 0.0))  # noqa: E731
    _, series = field.pde_run(np.array([S1, S2]), rhs, 1e-3, 300, mon, guard=0.5 * dx)
    for v in series.values():
        assert np.abs(v - v[0]).max() / abs(v[0]) < 1e-10


def test_pde_guard():
    with pytest.raises(ValueError):
        field.pde_run(np.zeros((4, 2, 2)), lambda s: s, 1.0, 1, guard=0.1)


def test_gaudin1p1_single_field_is_ll():
    x, S = field.ll_initial(32, 1j)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, 1j)
    a = field.gaudin1p1_rhs([S], [0.0], dx, alpha)[0]
    b = field.ll_rhs(S, dx, alpha)
    assert np.array_equal(a, b)


def test_gaudin1p1_constant_fields_exact():
    rs = RationalSampler(1)
    zs = [Fraction(0), Fraction(3, 2), Fraction(-2)]
    spins = [mat2(*[rs.rational() for _ in range(4)]) for _ in range(3)]
    fields = [np.array([s] * 4, dtype=object) for s in spins]
    for a in (1, 2, 3):
        out = field.gaudin1p1_rhs(fields, zs, Fraction(1, 2), Fraction(1, 8), a)
        ref = field.coupled_top_rhs(spins, zs, a)
        for o, r in zip(out, ref):
            assert all(is_zero_matrix(o[j] - r) for j in range(4))
