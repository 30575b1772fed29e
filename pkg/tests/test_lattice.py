from fractions import Fraction

import numpy as np
import pytest

from elevenvertex import lattice, manybody, poisson, tops
from elevenvertex.exactcore import (
    SparsePoly,
    det2,
    eye,
    is_zero_matrix,
    mat2,
    trace,
    var,
)

ZS = [Fraction(0), Fraction(1, 2), Fraction(-2)]


@pytest.fixture(scope="module")
def gaudin3():
    return lattice.symbolic_gaudin(ZS), lattice.gaudin_table(3)


def test_gaudin_data_validation():
    with pytest.raises(ValueError):
        lattice.GaudinData([0, 0], [np.eye(2), np.eye(2)])
    with pytest.raises(ValueError):
        lattice.GaudinData([0, 1], [np.eye(2)])


def test_hamiltonians_sum_and_antisymmetry(gaudin3):
    d, _ = gaudin3
    assert sum((lattice.gaudin_h(a, d) for a in range(1, 4)), SparsePoly()) == 0
    for a in range(1, 4):
        for c in range(1, 4):
            if a != c:
                assert lattice.gaudin_hac(a, c, d) == -lattice.gaudin_hac(c, a, d)
    assert lattice.gaudin_h0(d) == lattice.gaudin_h0(d, "explicit")


def test_involution_exact(gaudin3):
    d, tab = gaudin3
    assert lattice.involution_exact(d, tab) == {}


def test_involution_random_five_sites():
    assert lattice.involution_random(5, seed=1, points=20) == []


def test_spectral_expansion_is_exact(gaudin3):
    d, _ = gaudin3
    assert lattice.gaudin_spectral_tail(d) == []


def test_flows_match_engine(gaudin3):
    d, tab = gaudin3
    for k in range(4):
        H = lattice.gaudin_h0(d) if k == 0 else lattice.gaudin_h(k, d)
        for x, y in zip(lattice.engine_flow(H, d, tab), lattice.gaudin_flow(k, d)):
            assert is_zero_matrix(x - y)


def test_lax_form(gaudin3):
    d, _ = gaudin3
    z = Fraction(7, 3)
    L = lattice.gaudin_lax(z, d)
    for k in range(4):
        f = lattice.gaudin_flow(k, d)
        dL = sum((tops.lax_nonrel(z - za, x) for za, x in zip(d.zs, f)), np.zeros((2, 2), dtype=object))
        M = lattice.gaudin_M(k, z, d)
        assert is_zero_matrix(dL - (L @ M - M @ L))
    total = sum((lattice.gaudin_M(a, z, d) for a in range(1, 4)), np.zeros((2, 2), dtype=object))
    assert is_zero_matrix(total - L)


def test_gaudin_lax_linear_structure(gaudin3):
    d, tab = gaudin3
    res = poisson.check_linear(lambda x: lattice.gaudin_lax(x, d), tab, Fraction(3), Fraction(5, 7))
    assert is_zero_matrix(res)
    with pytest.raises(ZeroDivisionError):
        lattice.gaudin_lax(Fraction(1, 2), d)


def _cm_gaudin():
    ps = [var(f"p{a}") for a in range(3)]
    qs = [var(f"q{a}") for a in range(3)]
    nus = [Fraction(3), Fraction(-1, 2), Fraction(5)]
    spins = [manybody.cm_map(a, b, c) for a, b, c in zip(ps, qs, nus)]
    return ps, qs, nus, lattice.GaudinData(ZS, spins)


def test_canonical_forms_derived():
    ps, qs, nus, cd = _cm_gaudin()
    S = cd.spins
    assert trace(S[0] @ S[1]) == lattice.canonical_trace_cm(ps[0], qs[0], nus[0], ps[1], qs[1], nus[1])
    for a in range(1, 4):
        assert lattice.gaudin_h(a, cd) == lattice.canonical_gaudin_h(a, ps, qs, nus, ZS, printed=False)
    assert lattice.gaudin_h0(cd) == lattice.canonical_gaudin_h0(ps, qs, nus, ZS, printed=False)


def test_canonical_forms_as_printed_differ():
    ps, qs, nus, cd = _cm_gaudin()
    assert lattice.gaudin_h(1, cd) != lattice.canonical_gaudin_h(1, ps, qs, nus, ZS)
    assert lattice.gaudin_h0(cd) != lattice.canonical_gaudin_h0(ps, qs, nus, ZS)


def test_canonical_trace_rs():
    Sa = manybody.rs_map_exact(Fraction(2), "ua", "qa")
    Sb = manybody.rs_map_exact(Fraction(1, 3), "ub", "qb")
    ref = lattice.canonical_trace_rs(var("ua"), var("qa"), Fraction(2), var("ub"), var("qb"), Fraction(1, 3))
    assert trace(Sa @ Sb) == ref


def test_t0_factorization():
    for n in (2, 3):
        sites = lattice.symbolic_chain(ZS[:n], desc="eta", etas=[1, Fraction(1, 2), -3][:n], prefix="T")
        z = Fraction(7, 5)
        assert is_zero_matrix(lattice.transfer_T0_tensor(z, sites) - lattice.transfer_T(z, sites, "eta"))
        assert is_zero_matrix(lattice.transfer_T0_tensor(z, sites, "r") - lattice.transfer_T(z, sites, "nonrel"))


def test_single_site_transfer_is_lax():
    sites = lattice.symbolic_chain([Fraction(1, 3)], desc="tilde")
    z = Fraction(5, 2)
    s = sites[0]
    assert is_zero_matrix(lattice.transfer_T(z, sites, "tilde") - tops.lax_tilde(z - s.z, s.s0, s.spin))


def test_transfer_commutativity_two_sites():
    zs = [Fraction(0), Fraction(1, 3)]
    sites = lattice.symbolic_chain(zs)
    bad = lattice.trace_commutativity_random(lambda z: lattice.transfer_T(z, sites, "tilde"),
                                             lattice.chain_table(2), seed=4, points=20, avoid=zs)
    assert bad == []


def test_boundary_constraint():
    R, R0 = poisson.spin_matrix("R"), var("R0")
    assert is_zero_matrix(lattice.boundary_constraint_residual(var("z"), R0, R))


def test_double_row_trace_is_not_involutive():
    # recorded behaviour of the double-row construction as written
    bs, bp, bm = lattice.symbolic_chain([Fraction(1, 2)], boundaries=True)
    bad = lattice.trace_commutativity_random(lambda z: lattice.double_row_T(z, bs, bp, bm),
                                             lattice.chain_table(1, boundaries=True), seed=2, points=3,
                                             avoid=[Fraction(1, 2)])
    assert len(bad) == 3


def test_local_point():
    site = lattice.Site(Fraction(0), eye(2), Fraction(1))
    assert lattice.local_point([site, site]) == (Fraction(-1, 2), Fraction(-1, 2))
    S = mat2(Fraction(2), Fraction(1), Fraction(0), Fraction(3))
    site = lattice.Site(Fraction(0), S, Fraction(1))
    for r in lattice.local_point([site, site]):
        if isinstance(r, Fraction):
            assert det2(tops.lax_eta(r, S, Fraction(1))) == 0
    out = lattice.local_eval([site, site])
    assert set(out) == {"z0", "T", "trace"}


def test_local_point_rejects_mixed_sites():
    a = lattice.Site(Fraction(0), eye(2), Fraction(1))
    b = lattice.Site(Fraction(0), eye(2) * 2, Fraction(1))
    with pytest.raises(ValueError):
        lattice.local_point([a, b])
