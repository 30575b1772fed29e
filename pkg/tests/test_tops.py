from fractions import Fraction

import numpy as np
import pytest

from elevenvertex import poisson, rmatrix, tops
from elevenvertex.exactcore import (
    RationalSampler,
    det2,
    eye,
    is_zero_matrix,
    kron,
    mat2,
    mat_coeff,
    partial_trace_2,
    trace,
    var,
)

S = poisson.spin_matrix("S")
R = poisson.spin_matrix("R")
R0 = var("R0")
z, e = var("z"), var("eta")


def test_lax_matches_r_matrix():
    assert is_zero_matrix(tops.lax_from_r(z, S) - tops.lax_nonrel(z, S))
    for eta in (Fraction(1), Fraction(-2, 3)):
        assert is_zero_matrix(tops.lax_eta_from_R(z, S, eta) - tops.lax_eta(z, S, eta))


def test_lax_hand_value():
    L = tops.lax_nonrel(Fraction(1), mat2(*map(Fraction, (1, 2, 3, 4))))
    # S/z plus the z-dependent part built from S12 and S11 - S22
    assert L[0, 1] == 2
    assert L[0, 0] == 1 - 2 and L[1, 1] == 4 + 2


def test_eta_expansion_coefficients():
    Le = tops.lax_eta(z, S, e)
    assert is_zero_matrix(mat_coeff(Le, "eta", -1) - eye(2) * trace(S))
    assert is_zero_matrix(mat_coeff(Le, "eta", 0) - tops.lax_nonrel(z, S))
    assert is_zero_matrix(mat_coeff(Le, "eta", 1) - tops.m_cal(z, S))


def test_inertia_from_series():
    assert is_zero_matrix(tops.m_cal(0, S) - tops.inertia_J(S))
    for eta in (Fraction(1), Fraction(1, 2), Fraction(-3)):
        R0c = rmatrix.series_coeff_R(eta, 0) - rmatrix.series_coeff_r(0)
        assert is_zero_matrix(partial_trace_2(R0c @ kron(eye(2), S)) - tops.inertia_J_eta(S, eta))


def test_change_of_variables():
    rs = RationalSampler(9)
    for _ in range(10):
        p = rs.sample_spectral(["z", "eta"], avoid=[lambda q: q["z"], lambda q: q["z"] - q["eta"] / 2])
        assert is_zero_matrix(tops.change_vars_residual(p["z"], p["eta"], R0, R))


def test_component_map_round_trip():
    Rt = R - eye(2) * (trace(R) * Fraction(1, 2))
    for eta in (Fraction(1), Fraction(2, 5), Fraction(-3)):
        s0, st = tops.tilde_from_eta(eta, tops.change_vars(eta, R0, Rt))
        assert s0 == R0
        assert is_zero_matrix(st - Rt)


def test_series_identities():
    assert is_zero_matrix(tops.l_of_l_residual(z, S))
    assert is_zero_matrix(tops.m_tilde_alt_residual(z, R0, R))


def test_tilde_determinant():
    c2, c0 = tops.casimirs_tilde(R0, R)
    assert is_zero_matrix(np.array([det2(tops.lax_tilde(z, R0, R)) - c2 * z**-2 - c0], dtype=object))


def test_eta_flow_from_trace():
    for eta in (Fraction(1), Fraction(-3)):
        T = poisson.spin_matrix("T")
        flow = poisson.hamiltonian_flow(trace(T), poisson.eta_table(eta, "T"))
        rhs = tops.eta_top_rhs(T, eta)
        assert all(flow[f"T{i + 1}{j + 1}"] == rhs[i, j] for i in range(2) for j in range(2))


def test_rk4_conserves_and_lax_form():
    S0 = np.array([[0.3, -0.4], [0.7, 0.5]])
    mon = {"C2": lambda s: 0.5 * trace(s @ s), "H": tops.hamiltonian_top}
    traj, drift = tops.flow_run(S0, tops.top_rhs, 1e-3, 1000, mon)
    assert drift["C2"].max() < 1e-10
    assert drift["H"].max() < 1e-10
    res = tops.lax_residual_series(traj, 1e-3, lambda s: tops.lax_nonrel(0.8, s), lambda s: tops.m_cal(0.8, s))
    assert res < 1e-8


def test_rk4_order():
    S0 = np.array([[0.3, -0.4], [0.7, 0.5]])
    ref, _ = tops.flow_run(S0, tops.top_rhs, 1e-4, 5000)
    errs = []
    for dt in (0.02, 0.01):
        tr, _ = tops.flow_run(S0, tops.top_rhs, dt, int(round(0.5 / dt)))
        errs.append(np.abs(tr[-1] - ref[-1]).max())
    assert np.log2(errs[0] / errs[1]) > 3.5


def test_eta_top_run():
    S0 = np.array([[0.3, -0.4], [0.7, 0.5]])
    eta = 0.6
    mon = {"C1": lambda s: tops.casimirs_eta(s, eta)[0], "C2": lambda s: tops.casimirs_eta(s, eta)[1]}
    traj, drift = tops.flow_run(S0, lambda s: tops.eta_top_rhs(s, eta), 1e-3, 500, mon)
    assert max(d.max() for d in drift.values()) < 1e-10
    res = tops.lax_residual_series(traj, 1e-3, lambda s: tops.lax_eta(0.8, s, eta), lambda s: tops.m_eta(0.8, s))
    assert res < 1e-8


def test_bad_inputs():
    with pytest.raises(ValueError):
        tops.flow_run(np.eye(2), tops.top_rhs, 0.0, 10)
    with pytest.raises(ZeroDivisionError):
        tops.change_vars(0, R0, R)
