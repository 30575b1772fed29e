from fractions import Fraction

import pytest

from elevenvertex import rmatrix
from elevenvertex.exactcore import (
    RationalSampler,
    eye,
    is_zero_matrix,
    permutation,
    var,
)

z, h = var("z"), var("hbar")


def test_quantum_R_hand_values():
    # entries at hbar = z = 1, written out from the defining formula
    R = rmatrix.quantum_R(Fraction(1), Fraction(1))
    expected = [[2, 0, 0, 0], [-2, 1, 1, 0], [-2, 1, 1, 0], [-6, 2, 2, 2]]
    assert [[R[i, j] for j in range(4)] for i in range(4)] == expected


def test_classical_r_hand_values():
    r = rmatrix.classical_r(Fraction(2))
    assert r[0, 0] == Fraction(1, 2)
    assert r[3, 0] == -8
    assert r[1, 0] == -2 and r[3, 1] == 2


def test_poles_raise():
    with pytest.raises(ZeroDivisionError):
        rmatrix.classical_r(0)
    with pytest.raises(ZeroDivisionError):
        rmatrix.quantum_R(0, Fraction(1))


def test_cybe_twenty_points():
    rs = RationalSampler(11)
    for _ in range(20):
        p = rs.sample_spectral(["z", "w"], avoid=[lambda q: q["z"], lambda q: q["w"], lambda q: q["z"] - q["w"]])
        assert is_zero_matrix(rmatrix.cybe_residual(p["z"], p["w"]))


def test_shifted_symbolic_argument_is_refused():
    # z - w is not a monomial, so spectral differences must be sampled
    with pytest.raises(ZeroDivisionError):
        rmatrix.cybe_residual(z, var("w"))


def test_quantum_ybe_at_points():
    rs = RationalSampler(3)
    for _ in range(4):
        p = rs.sample_spectral(["z", "w", "h"], avoid=[lambda q: q["z"], lambda q: q["w"], lambda q: q["z"] - q["w"]])
        assert is_zero_matrix(rmatrix.quantum_ybe_residual(p["h"], p["z"], p["w"]))


def test_classical_limit_and_skew():
    assert is_zero_matrix(rmatrix.classical_limit(z) - rmatrix.classical_r(z))
    assert is_zero_matrix(rmatrix.classical_r(z) + rmatrix.swap_legs(rmatrix.classical_r(-z)))


def test_residues():
    P = permutation()
    assert is_zero_matrix(rmatrix.series_coeff_r(-1) - P)
    assert is_zero_matrix(rmatrix.series_coeff_R(h, -1) - P)
    assert is_zero_matrix(rmatrix.series_coeff_r(0))


def test_xxx_limits():
    assert is_zero_matrix(rmatrix.deformed_r(z, 0) - rmatrix.xxx_r(z))
    assert is_zero_matrix(rmatrix.deformed_R(h, z, 0) - rmatrix.xxx_R(h, z))
    assert is_zero_matrix(rmatrix.xxx_R(h, z) - (eye(4) * h**-1 + permutation() * z**-1))


def test_unit_deformation_is_identity():
    assert is_zero_matrix(rmatrix.deformed_r(z, 1) - rmatrix.classical_r(z))
