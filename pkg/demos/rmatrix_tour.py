"""A short tour of the 11-vertex R-matrix and its classical limit.

Everything here is exact: entries are rational, and identities are checked by
expanding them to zero rather than comparing floats.
"""
from fractions import Fraction

from elevenvertex import rmatrix
from elevenvertex.exactcore import RationalSampler, is_zero_matrix

z, hbar = Fraction(1), Fraction(1)
print("R(z=1, hbar=1) =")
for row in rmatrix.quantum_R(hbar, z):
    print("  ", " ".join(f"{str(v):>4}" for v in row))

# the quantum Yang-Baxter equation at a few random rational points
rs = RationalSampler(0)
for _ in range(3):
    p = rs.sample_spectral(["z", "w", "h"], avoid=[lambda q: q["z"], lambda q: q["w"], lambda q: q["z"] - q["w"]])
    res = rmatrix.quantum_ybe_residual(p["h"], p["z"], p["w"])
    print(f"QYBE at z={p['z']}, w={p['w']}, hbar={p['h']}: zero residual = {is_zero_matrix(res)}")

# the classical r-matrix solves the classical Yang-Baxter equation
p = rs.sample_spectral(["z", "w"], avoid=[lambda q: q["z"], lambda q: q["w"], lambda q: q["z"] - q["w"]])
print("CYBE residual vanishes:", is_zero_matrix(rmatrix.cybe_residual(p["z"], p["w"])))
