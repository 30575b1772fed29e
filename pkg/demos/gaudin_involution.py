"""Gaudin Hamiltonians commute.

Three sites are treated symbolically: each spin component is a polynomial
variable and the Poisson brackets are expanded exactly. Five sites are
checked at seeded random rational points instead.
"""
from fractions import Fraction

from elevenvertex import lattice

zs = [Fraction(0), Fraction(1, 2), Fraction(-2)]
data = lattice.symbolic_gaudin(zs)
table = lattice.gaudin_table(3)

h = [lattice.gaudin_h(a, data) for a in (1, 2, 3)]
print("h_1 has", len(h[0].terms), "monomials; h_1 + h_2 + h_3 =", h[0] + h[1] + h[2])
print("nonzero brackets among h_a and h_0:", lattice.involution_exact(data, table) or "none")
print("five random sites, failing pairs:", lattice.involution_random(5, seed=3, points=10) or "none")
print("tail of 1/2 tr L(z)^2 beyond the pole part and 2 h_0:", lattice.gaudin_spectral_tail(data) or "zero")
