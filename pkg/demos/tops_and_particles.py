"""Euler tops and the two-body particle systems hiding inside them.

The rank-one spin matrix built from a Calogero-Moser pair (p, q) turns the
top flow into the particle flow. The same holds for Ruijsenaars-Schneider
and the relativistic top, up to a constant time rescaling -1/(c eta).
"""
import numpy as np

from elevenvertex import manybody, tops
from elevenvertex.exactcore import trace

nu, q0, p0 = 0.9, 1.3, 0.7
dt, steps = 1e-3, 1000

S0 = manybody.cm_map(p0, q0, nu)
print("initial spin matrix from (p, q):\n", S0, "\ndet =", np.linalg.det(S0))

mon = {"C2": lambda s: 0.5 * trace(s @ s), "H": tops.hamiltonian_top}
traj, drift = tops.flow_run(S0, tops.top_rhs, dt, steps, mon)
print(f"top flow: Casimir drift {drift['C2'].max():.1e}, energy drift {drift['H'].max():.1e}")

res = tops.lax_residual_series(traj, dt, lambda s: tops.lax_nonrel(0.8, s), lambda s: tops.m_cal(0.8, s))
print(f"Lax equation residual along the trajectory: {res:.1e}")

cm = manybody.canonical_flow(manybody.cm_vector_field(nu), q0, p0, dt, steps)
dev = max(np.abs(manybody.cm_map(r[2], r[1], nu) - s).max() for r, s in zip(cm, traj))
print(f"CM particles vs top: sup deviation {dev:.1e}")

eta, c = 0.6, 2.0
f = float(manybody.rs_flow_factor(eta, c))
rs = manybody.canonical_flow(manybody.rs_vector_field(eta, c), q0, p0, dt, steps)
rtraj, _ = tops.flow_run(manybody.rs_map(p0, q0, eta, c), lambda s: f * tops.eta_top_rhs(s, eta), dt, steps)
dev = max(np.abs(manybody.rs_map(r[2], r[1], eta, c) - s).max() for r, s in zip(rs, rtraj))
print(f"RS particles vs relativistic top (time factor {f:.4f}): sup deviation {dev:.1e}")

print("nonrelativistic limit: H_RS - 2 - 2 H_CM / c^2 decays with slope",
      round(manybody.limit_slope(p0, q0, nu), 3))
