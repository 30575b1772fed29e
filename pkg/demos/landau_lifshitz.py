"""The Landau-Lifshitz field with an anisotropic inertia tensor.

With real lambda the method-of-lines system has growing short-wave modes and
blows up within a few hundred steps; the integrator stops and names the last
stable step. With lambda = 1j the flow is dispersive and the constraint and
the energy are conserved to roundoff.
"""
import warnings

import numpy as np

from elevenvertex import field
from elevenvertex.exactcore import trace

warnings.simplefilter("ignore", RuntimeWarning)

for lam in (1.0, 1j):
    x, S = field.ll_initial(128, lam)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, lam)
    mon = {
        "constraint": lambda s, lam=lam: float(np.abs(trace(s @ s) - 2 * lam * lam).max()),
        "energy": lambda s, dx=dx, alpha=alpha: field.ll_energy(s, dx, alpha),
    }
    try:
        _, series = field.pde_run(S, lambda s, dx=dx, alpha=alpha: field.ll_rhs(s, dx, alpha), 1e-3, 1000, mon)
    except FloatingPointError as exc:
        print(f"lambda={lam}: {exc}")
        continue
    E = series["energy"]
    print(f"lambda={lam}: constraint error {series['constraint'].max():.1e}, "
          f"relative energy drift {np.abs(E - E[0]).max() / abs(E[0]):.1e}")
