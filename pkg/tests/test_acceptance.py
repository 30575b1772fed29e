"""Acceptance suite.

Each criterion prints one ``PASS``/``FAIL`` line with its runtime and a short
diagnostic. The lines are also collected and echoed in the pytest terminal
summary, and ``python tests/test_acceptance.py`` runs the suite standalone.
"""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from elevenvertex import checks, cli, field, manybody, tops
from elevenvertex.exactcore import RationalSampler, is_zero_matrix, mat2, trace

SEED = 2024
LINES = []


def report(num, title, ok, elapsed, limit, detail=""):
    ok = bool(ok) and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num:2d}: {title} ({elapsed:.2f}s, limit {limit:g}s)"
    if detail:
        line += f"  [{detail}]"
    print(line)
    LINES.append(line)
    return ok


def suite_checks(suite, names=None, prefixes=(), cfg=None):
    conf = dict(checks.DEFAULTS)
    conf.update(cfg or {})
    rep = checks.run_suite(suite, conf, SEED)
    sel = [c for c in rep["checks"]
           if (names and c["name"] in names) or any(c["name"].startswith(p) for p in prefixes)]
    return sel, rep["known_discrepancies"]


def summarize(sel):
    bad = [c["name"] for c in sel if not c["pass"]]
    pts = sum(c["points_tested"] for c in sel)
    return not bad, f"{len(sel)} checks, {pts} points" + (f", failing: {', '.join(bad)}" if bad else "")


def test_criterion_01_cybe():
    t = time.perf_counter()
    sel, _ = suite_checks("rmatrix", names={"cybe"})
    ok = sel and sel[0]["points_tested"] >= 20 and sel[0]["max_residual"] == "0"
    assert report(1, "classical Yang-Baxter equation", ok, time.perf_counter() - t, 1,
                  f"{sel[0]['points_tested']} points, residual {sel[0]['max_residual']}")


def test_criterion_02_limits():
    t = time.perf_counter()
    sel, _ = suite_checks("rmatrix", names={"classical_limit", "eps_limit_r", "eps_limit_R", "skew",
                                            "residue_r", "residue_R", "r0_vanishes"})
    ok, msg = summarize(sel)
    assert report(2, "classical limit, eps limits, skew and residues", ok and len(sel) == 7,
                  time.perf_counter() - t, 1, msg)


def test_criterion_03_structures():
    t = time.perf_counter()
    sel, _ = suite_checks("poisson", names={"linear_rmatrix", "quadratic_tilde", "reflection_tilde"},
                          prefixes=("quadratic_eta", "reflection_eta"))
    ok, msg = summarize(sel)
    ok = ok and all(c["points_tested"] >= 10 for c in sel)
    assert report(3, "linear, quadratic and reflection structures", ok, time.perf_counter() - t, 30, msg)


def test_criterion_04_jacobi_casimirs():
    t = time.perf_counter()
    sel, _ = suite_checks("poisson", prefixes=("jacobi_", "casimirs_"))
    ok, msg = summarize(sel)
    etas = {c["name"] for c in sel if c["name"].startswith("jacobi_eta")}
    ok = ok and etas == {"jacobi_eta[1]", "jacobi_eta[1/2]", "jacobi_eta[-3]"}
    assert report(4, "Jacobi identity and Casimir centrality", ok, time.perf_counter() - t, 30, msg)


def test_criterion_05_euler():
    t = time.perf_counter()
    sel, _ = suite_checks("tops", prefixes=("euler_flow",))
    ok, msg = summarize(sel)
    assert report(5, "Euler form of the top flows", ok and len(sel) == 4, time.perf_counter() - t, 5, msg)


def test_criterion_06_change_of_variables():
    t = time.perf_counter()
    sel, disc = suite_checks("tops", names={"change_of_variables", "component_map", "l_of_l", "m_tilde_alt",
                                            "eta_expansion_0", "eta_expansion_1"})
    ok, msg = summarize(sel)
    # the eta^-1 coefficient is required in its stated form (tr S / 2) * 1
    printed = [d for d in disc if d["name"] == "eta_expansion_m1_printed"]
    half_ok = bool(printed) and printed[0]["pass"]
    if printed and not half_ok:
        msg += f"; stated eta^-1 coefficient (tr S/2)*1 leaves residual {printed[0]['max_residual']}"
        msg += "; the exact coefficient tr S * 1 holds"
    assert report(6, "change of variables, component map, series identities", ok and half_ok,
                  time.perf_counter() - t, 10, msg)


def test_criterion_07_bosonization():
    t = time.perf_counter()
    sel, _ = suite_checks("manybody", names={"cm_map", "rs_det", "rs_induced_brackets"})
    ok, msg = summarize(sel)
    assert report(7, "bosonization maps", ok and len(sel) == 3, time.perf_counter() - t, 30, msg)


def test_criterion_08_limit_law():
    t = time.perf_counter()
    slope = manybody.limit_slope(0.7, 1.3, 0.9)
    assert report(8, "nonrelativistic limit law", abs(slope + 4) <= 0.3, time.perf_counter() - t, 1,
                  f"slope {slope:.4f}")


def test_criterion_09_trajectories():
    t = time.perf_counter()
    nu, q0, p0 = 0.9, 1.3, 0.7
    tr = manybody.canonical_flow(manybody.cm_vector_field(nu), q0, p0, 1e-3, 1000)
    traj, _ = tops.flow_run(manybody.cm_map(p0, q0, nu), tops.top_rhs, 1e-3, 1000)
    d_cm = max(np.abs(manybody.cm_map(r[2], r[1], nu) - s).max() for r, s in zip(tr, traj))
    eta, c = 0.6, 2.0
    tr = manybody.canonical_flow(manybody.rs_vector_field(eta, c), q0, p0, 1e-3, 1000)
    f = -1 / (c * eta)
    traj, _ = tops.flow_run(manybody.rs_map(p0, q0, eta, c), lambda s: f * tops.eta_top_rhs(s, eta), 1e-3, 1000)
    d_rs = max(np.abs(manybody.rs_map(r[2], r[1], eta, c) - s).max() for r, s in zip(tr, traj))
    assert report(9, "canonical trajectories match top trajectories", d_cm < 1e-8 and d_rs < 1e-6,
                  time.perf_counter() - t, 10, f"CM sup {d_cm:.2e}, RS sup {d_rs:.2e}")


def test_criterion_10_gaudin():
    t = time.perf_counter()
    sel, disc = suite_checks("gaudin", names={"sum_h", "involution_n3", "involution_n5_random",
                                              "spectral_expansion", "canonical_h_derived", "canonical_h0_derived"})
    ok, msg = summarize(sel)
    printed = [d for d in disc if d["name"] in ("canonical_h_printed", "canonical_h0_printed")]
    printed_ok = len(printed) == 2 and all(d["pass"] for d in printed)
    if not printed_ok:
        msg += "; stated canonical forms differ from the composed ones: " + ", ".join(
            d["name"] for d in printed if not d["pass"])
        msg += "; derived canonical forms match exactly"
    assert report(10, "Gaudin Hamiltonians", ok and printed_ok, time.perf_counter() - t, 120, msg)


def test_criterion_11_chains():
    t = time.perf_counter()
    sel, _ = suite_checks("chain", names={"t0_factorization", "transfer_commutativity", "boundary_constraint"})
    ok, msg = summarize(sel)
    comm = [c for c in sel if c["name"] == "transfer_commutativity"]
    ok = ok and len(sel) == 3 and comm[0]["points_tested"] >= 20
    assert report(11, "transfer matrices", ok, time.perf_counter() - t, 120, msg)


def _ll_run(N, lam, dt, steps):
    x, S = field.ll_initial(N, lam)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, lam)
    mon = {
        "cas": lambda s: float(np.abs(trace(s @ s) - 2 * lam * lam).max()),
        "H": lambda s: field.ll_hamiltonian(s, dx),
        "E": lambda s: field.ll_energy(s, dx, alpha),
    }
    snaps, series = field.pde_run(S, lambda s: field.ll_rhs(s, dx, alpha), dt, steps, mon, every=steps)
    return snaps[-1], series


def _rel(v):
    return float(np.abs(v - v[0]).max() / abs(v[0]))


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_criterion_12_landau_lifshitz():
    t = time.perf_counter()
    sel, _ = suite_checks("field-jets", names={"ll_zero_curvature", "ll_h"})
    jets_ok, msg = summarize(sel)
    parts = [msg]
    run_ok = False
    try:
        final, series = _ll_run(128, 1.0, 1e-3, 1000)
        half, _ = _ll_run(128, 1.0, 5e-4, 2000)
        quarter, _ = _ll_run(128, 1.0, 2.5e-4, 4000)
        order = math.log2(np.abs(final - half).max() / np.abs(half - quarter).max())
        run_ok = series["cas"].max() < 1e-8 and _rel(series["H"]) < 1e-6 and order >= 3.5
        parts.append(f"real run: casimir {series['cas'].max():.1e}, H drift {_rel(series['H']):.1e}, order {order:.2f}")
    except FloatingPointError as exc:
        parts.append(f"real lambda=1 run: {exc}")
    # supplementary diagnostics on the well-posed complexified flow
    try:
        final, series = _ll_run(128, 1j, 1e-3, 1000)
        half, _ = _ll_run(128, 1j, 5e-4, 2000)
        quarter, _ = _ll_run(128, 1j, 2.5e-4, 4000)
        order = math.log2(np.abs(final - half).max() / np.abs(half - quarter).max())
        parts.append(f"lambda=1j: casimir {series['cas'].max():.1e}, stated H drift {_rel(series['H']):.2e}, "
                     f"energy drift {_rel(series['E']):.1e}, order {order:.2f}")
    except FloatingPointError as exc:
        parts.append(f"lambda=1j run: {exc}")
    assert report(12, "Landau-Lifshitz jets and PDE run", jets_ok and run_ok, time.perf_counter() - t, 60,
                  "; ".join(parts))


def test_criterion_13_chiral():
    t = time.perf_counter()
    sel, _ = suite_checks("field-jets", names={"chiral_zero_curvature", "light_cone", "chiral_xxx_unit"},
                          cfg={"jets": 50})
    ok, msg = summarize(sel)
    rs = RationalSampler(f"{SEED}:chiral")
    jets = [field.random_ll_jet(rs, k=Fraction(2)) for _ in range(100)]
    z = Fraction(5, 7)
    for j1, j2 in zip(jets[::2], jets[1::2]):
        ok = ok and is_zero_matrix(field.chiral_jet_residual(z, j1, j2, Fraction(2), Fraction(1), Fraction(-1, 3)))
    N = 128
    x = np.arange(N) * (2 * math.pi / N)
    dx = x[1] - x[0]
    mon = {f"I{a}": (lambda s, a=a: float(np.sum(trace(s[a] @ s[a])) * dx)) for a in (0, 1)}
    _, series = field.pde_run(np.array(cli.chiral_initial(x)),
                              lambda s: np.array(field.chiral_rhs(s[0], s[1], dx, 1.0, 1.0, 0.0)),
                              1e-3, 1000, mon, guard=0.5 * dx)
    drift = max(_rel(v) for v in series.values())
    ok = ok and drift < 1e-8
    assert report(13, "chiral model", ok, time.perf_counter() - t, 60, f"{msg}; 50 extra jet pairs; drift {drift:.1e}")


def test_criterion_14_gaudin_field():
    t = time.perf_counter()
    x, S = field.ll_initial(64, 1j)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(1.0, 1j)
    same = np.array_equal(field.gaudin1p1_rhs([S], [0.0], dx, alpha)[0], field.ll_rhs(S, dx, alpha))
    rs = RationalSampler(f"{SEED}:gaudin1p1")
    zs = [Fraction(0), Fraction(3, 2), Fraction(-2)]
    spins = [mat2(*[rs.rational() for _ in range(4)]) for _ in range(3)]
    fields = [np.array([s] * 4, dtype=object) for s in spins]
    exact = True
    for a in (1, 2, 3):
        out = field.gaudin1p1_rhs(fields, zs, Fraction(1, 2), Fraction(1, 8), a)
        ref = field.coupled_top_rhs(spins, zs, a)
        exact = exact and all(is_zero_matrix(o[j] - r) for o, r in zip(out, ref) for j in range(4))
    assert report(14, "1+1 Gaudin reductions", same and exact, time.perf_counter() - t, 30,
                  f"n=1 bitwise equal: {same}; constant fields exact: {exact}")


if __name__ == "__main__":
    import warnings

    warnings.simplefilter("ignore", RuntimeWarning)
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
