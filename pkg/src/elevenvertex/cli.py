"""Command-line entry point: ``elevenvertex {verify,simulate,transfer}``.

Exit codes: 0 when every check passes, 1 on a failed check or an unstable
run, 2 on a usage or configuration error.  Reports are JSON with sorted keys
and no timing information, so equal seeds give byte-identical files.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import warnings
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import checks, field, lattice, manybody, tops
from .exactcore import RationalSampler, mat2, trace

MODELS = ("top", "top-eta", "rs", "cm", "gaudin", "ll", "chiral", "ll-gaudin")

OVERRIDES = ("eta", "eps", "nu", "c", "lambda", "k", "n", "dt", "steps", "grid_n")

SIM_DEFAULTS = {
    "top": {"eps": 1.0, "dt": 1e-3, "steps": 1000, "z": 0.8, "S": [[0.3, -0.4], [0.7, 0.5]]},
    "top-eta": {"eta": 0.6, "dt": 1e-3, "steps": 1000, "z": 0.8, "S": [[0.3, -0.4], [0.7, 0.5]]},
    "cm": {"nu": 0.9, "q0": 1.3, "p0": 0.7, "dt": 1e-3, "steps": 1000},
    "rs": {"eta": 0.6, "c": 2.0, "q0": 1.3, "p0": 0.7, "dt": 1e-3, "steps": 1000},
    "gaudin": {
        "n": 3, "eps": 1.0, "dt": 1e-3, "steps": 1000, "flow": 0, "z": 0.37,
        "zs": [0.0, 1.0, -1.5, 2.5, -3.0],
        "spins": [[[0.09, 0.21], [-0.12, 0.15]], [[0.03, -0.06], [0.15, 0.06]], [[-0.09, 0.12], [0.03, 0.18]],
                  [[0.06, 0.03], [0.09, -0.03]], [[0.15, -0.09], [0.06, 0.12]]],
    },
    "ll": {"lambda": "1", "k": 1.0, "eps": 1.0, "grid_n": 128, "dt": 1e-3, "steps": 1000, "every": 100},
    "chiral": {"k": 1.0, "z1": 1.0, "z2": 0.0, "eps": 1.0, "grid_n": 128, "dt": 1e-3, "steps": 1000, "every": 100},
    "ll-gaudin": {"n": 2, "alpha": 0.125, "zs": [0.0, 1.5, -2.0], "flow": 1, "grid_n": 64,
                  "dt": 1e-3, "steps": 1000, "every": 100},
}

TRANSFER_DEFAULTS = {"n": 2, "samples": 5, "points": 20, "zs": None, "homogeneous": False, "eta": 1,
                     "spin": [[1, 0], [0, 1]]}


class ConfigError(Exception):
    pass


# -- helpers ------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()] if x.dtype != object else [_jsonable(v) for v in x]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def dump_json(obj, path):
    text = json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"
    Path(path).write_text(text)
    return text


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for r in rows:
            w.writerow([repr(float(v)) if not isinstance(v, str) else v for v in r])


def load_config(path):
    if path is None:
        return {}
    try:
        cfg = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def resolve_seed(args, cfg):
    if args.seed is not None:
        return args.seed
    if "seed" in cfg:
        return int(cfg["seed"])
    env = os.environ.get("ELEVENVERTEX_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as e:
            raise ConfigError(f"ELEVENVERTEX_SEED={env!r} is not an integer") from e
    return 0


def parse_complex(s):
    """'1', '0.5', '1j', '0.2+1j' -> float when the imaginary part vanishes."""
    try:
        v = complex(str(s).replace(" ", ""))
    except ValueError as e:
        raise ConfigError(f"cannot parse {s!r} as a number") from e
    return v.real if v.imag == 0 else v


def merge(defaults, cfg, args, allowed_extra=()):
    out = dict(defaults)
    for k, v in cfg.items():
        if k in ("seed", "command", "model", "suite") or k in allowed_extra:
            continue
        if k not in defaults:
            raise ConfigError(f"unknown config key {k!r}")
        out[k] = v
    for k in OVERRIDES:
        v = getattr(args, k, None)
        if v is not None:
            if k not in defaults:
                raise ConfigError(f"--{k.replace('_', '-')} does not apply here")
            out[k] = v
    return out


# -- verify -------------------------------------------------------------------

def cmd_verify(args):
    cfg = load_config(args.config)
    seed = resolve_seed(args, cfg)
    suite = args.suite or cfg.get("suite")
    if suite is None:
        raise ConfigError("--suite is required")
    if suite not in checks.SUITES + ("all",):
        raise ConfigError(f"unknown suite {suite!r}")
    params = {k: v for k, v in cfg.items() if k not in ("seed", "suite", "command")}
    bad = set(params) - set(checks.DEFAULTS)
    if bad:
        raise ConfigError(f"unknown config keys {sorted(bad)}")
    report = checks.run_suite(suite, params, seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    dump_json(report, out / f"report_{suite}.json")
    for r in report["checks"]:
        print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['suite']}:{r['name']}  residual={r['max_residual']}")
    for r in report["known_discrepancies"]:
        print(f"NOTE  {r['suite']}:{r['name']}  residual={r['max_residual']}")
    print(f"{report['passed']} passed, {report['failed']} failed")
    return 0 if report["pass"] else 1


# -- simulate -----------------------------------------------------------------

def _sim_top(p, out, cross):
    S0 = np.array(p["S"], dtype=float)
    eps = p["eps"]
    mon = {
        "C1": lambda s: trace(s),
        "C2": lambda s: 0.5 * trace(s @ s),
        "H": lambda s: tops.hamiltonian_top(s),
    }
    traj, drift = tops.flow_run(S0, lambda s: tops.top_rhs(s, eps), p["dt"], p["steps"], mon)
    z = p["z"]
    lax_res = tops.lax_residual_series(traj, p["dt"], lambda s: tops.lax_nonrel(z, s, eps), lambda s: tops.m_cal(z, s, eps))
    rows = [(n * p["dt"], *s.ravel(), *(f(s) for f in mon.values())) for n, s in enumerate(traj)]
    write_csv(out / "top_trajectory.csv", ["t", "S11", "S12", "S21", "S22", *mon], rows)
    return {"casimir_drift_max": max(drift["C1"].max(), drift["C2"].max()),
            "hamiltonian_drift_max": drift["H"].max(), "lax_residual": lax_res}


def _sim_top_eta(p, out, cross):
    S0 = np.array(p["S"], dtype=float)
    eta = p["eta"]
    mon = {
        "C1": lambda s: tops.casimirs_eta(s, eta)[0],
        "C2": lambda s: tops.casimirs_eta(s, eta)[1],
    }
    traj, drift = tops.flow_run(S0, lambda s: tops.eta_top_rhs(s, eta), p["dt"], p["steps"], mon)
    z = p["z"]
    lax_res = tops.lax_residual_series(traj, p["dt"], lambda s: tops.lax_eta(z, s, eta), lambda s: tops.m_eta(z, s))
    rows = [(n * p["dt"], *s.ravel(), *(f(s) for f in mon.values())) for n, s in enumerate(traj)]
    write_csv(out / "top-eta_trajectory.csv", ["t", "S11", "S12", "S21", "S22", *mon], rows)
    return {"casimir_drift_max": max(drift["C1"].max(), drift["C2"].max()), "lax_residual": lax_res}


def _canonical_sim(name, p, out, cross, rhs, ham, smap, top_rhs):
    tr = manybody.canonical_flow(rhs, p["q0"], p["p0"], p["dt"], p["steps"])
    H = np.array([ham(pp, q) for _, q, pp in tr])
    Ss = [smap(pp, q) for _, q, pp in tr]
    rows = [(t, q, pp, h, *s.ravel()) for (t, q, pp), h, s in zip(tr, H, Ss)]
    write_csv(out / f"{name}_trajectory.csv", ["t", "q", "p", "H", "S11", "S12", "S21", "S22"], rows)
    summary = {"hamiltonian_drift_max": float(np.abs(H - H[0]).max() / abs(H[0]))}
    if cross:
        traj, _ = tops.flow_run(Ss[0], top_rhs, p["dt"], p["steps"])
        dev = [float(np.abs(a - b).max()) for a, b in zip(Ss, traj)]
        write_csv(out / f"{name}_crosscheck.csv", ["t", "max_abs_deviation"],
                  [(tr[n, 0], dev[n]) for n in range(len(dev))])
        summary["crosscheck_max_deviation"] = max(dev)
    return summary


def _sim_cm(p, out, cross):
    nu = p["nu"]
    return _canonical_sim("cm", p, out, cross, manybody.cm_vector_field(nu),
                          lambda pp, q: manybody.cm_ham(pp, q, nu),
                          lambda pp, q: manybody.cm_map(pp, q, nu), tops.top_rhs)


def _sim_rs(p, out, cross):
    eta, c = p["eta"], p["c"]
    k = float(manybody.rs_flow_factor(Fraction(eta), Fraction(c)))
    s = _canonical_sim("rs", p, out, cross, manybody.rs_vector_field(eta, c),
                       lambda pp, q: manybody.rs_ham(pp, q, eta, c),
                       lambda pp, q: manybody.rs_map(pp, q, eta, c),
                       lambda S: k * tops.eta_top_rhs(S, eta))
    s["flow_factor"] = k
    return s


def _sim_gaudin(p, out, cross):
    n = p["n"]
    if not 1 <= n <= len(p["zs"]) or n > len(p["spins"]):
        raise ConfigError("n exceeds the configured sites")
    zs = [float(z) for z in p["zs"][:n]]
    eps = p["eps"]
    d = p["flow"]
    if not 0 <= d <= n:
        raise ConfigError("flow must be in 0..n")
    state = np.array(p["spins"][:n], dtype=float)

    def data(s):
        return lattice.GaudinData(zs, list(s), eps)

    rhs = lambda s: np.array(lattice.gaudin_flow(d, data(s)))  # noqa: E731
    mon = {"h0": lambda s: lattice.gaudin_h0(data(s))}
    for a in range(1, n + 1):
        mon[f"h{a}"] = lambda s, a=a: lattice.gaudin_h(a, data(s))
        mon[f"C2_{a}"] = lambda s, a=a: 0.5 * trace(s[a - 1] @ s[a - 1])
    traj, drift = tops.flow_run(state, rhs, p["dt"], p["steps"])
    z = p["z"]
    lax_res = tops.lax_residual_series(traj, p["dt"], lambda s: lattice.gaudin_lax(z, data(s)),
                                       lambda s: lattice.gaudin_M(d, z, data(s)))
    vals = {k: np.array([f(s) for s in traj]) for k, f in mon.items()}
    header = ["t"] + [f"S{a}_{ij}" for a in range(1, n + 1) for ij in ("11", "12", "21", "22")] + list(mon)
    rows = [(i * p["dt"], *s.ravel(), *(vals[k][i] for k in mon)) for i, s in enumerate(traj)]
    write_csv(out / "gaudin_trajectory.csv", header, rows)
    dr = {k: float(np.abs(v - v[0]).max()) for k, v in vals.items()}
    return {"hamiltonian_abs_drift_max": max(v for k, v in dr.items() if k.startswith("h")),
            "casimir_abs_drift_max": max(v for k, v in dr.items() if k.startswith("C")),
            "abs_drift": dr, "lax_residual": lax_res}


def _grid(N):
    if N < 8:
        raise ConfigError("grid_n must be at least 8")
    x = np.arange(N) * (2 * math.pi / N)
    return x, x[1] - x[0]


def _complex_cols(prefix, arr):
    if np.iscomplexobj(arr):
        return [f"re_{prefix}", f"im_{prefix}"]
    return [prefix]


def _split(v):
    return (v.real, v.imag) if np.iscomplexobj(v) else (v,)


def _sim_ll(p, out, cross):
    lam = parse_complex(p["lambda"])
    k, eps = p["k"], p["eps"]
    x, S = field.ll_initial(p["grid_n"], lam)
    dx = x[1] - x[0]
    alpha = field.ll_alpha(k, lam)
    c0 = 2 * lam * lam
    mon = {
        "casimir": lambda s: float(np.abs(trace(s @ s) - c0).max()),
        "energy": lambda s: field.ll_energy(s, dx, alpha, eps),
        "H_printed": lambda s: field.ll_hamiltonian(s, dx),
    }
    snaps, series = field.pde_run(S, lambda s: field.ll_rhs(s, dx, alpha, eps), p["dt"], p["steps"], mon, every=p["every"])
    cplx = np.iscomplexobj(snaps)
    comps = ["S11", "S12", "S21"]
    header = ["t", "x"] + [h for c in comps for h in (_complex_cols(c, snaps))] + ["casimir_dev"]
    rows = []
    for i, s in enumerate(snaps):
        t = i * p["every"] * p["dt"]
        cd = np.abs(trace(s @ s) - c0)
        for j in range(len(x)):
            ent = [s[j, 0, 0], s[j, 0, 1], s[j, 1, 0]]
            rows.append((t, x[j], *[v for e in ent for v in _split(e)], cd[j]))
    write_csv(out / "ll_trajectory.csv", header, rows)
    e, h = series["energy"], series["H_printed"]
    return {
        "lambda": lam, "alpha": alpha, "complex": cplx,
        "casimir_pointwise_max": float(series["casimir"].max()),
        "energy_relative_drift": float(np.abs(e - e[0]).max() / abs(e[0])),
        "printed_hamiltonian_relative_drift": float(np.abs(h - h[0]).max() / abs(h[0])),
    }


def chiral_initial(x):
    S1 = mat2(0.3 * np.sin(x), -(0.1 + 0.03 * np.cos(x)), 0.5 + 0.1 * np.cos(2 * x), -0.3 * np.sin(x))
    S2 = mat2(0.2 * np.cos(x), -(0.1 + 0.02 * np.sin(x)), 0.4 * np.sin(x), -0.2 * np.cos(x))
    return S1, S2


def _sim_chiral(p, out, cross):
    x, dx = _grid(p["grid_n"])
    k, z1, z2, eps = p["k"], p["z1"], p["z2"], p["eps"]
    state = np.array(chiral_initial(x))

    def rhs(s):
        return np.array(field.chiral_rhs(s[0], s[1], dx, k, z1, z2, eps))

    mon = {f"I{a}": (lambda s, a=a: float(np.sum(trace(s[a - 1] @ s[a - 1])) * dx)) for a in (1, 2)}
    snaps, series = field.pde_run(state, rhs, p["dt"], p["steps"], mon, every=p["every"], guard=0.5 * dx / abs(k))
    header = ["t", "x"] + [f"S{a}_{c}" for a in (1, 2) for c in ("11", "12", "21")]
    rows = []
    for i, s in enumerate(snaps):
        t = i * p["every"] * p["dt"]
        for j in range(len(x)):
            rows.append((t, x[j], s[0, j, 0, 0], s[0, j, 0, 1], s[0, j, 1, 0], s[1, j, 0, 0], s[1, j, 0, 1], s[1, j, 1, 0]))
    write_csv(out / "chiral_trajectory.csv", header, rows)
    return {f"{k_}_relative_drift": float(np.abs(v - v[0]).max() / abs(v[0])) for k_, v in series.items()}


def ll_gaudin_initial(x, n):
    out = []
    for b in range(n):
        ph = float(b)
        out.append(mat2(0.15 * np.sin(x + ph), -0.1 * (1 + 0.2 * np.cos(x + ph)),
                        0.5 * (1 + 0.1 * np.sin(2 * x + ph)), -0.15 * np.sin(x + ph)))
    return np.array(out)


def _sim_ll_gaudin(p, out, cross):
    n = p["n"]
    if not 1 <= n <= len(p["zs"]):
        raise ConfigError("n exceeds the configured poles")
    zs = [float(z) for z in p["zs"][:n]]
    a = p["flow"]
    if not 1 <= a <= n:
        raise ConfigError("flow must be in 1..n")
    x, dx = _grid(p["grid_n"])
    state = ll_gaudin_initial(x, n)

    def rhs(s):
        return np.array(field.gaudin1p1_rhs(list(s), zs, dx, p["alpha"], a))

    mon = {}
    for b in range(n):
        mon[f"I{b + 1}"] = lambda s, b=b: float(np.sum(trace(s[b] @ s[b])) * dx)
        if b != a - 1:
            ref = trace(state[b] @ state[b])
            mon[f"pointwise{b + 1}"] = lambda s, b=b, ref=ref: float(np.abs(trace(s[b] @ s[b]) - ref).max())
    snaps, series = field.pde_run(state, rhs, p["dt"], p["steps"], mon, every=p["every"])
    header = ["t", "x"] + [f"S{b + 1}_{c}" for b in range(n) for c in ("11", "12", "21")]
    rows = []
    for i, s in enumerate(snaps):
        t = i * p["every"] * p["dt"]
        for j in range(len(x)):
            rows.append((t, x[j], *[s[b, j, r, c] for b in range(n) for r, c in ((0, 0), (0, 1), (1, 0))]))
    write_csv(out / "ll-gaudin_trajectory.csv", header, rows)
    summ = {}
    for k_, v in series.items():
        if k_.startswith("I"):
            # the flowing site exchanges its norm with the others; only b != a are conserved
            tag = "relative_change" if k_ == f"I{a}" else "relative_drift"
            summ[f"{k_}_{tag}"] = float(np.abs(v - v[0]).max() / abs(v[0]))
        else:
            summ[f"{k_}_casimir_max"] = float(v.max())
    return summ


SIMULATORS = {
    "top": _sim_top, "top-eta": _sim_top_eta, "cm": _sim_cm, "rs": _sim_rs, "gaudin": _sim_gaudin,
    "ll": _sim_ll, "chiral": _sim_chiral, "ll-gaudin": _sim_ll_gaudin,
}


def cmd_simulate(args):
    cfg = load_config(args.config)
    seed = resolve_seed(args, cfg)
    model = args.model or cfg.get("model")
    if model not in SIMULATORS:
        raise ConfigError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    p = merge(SIM_DEFAULTS[model], cfg, args)
    if p["dt"] <= 0 or int(p["steps"]) < 1:
        raise ConfigError("dt must be positive and steps at least 1")
    p["steps"] = int(p["steps"])
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {"model": model, "seed": seed, "config": p}
    code = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        try:
            summary["monitors"] = SIMULATORS[model](p, out, args.cross_check)
            summary["status"] = "ok"
        except (FloatingPointError, ValueError) as e:
            summary["status"] = "unstable"
            summary["error"] = str(e)
            code = 1
    dump_json(summary, out / f"{model}_summary.json")
    if code:
        print(f"unstable: {summary['error']}", file=sys.stderr)
    else:
        for k, v in sorted(summary["monitors"].items()):
            print(f"{k} = {v}")
    return code


# -- transfer -----------------------------------------------------------------

def _rand_spin(rs):
    return mat2(rs.rational(), rs.rational(), rs.rational(), rs.rational())


def cmd_transfer(args):
    cfg = load_config(args.config)
    seed = resolve_seed(args, cfg)
    p = merge(TRANSFER_DEFAULTS, cfg, args)
    n = int(p["n"])
    if n < 1:
        raise ConfigError("n must be positive")
    rs = RationalSampler(seed)
    zs = [Fraction(z) for z in p["zs"]] if p["zs"] else [Fraction(a, 3) for a in range(n)]
    if len(zs) != n:
        raise ConfigError("zs must have n entries")
    sites = [lattice.Site(z, _rand_spin(rs), Fraction(p["eta"]), rs.rational()) for z in zs]
    bp = lattice.Site(Fraction(0), _rand_spin(rs), Fraction(1), rs.rational())
    bm = lattice.Site(Fraction(0), _rand_spin(rs), Fraction(1), rs.rational())
    samples = []
    warn = []
    while len(samples) < p["samples"]:
        z = rs.rational()
        if z in zs or z == 0:
            warn.append(f"pole sample z={z} resampled")
            continue
        T = lattice.transfer_T(z, sites, "tilde")
        D = lattice.double_row_T(z, sites, bp, bm)
        samples.append({"z": z, "T": T, "trace_T": trace(T), "double_row_T": D, "trace_double_row": trace(D)})
    sym = lattice.symbolic_chain(zs, desc="tilde")
    bad = lattice.trace_commutativity_random(lambda z: lattice.transfer_T(z, sym, "tilde"),
                                             lattice.chain_table(n), seed=seed, points=p["points"], avoid=zs)
    bs, sbp, sbm = lattice.symbolic_chain(zs, desc="tilde", boundaries=True)
    bad_dr = lattice.trace_commutativity_random(lambda z: lattice.double_row_T(z, bs, sbp, sbm),
                                                lattice.chain_table(n, boundaries=True), seed=seed,
                                                points=min(5, p["points"]), avoid=zs)
    report = {
        "seed": seed, "config": p, "samples": samples, "warnings": warn,
        "sites": [{"z": s.z, "spin": s.spin, "s0": s.s0} for s in sites],
        "boundaries": {"plus": {"spin": bp.spin, "s0": bp.s0}, "minus": {"spin": bm.spin, "s0": bm.s0}},
        "commutativity": {"points": p["points"], "failures": len(bad), "pass": not bad,
                          "first_failure": None if not bad else str(bad[0][3])},
        "double_row_commutativity": {"points": min(5, p["points"]), "failures": len(bad_dr),
                                     "first_failure": None if not bad_dr else str(bad_dr[0][3])},
    }
    if p["homogeneous"]:
        spin = mat2(*(Fraction(str(v)) for row in p["spin"] for v in row))
        hs = [lattice.Site(Fraction(0), spin, Fraction(p["eta"])) for _ in range(n)]
        try:
            report["local"] = lattice.local_eval(hs, "eta")
        except ValueError as e:
            report["local"] = {"error": str(e)}
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    dump_json(report, out / "transfer.json")
    for w in warn:
        print(f"warning: {w}", file=sys.stderr)
    print(f"commutativity: {'pass' if not bad else 'FAIL'} ({p['points']} points)")
    print(f"double-row commutativity failures: {len(bad_dr)}/{min(5, p['points'])}")
    if "local" in report:
        print(f"local point: {report['local'].get('z0', report['local'].get('error'))}")
    return 0 if not bad else 1


# -- entry --------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="elevenvertex", description="Rational top, spin chains and field models.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--seed", type=int, help="random seed (fallback: ELEVENVERTEX_SEED, then 0)")
        p.add_argument("--out", default="out", help="output directory")

    v = sub.add_parser("verify", help="run a verification suite")
    common(v)
    v.add_argument("--suite", help="one of " + ", ".join(checks.SUITES + ("all",)))

    s = sub.add_parser("simulate", help="integrate a model and write a trajectory")
    common(s)
    s.add_argument("--model", help="one of " + ", ".join(MODELS))
    s.add_argument("--cross-check", action="store_true", help="compare cm/rs with the mapped top flow")
    for name, typ in (("eta", float), ("eps", float), ("nu", float), ("c", float), ("lambda", str),
                      ("k", float), ("n", int), ("dt", float), ("steps", int), ("grid-n", int)):
        s.add_argument(f"--{name}", type=typ, dest=name.replace("-", "_"))

    t = sub.add_parser("transfer", help="sample transfer matrices of a chain")
    common(t)
    t.add_argument("--n", type=int)
    t.add_argument("--eta", type=str)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "simulate":
            return cmd_simulate(args)
        return cmd_transfer(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
