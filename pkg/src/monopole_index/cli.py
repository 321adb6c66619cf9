"""Command-line interface: ``monopole-index <command> [options]``.

Exit codes: 0 success, 1 failed checks or other errors, 2 configuration
errors, 3 numerical indeterminacy.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .chern import SphereMesh, component_degrees, split_eigenbundles
from .config import parse_config, serialize_config
from .equivariant import chirality_sign, lefschetz_numeric, lefschetz_symbolic
from .errors import ConfigError, MonopoleIndexError, NumericalIndeterminacyError, ResolutionError
from .index import cross_check, main_index, twisted_flat_index
from .model import MonopoleConfig, validate_config

COMMANDS = ("index", "equivariant", "spectrum", "radial-index", "chern", "hopf-verify", "selftest")


def _mesh(text: str | None, cfg: MonopoleConfig | None) -> SphereMesh | None:
    if text is None:
        return None
    try:
        nt, nphi = (int(v) for v in text.lower().split("x"))
    except ValueError as exc:
        raise ConfigError(f"--mesh expects NxM, got {text!r}") from exc
    return SphereMesh(nt, nphi, (cfg.boundary_radius if cfg and cfg.boundary_radius else 1.0))


def _load(args) -> MonopoleConfig:
    if not args.config:
        raise ConfigError("--config is required for this command")
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {args.config}: {exc}") from exc
    return parse_config(text)


def _record(command: str, inputs: dict, results: Any, checks: dict) -> dict:
    return {"command": command, "version": __version__, "inputs": inputs, "results": results, "checks": checks}


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------


def cmd_index(args) -> dict:
    cfg = _load(args)
    mesh = _mesh(args.mesh, cfg)
    chir = args.chirality or "+"
    rep = main_index(cfg, chir, mesh)
    other = main_index(cfg, "-" if chir == "+" else "+", mesh)
    checks = {"expressions_agree": rep.consistent, "adjoint_antisymmetry": rep.total == -other.total}
    if cfg.mode == "complete-with-boundary":
        checks["boundary_degree_matches_weights"] = cross_check(cfg, mesh=mesh)
    results = rep.to_dict()
    results["warnings"] = list(validate_config(cfg).warnings)
    return _record("index", {"config": serialize_config(cfg), "chirality": chir, "mesh": args.mesh}, results, checks)


def cmd_equivariant(args) -> dict:
    cfg = _load(args)
    W = [p.weights for p in cfg.singularities]
    n = args.grid or 4096
    out = {}
    for ch in ([args.chirality] if args.chirality else ["+", "-"]):
        sym = lefschetz_symbolic(W, cfg.rank, ch)
        num = lefschetz_numeric(W, cfg.rank, ch, n)
        closed = -chirality_sign(ch) * sum(k for w in W for k in w if k > 0)
        out[ch] = {"symbolic": sym, "numeric": round(num, 12), "closed_form": closed}
    checks = {
        f"{ch}:symbolic_equals_closed_form": v["symbolic"] == v["closed_form"] for ch, v in out.items()
    }
    checks.update({f"{ch}:numeric_within_1e-6": abs(v["numeric"] - v["symbolic"]) < 1e-6 for ch, v in out.items()})
    return _record("equivariant", {"config": serialize_config(cfg), "quadrature_n": n}, out, checks)


def cmd_spectrum(args) -> dict:
    from .sphere_dirac import discretized_spectrum, kernel_dims

    if args.k is None:
        if not args.config:
            raise ConfigError("spectrum needs --k or a --config")
        ks = sorted(set(_load(args).total_weights()))
    else:
        ks = [args.k]
    qmax = args.qmax or 5
    grid = args.grid or 256
    tol = args.tol if args.tol is not None else 1e-2
    results = {}
    checks = {}
    for k in ks:
        rep = discretized_spectrum(k, qmax, grid, tol)
        results[str(k)] = rep.to_dict()
        checks[f"k={k}:levels_matched"] = rep.matched
        checks[f"k={k}:zero_modes_match_kernel_dims"] = rep.zero_modes == kernel_dims(k)
    return _record("spectrum", {"k": ks, "qmax": qmax, "grid": grid, "tol": tol}, results, checks)


def cmd_radial_index(args) -> dict:
    qmax = args.qmax if args.qmax is not None else 8
    tol = args.tol if args.tol is not None else 0.1
    if args.k is not None:
        if args.a is None:
            raise ConfigError("--k requires --a")
        pairs = [(args.k, args.a)]
        inputs = {"k": args.k, "a": args.a}
    else:
        cfg = _load(args)
        if len(cfg.singularities) != 1:
            raise ConfigError("radial-index needs exactly one singular point")
        pairs = list(zip(cfg.total_weights(), cfg.mass))
        inputs = {"config": serialize_config(cfg)}
    chir = args.chirality or "+"
    results = []
    checks = {}
    for j, (k, a) in enumerate(pairs):
        rep = twisted_flat_index(int(k), float(a), chir, qmax, tol)
        mc = rep.mode_check
        results.append(
            {
                "component": j,
                "k": int(k),
                "a": float(a),
                "formula": rep.total,
                "mode_sum": mc["mode_sum"],
                "per_mode": {str(q): v for q, v in mc["per_mode"].items()},
            }
        )
        checks[f"component {j}: mode_sum_equals_formula"] = mc["agrees"]
    inputs.update({"chirality": chir, "qmax": qmax, "tol": tol})
    return _record("radial-index", inputs, results, checks)


def cmd_chern(args) -> dict:
    cfg = _load(args)
    mesh = _mesh(args.mesh, cfg) or SphereMesh(40, 80, cfg.boundary_radius or 1.0)
    chir = args.chirality or "+"
    degrees = component_degrees(cfg, mesh)
    fine = component_degrees(cfg, mesh.refined())
    results: dict[str, Any] = {"outward_degrees": degrees}
    checks = {"weights_match_degrees": cross_check(cfg, degrees), "mesh_doubling_stable": degrees == fine}
    if all(a != 0 for a in cfg.mass):
        split = split_eigenbundles(cfg, chir)
        results["split"] = {"plus": list(split.plus_components), "minus": list(split.minus_components)}
        results["boundary_ch_plus"] = -sum(degrees[j] for j in split.plus_components)
        results["boundary_ch_minus"] = -sum(degrees[j] for j in split.minus_components)
    return _record(
        "chern",
        {"config": serialize_config(cfg), "mesh": f"{mesh.n_theta}x{mesh.n_phi}", "chirality": chir},
        results,
        checks,
    )


def cmd_hopf_verify(args) -> dict:
    from .acceptance import admissible_hopf_points
    from .hopf import (
        asd_residual,
        clifford_rep_check,
        connection_residuals,
        dirac_intertwine_residual,
        gaussian_bump_section,
        hopf_map,
    )

    k = args.k if args.k is not None else 1
    h = args.h if args.h is not None else 1e-4
    seed = args.seed if args.seed is not None else 0
    n = args.samples
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(n, 4))
    X = hopf_map(pts.T)
    hopf_err = float(np.max(np.abs(np.linalg.norm(X, axis=0) - np.sum(pts**2, axis=1))))
    conn = max(max(abs(v) for v in connection_residuals(P).values()) for P in pts)
    adm = admissible_hopf_points(rng, n, h)
    asd = max(asd_residual(k, P, h) for P in adm)
    dirac = max(dirac_intertwine_residual(k, gaussian_bump_section(), P, h) for P in adm)
    cliff = clifford_rep_check()
    results = {
        "hopf_norm_residual": hopf_err,
        "connection_residual": conn,
        "asd_residual": asd,
        "dirac_intertwine_residual": dirac,
        "clifford": cliff,
    }
    checks = {
        "hopf_norm": hopf_err < 1e-12,
        "connection": conn < 1e-10,
        "asd_below_1e-4": asd < 1e-4,
        "clifford_exact": all(cliff.values()),
        "dirac_below_1e-3": dirac < 1e-3,
    }
    return _record("hopf-verify", {"k": k, "h": h, "seed": seed, "samples": n}, results, checks)


def cmd_selftest(args) -> dict:
    from .acceptance import run_all

    res = run_all()
    results = [
        {"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
        for r in res
    ]
    return _record("selftest", {}, results, {f"criterion {r.number}": r.passed for r in res})


HANDLERS = {
    "index": cmd_index,
    "equivariant": cmd_equivariant,
    "spectrum": cmd_spectrum,
    "radial-index": cmd_radial_index,
    "chern": cmd_chern,
    "hopf-verify": cmd_hopf_verify,
    "selftest": cmd_selftest,
}


# ----------------------------------------------------------------------------
# output
# ----------------------------------------------------------------------------


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(obj, dict):
        rows = []
        for key in obj:
            rows += _flatten(obj[key], f"{prefix}.{key}" if prefix else str(key))
        return rows
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        rows = []
        for i, v in enumerate(obj):
            rows += _flatten(v, f"{prefix}[{i}]")
        return rows
    return [(prefix, obj)]


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.6f}" if abs(v) >= 1e-3 or v == 0 else f"{v:.3e}"
    return json.dumps(v, default=_json_default) if isinstance(v, list) else str(v)


def _json_default(obj: Any) -> Any:
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not serializable")


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True, indent=2, default=_json_default)
    rows = [(f"{section}.{k}" if k else section, v) for section in ("results", "checks") for k, v in _flatten(record[section])]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["command", "key", "value"])
        for k, v in rows:
            w.writerow([record["command"], k, _fmt(v)])
        return buf.getvalue().rstrip("\n")
    width = max((len(k) for k, _ in rows), default=0)
    lines = [f"{record['command']} (version {record['version']})"]
    lines += [f"  {k.ljust(width)}  {_fmt(v)}" for k, v in rows]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monopole-index", description="L2-indices of Dirac operators of singular monopoles")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="JSON configuration file")
    p.add_argument("--out", choices=("table", "json", "csv"), default="table")
    p.add_argument("--chirality", choices=("+", "-"))
    p.add_argument("--qmax", type=int)
    p.add_argument("--grid", type=int, help="grid size (spectrum) or quadrature nodes (equivariant)")
    p.add_argument("--mesh", help="boundary mesh NxM")
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--h", type=float, help="finite-difference step (hopf-verify)")
    p.add_argument("--k", type=int, help="monopole charge (spectrum, radial-index, hopf-verify)")
    p.add_argument("--a", type=float, help="mass (radial-index)")
    p.add_argument("--samples", type=int, default=10, help="sample points (hopf-verify)")
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        record = HANDLERS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        for msg in exc.problems:
            print(f"  {msg}", file=stderr)
        return 2
    except (NumericalIndeterminacyError, ResolutionError) as exc:
        print(f"numerical indeterminacy: {exc}", file=stderr)
        for key, val in getattr(exc, "diagnostics", {}).items():
            print(f"  {key}: {val}", file=stderr)
        return 3
    except MonopoleIndexError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(render(record, args.out), file=stdout)
    return 0 if all(record["checks"].values()) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
