"""Acceptance checks shared by the test suite and ``monopole-index selftest``.

Each check returns a :class:`CriterionResult`; a check passes only when its
numerical condition holds and it finishes inside its time budget.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .chern import SphereMesh, plaquette_chern
from .equivariant import chirality_sign, lefschetz_numeric, lefschetz_symbolic
from .errors import ChartError
from .hopf import (
    HopfPoint,
    asd_residual,
    clifford_rep_check,
    connection_residuals,
    dirac_intertwine_residual,
    gaussian_bump_section,
    hopf_map,
    lifted_clifford_residual,
    polynomial_bump_section,
    theta_generator,
    omega_form,
)
from .index import main_index
from .model import ChartConnection, MonopoleConfig, SingularPoint, single_point_config
from .radial import (
    RadialGridFunction,
    exponent_residual,
    green_apply,
    green_residual,
    k_alpha_apply,
    k_alpha_bound,
    k_alpha_residual,
    kernel_basis_flat,
    l2_norm_dt,
    raw_coupling_operator,
    log_grid,
    mode_operator,
    shooting_analysis,
)
from .sphere_dirac import discretized_spectrum, kernel_dims


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.elapsed:.2f}s / {self.budget:g}s) {self.detail}"


# ----------------------------------------------------------------------------
# random inputs
# ----------------------------------------------------------------------------


def random_balanced_weights(rng: np.random.Generator, max_rank: int = 5, max_k: int = 6, max_points: int = 4):
    """Random weight vectors with entries in ``[-max_k, max_k]`` summing to zero."""
    rank = int(rng.integers(1, max_rank + 1))
    npts = int(rng.integers(1, max_points + 1))
    W = rng.integers(-max_k, max_k + 1, size=(npts, rank))
    total = int(W.sum())
    while total != 0:
        i, j = rng.integers(npts), rng.integers(rank)
        step = -1 if total > 0 else 1
        if abs(W[i, j] + step) <= max_k:
            W[i, j] += step
            total += step
    return [tuple(int(k) for k in row) for row in W], rank


def random_complete_config(rng: np.random.Generator, max_rank: int = 4, max_k: int = 5) -> MonopoleConfig:
    """Random valid configuration with ``|a_j|`` in ``[0.5, 3]`` and ``|k| <= max_k``."""
    rank = int(rng.integers(1, max_rank + 1))
    npts = int(rng.integers(0, 4))
    pts = []
    for _ in range(npts):
        pos = tuple(float(c) for c in rng.uniform(-1, 1, 3))
        pts.append(SingularPoint(pos, tuple(int(k) for k in rng.integers(-max_k, max_k + 1, rank))))
    mass = tuple(float(rng.uniform(0.5, 3.0) * rng.choice([-1, 1])) for _ in range(rank))
    return MonopoleConfig(rank, tuple(pts), mass, 5.0, "complete-with-boundary")


def admissible_hopf_points(rng: np.random.Generator, n: int, h: float) -> list[np.ndarray]:
    """Unit points of R^4 whose stencils of size ``h`` stay inside one chart."""
    out: list[np.ndarray] = []
    while len(out) < n:
        P = rng.normal(size=4)
        P /= np.linalg.norm(P)
        X = hopf_map(P)
        if abs(X[0]) > 20 * h * 2 and X[1] ** 2 + X[2] ** 2 > (20 * h * 2) ** 2:
            out.append(P)
    return out


# ----------------------------------------------------------------------------
# criteria
# ----------------------------------------------------------------------------


def _timed(number: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - t0
    if elapsed >= budget:
        ok = False
        detail += f"; exceeded time budget"
    return CriterionResult(number, name, ok, detail, elapsed, budget)


def criterion_1(seed: int = 0) -> CriterionResult:
    def body():
        rng = np.random.default_rng(seed)
        bad = 0
        for _ in range(100):
            W, r = random_balanced_weights(rng)
            pos = sum(k for w in W for k in w if k > 0)
            for ch in "+-":
                if lefschetz_symbolic(W, r, ch) != -chirality_sign(ch) * pos:
                    bad += 1
        return bad == 0, f"mismatches={bad} of 200"

    return _timed(1, "equivariant index equals -+sum of positive weights", 1.0, body)


def criterion_2(seed: int = 1) -> CriterionResult:
    def body():
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(20):
            W, r = random_balanced_weights(rng)
            worst = max(worst, abs(lefschetz_numeric(W, r, "+", 4096) - lefschetz_symbolic(W, r, "+")))
        return worst < 1e-6, f"max |numeric - symbolic| = {worst:.2e}"

    return _timed(2, "fixed-point integral quadrature agrees with exact value", 5.0, body)


def criterion_3() -> CriterionResult:
    def body():
        notes = []
        ok = True
        for k in (0, 1, -1, 2, -2, 3):
            rep = discretized_spectrum(k, 5, 256)
            good = rep.matched and rep.max_rel_error < 1e-2 and rep.zero_modes == kernel_dims(k)
            ok &= good
            notes.append(f"k={k}:err={rep.max_rel_error:.1e},zero={rep.zero_modes}")
        return ok, "; ".join(notes)

    return _timed(3, "sphere D^2 levels q^2+|k|q and zero-mode counts", 30.0, body)


def criterion_4(seed: int = 2) -> CriterionResult:
    def body():
        t = log_grid(1.0, 2000)
        f = np.cos(2 * t) + t**2
        worst_res = 0.0
        worst_ratio = 0.0
        rng = np.random.default_rng(seed)
        for alpha in (-2.0, 0.0, 0.5, 1.0, 3.0):
            g = k_alpha_apply(alpha, 1.0, t, f)
            worst_res = max(worst_res, float(np.abs(k_alpha_residual(alpha, t, g, f)).max()))
            for _ in range(50):
                fr = rng.normal(size=t.size)
                gr = k_alpha_apply(alpha, 1.0, t, fr)
                bound = k_alpha_bound(alpha, 1.0, t, l2_norm_dt(t, fr))
                worst_ratio = max(worst_ratio, float(np.max(np.abs(gr) / bound)))
        ok = worst_res < 1e-6 and worst_ratio <= 1.0
        return ok, f"max ODE residual {worst_res:.1e}, max |g|/bound {worst_ratio:.3f}"

    return _timed(4, "K_alpha solves its ODE and obeys the L^2 bound", 5.0, body)


def criterion_5(seed: int = 3) -> CriterionResult:
    def body():
        r = log_grid(1.0, 2000)
        rng = np.random.default_rng(seed)
        worst = 0.0
        for k in (1, -2, 3):
            for ch in "+-":
                s = {}
                for q in range(9):
                    c = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
                    vals = np.stack(
                        [
                            c[i, 0] * r * np.exp(-r)
                            + c[i, 1] * np.exp(-((r - 0.4) ** 2) / 0.02)
                            + c[i, 2] * np.sin(3 * r)
                            for i in range(2)
                        ]
                    )
                    s[q] = RadialGridFunction(r, vals)
                t = green_apply(k, ch, s, 1.0)
                worst = max(worst, green_residual(k, ch, t, s))
        return worst < 1e-3, f"max relative residual {worst:.1e}"

    return _timed(5, "Green operator is a right inverse of D+-", 10.0, body)


def criterion_6() -> CriterionResult:
    def body():
        nonzero = []
        for k in (1, 2, 3, -1, -2, -3):
            for mag in (0.5, 2.0):
                a = mag if k > 0 else -mag
                for q in range(7):
                    idx = shooting_analysis(mode_operator(k, a, q, "+")).index
                    if idx != 0:
                        nonzero.append(("dirac", k, a, q, idx))
                    if q >= 1:
                        n = q * q + abs(k) * q
                        li = shooting_analysis(raw_coupling_operator(k, n, a)).index
                        if li != 0:
                            nonzero.append(("raw", k, a, q, li))
        coker_ok = True
        for k in (-1, -2, -3):
            for a in (0.5, 2.0):
                rep = shooting_analysis(mode_operator(k, a, 0, "+"))
                coker = rep.cokernel_dim * sum(kernel_dims(k))
                coker_ok &= coker == abs(k) and rep.kernel_dim == 0
        return not nonzero and coker_ok, f"nonzero indices {nonzero}; q=0 cokernel |k| check {coker_ok}"

    return _timed(6, "per-mode radial indices vanish for ak>0", 20.0, body)


def criterion_7() -> CriterionResult:
    def body():
        wrong = []
        for k in range(-6, 7):
            charts = [ChartConnection(k, "north"), ChartConnection(k, "south")]
            coarse = plaquette_chern(SphereMesh(40, 80), charts)
            fine = plaquette_chern(SphereMesh(80, 160), charts)
            if coarse != k or fine != k:
                wrong.append((k, coarse, fine))
        return not wrong, f"wrong={wrong}"

    return _timed(7, "plaquette Chern numbers are exact and mesh independent", 5.0, body)


def criterion_8(seed: int = 4) -> CriterionResult:
    def body():
        rng = np.random.default_rng(seed)
        bad = 0
        for _ in range(200):
            cfg = random_complete_config(rng)
            plus = main_index(cfg, "+")
            minus = main_index(cfg, "-")
            if not (plus.expression_1 == plus.expression_2 and minus.expression_1 == minus.expression_2):
                bad += 1
            if plus.total != -minus.total:
                bad += 1
        single = main_index(single_point_config(1, 1.0), "+").total
        return bad == 0 and single == 0, f"failures={bad}, single monopole (k=1,a=1) index={single}"

    return _timed(8, "index expressions agree and D+ / D- are antisymmetric", 10.0, body)


def criterion_9(seed: int = 5) -> CriterionResult:
    def body():
        rng = np.random.default_rng(seed)
        pts = rng.normal(size=(1000, 4))
        X = hopf_map(pts.T)
        hopf_err = float(np.max(np.abs(np.linalg.norm(X, axis=0) - np.sum(pts**2, axis=1))))
        gen_err = max(abs(float(omega_form(P) @ theta_generator(P)) - 1.0) for P in pts)
        conn = max(max(abs(v) for v in connection_residuals(P).values()) for P in pts[:50])

        asd_worst = 0.0
        slopes = []
        for k in (1, 2):
            for P in admissible_hopf_points(rng, 5, 1e-3):
                res = [asd_residual(k, P, h) for h in (1e-3, 5e-4, 1e-4)]
                asd_worst = max(asd_worst, res[-1])
                slopes.append(float(np.polyfit(np.log([1e-3, 5e-4, 1e-4]), np.log(res), 1)[0]))
        first_order = all(0.8 <= s <= 1.2 for s in slopes)

        cliff = clifford_rep_check()
        frame_err = max(lifted_clifford_residual(P) for P in pts[:20])

        dirac_worst = 0.0
        for k in (0, 1, 2):
            for P in admissible_hopf_points(rng, 3, 1e-4):
                X0 = hopf_map(P)
                for sec in (gaussian_bump_section(), polynomial_bump_section(center=X0 + 0.1, radius=0.5)):
                    dirac_worst = max(dirac_worst, dirac_intertwine_residual(k, sec, P, 1e-4))

        checks = {
            "hopf": hopf_err < 1e-12,
            "omega": gen_err < 1e-10 and conn < 1e-10,
            "asd": asd_worst < 1e-4,
            "first_order": first_order,
            "clifford": all(cliff.values()) and frame_err < 1e-12,
            "dirac": dirac_worst < 1e-3,
        }
        detail = (
            f"|pi|-r4^2 {hopf_err:.1e}; omega(d_theta)-1 {gen_err:.1e}; "
            f"ASD max {asd_worst:.2e} at h=1e-4 (slopes {min(slopes):.2f}..{max(slopes):.2f}); "
            f"Clifford exact {all(cliff.values())}, frame err {frame_err:.1e}; "
            f"Dirac intertwining max {dirac_worst:.1e}; failed={[k for k, v in checks.items() if not v]}"
        )
        return all(checks.values()), detail

    return _timed(9, "Hopf lift identities", 60.0, body)


def criterion_10() -> CriterionResult:
    def body():
        bad = []
        for k in range(-4, 5):
            for q in range(0, 7):
                for ch in "+-":
                    for sol in kernel_basis_flat(k, q, ch):
                        res = exponent_residual(sol, k, q, ch).applyfunc(lambda e: e.expand())
                        if any(e != 0 for e in res):
                            bad.append((k, q, ch, sol.label))
        return not bad, f"nonzero residuals {bad}"

    return _timed(10, "closed-form kernel solutions annihilate the massless operators", 1.0, body)


CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_all() -> list[CriterionResult]:
    return [c() for c in CRITERIA]
