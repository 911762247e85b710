"""Reduced-size run of the invariant suite, one line per check."""

from __future__ import annotations

import math
import sys
import time

import numpy as np

from . import coefmap, hankel, powser, schwarz, search
from .coefmap import ClassParams, gamma_max


def _random_params(rng, n, region=True):
    out = []
    for _ in range(n):
        if region:
            a = rng.uniform(1e-3, coefmap.ALPHA_REGION_MAX - 1e-3)
            g = rng.uniform(1e-3, 1.0) * gamma_max(a)
        else:
            # |a4| grows like (1 - alpha)^-3; keep absolute errors meaningful
            a, g = rng.uniform(1e-3, 0.9), rng.uniform(1e-3, 1.0)
        out.append(ClassParams(a, g))
    return out


def _random_coeffs(rng, n):
    g0, g1, g2 = schwarz.random_schur(rng, n)
    return [schwarz.SchwarzCoeffs(*map(complex, t)) for t in zip(*schwarz.coeffs_from_schur_arrays(g0, g1, g2))]


def check_series(rng):
    worst = 0.0
    for _ in range(20):
        c = rng.uniform(-1, 1, 7) + 1j * rng.uniform(-1, 1, 7)
        a = powser.Series(np.concatenate(([1.0], 0.5 * c)))
        rep = powser.Series.constant(1.0, a.order)
        for m in range(4):
            worst = max(worst, float(np.abs((a**m).coeffs - rep.coeffs).max()))
            rep = rep * a
        beta = rng.uniform(-3, 3)
        worst = max(worst, float(np.abs(((a**beta) * (a**-beta)).coeffs - np.eye(1, a.order + 1)[0]).max()))
    return worst <= 1e-12, f"max err {worst:.2e}"


def check_oracle(rng, n=200):
    worst = 0.0
    for params, c in zip(_random_params(rng, n, region=False), _random_coeffs(rng, n)):
        closed = coefmap.closed_form_coefficients(params, c)
        solved = coefmap.solve_coefficients(params, c.to_series())
        worst = max(worst, closed.max_abs_diff(solved))
    return worst <= 1e-10, f"max err {worst:.2e} over {n}"


def check_schwarz(rng, n=10_000):
    g0, g1, g2 = schwarz.random_schur(rng, n)
    worst = min(min(schwarz.constraint_slacks(schwarz.SchwarzCoeffs(*map(complex, t))))
                for t in zip(*schwarz.coeffs_from_schur_arrays(g0, g1, g2)))
    g0, g1, g2 = schwarz.random_schur(rng, n, boundary=True)
    eq = max(abs(schwarz.constraint_slacks(schwarz.SchwarzCoeffs(*map(complex, t)))[2])
             for t in zip(*schwarz.coeffs_from_schur_arrays(g0, g1, g2)))
    return worst >= -1e-12 and eq <= 1e-12, f"min slack {worst:.2e}, boundary residual {eq:.2e}"


def check_attainment():
    worst = 0.0
    for a in np.linspace(0.05, 0.55, 10):
        for k in range(1, 11):
            params = ClassParams(float(a), gamma_max(float(a)) * k / 10)
            tri = coefmap.closed_form_coefficients(params, schwarz.EXTREMAL_COEFFS)
            b = hankel.bound(params, warn=False)
            worst = max(worst, abs(abs(hankel.h22(tri)) - b) / b)
    return worst <= 1e-12, f"max rel err {worst:.2e}"


def check_domination(rng, n=1000):
    bad = 0
    for params, c in zip(_random_params(rng, n), _random_coeffs(rng, n)):
        h = abs(hankel.h22(coefmap.closed_form_coefficients(params, c)))
        tb = hankel.triangle_bound(params, c)
        if h > tb + 1e-12 or tb > hankel.bound(params, warn=False) + 1e-10:
            bad += 1
    return bad == 0, f"{bad} violations over {n}"


def check_phi():
    cert = hankel.certify_phi(1e-3)
    ends = (abs(hankel.phi1(0.0) - (15 - 10 * math.sqrt(2))) <= 1e-12
            and abs(hankel.phi1(2.0)) <= 1e-12
            and abs(hankel.phi1_prime(2.0) + 5) <= 1e-12)
    return cert.passed and ends, f"min phi1 {cert.min_phi1:.2e}, max phi1'' {cert.max_phi1_dd:.4f}"


def check_region():
    facts = hankel.certify_region(30)
    return facts.passed, f"max A {facts.max_A:.2e}, max nu1 {facts.max_nu1:.4f}, min margin {facts.min_ineq30_margin:.2e}"


def check_search():
    cfg = search.SearchConfig(restarts=4, max_iterations=200)
    worst = 0.0
    for a, frac in ((0.2, 1.0), (0.4, 0.5), (0.05, 0.9)):
        rep = search.maximize_h22(ClassParams(a, frac * gamma_max(a)), cfg)
        worst = max(worst, abs(rep.gap))
        if not -1e-8 <= rep.gap <= 1e-6:
            return False, f"gap {rep.gap:.2e} at alpha={a}"
    return True, f"max |gap| {worst:.2e}"


def check_starlike():
    alphas = np.linspace(0.01, 2 / math.pi - 0.01, 50)
    ok = all(hankel.gamma_star(float(a)) < hankel.beta_of(float(a)) for a in alphas)
    return ok, "gamma* < beta on 50 samples"


SUITES = [
    ("series identities", check_series, True),
    ("closed form vs solver", check_oracle, True),
    ("Schur parameterization", check_schwarz, True),
    ("extremal attainment", check_attainment, False),
    ("domination chain", check_domination, True),
    ("phi certificates", check_phi, False),
    ("region facts", check_region, False),
    ("search sharpness", check_search, False),
    ("starlikeness formulas", check_starlike, False),
]


def run_selftest(seed: int = 0, out=None) -> bool:
    out = out or sys.stdout
    rng = np.random.default_rng(seed)
    all_ok = True
    for name, fn, needs_rng in SUITES:
        t0 = time.perf_counter()
        try:
            ok, detail = fn(rng) if needs_rng else fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<24} {detail} ({time.perf_counter() - t0:.2f}s)", file=out)
    return all_ok
