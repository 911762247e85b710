"""Exit criteria. Each test records one PASS/FAIL line, listed in the terminal summary."""

import math
import subprocess
import sys
import time

import mpmath
import numpy as np
import pytest

from conftest import sample_coeffs, sample_params, sample_region_params
from hankel_lab import coefmap, hankel, schwarz, search
from hankel_lab.coefmap import ClassParams, gamma_max

RESULTS = []
SQRT2 = math.sqrt(2.0)


def record(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def theorem_grid():
    """10 alphas spanning [0.05, 0.55] times gamma = k/10 of the region maximum."""
    for a in np.linspace(0.05, 0.55, 10):
        gm = gamma_max(float(a))
        for k in range(1, 11):
            yield ClassParams(float(a), gm * k / 10)


def test_c1_extremal_attainment():
    t0 = time.perf_counter()
    worst = 0.0
    for params in theorem_grid():
        b = hankel.bound(params)
        tri = coefmap.solve_coefficients(params, schwarz.extremal_omega())
        worst = max(worst, abs(abs(hankel.h22(tri)) - b) / b)
    dt = time.perf_counter() - t0
    record("1 extremal attainment", worst <= 1e-12 and dt < 1.0, f"max rel err {worst:.2e}, {dt:.3f}s")


@pytest.mark.slow
def test_c2_sharpness_by_search():
    t0 = time.perf_counter()
    config = search.SearchConfig()
    lo = hi = 0.0
    bad = []
    for params in theorem_grid():
        rep = search.maximize_h22(params, config)
        d = rep.attained - rep.theoretical
        lo, hi = min(lo, d), max(hi, d)
        if not -1e-6 <= d <= 1e-8:
            bad.append((params.alpha, params.gamma, d))
    dt = time.perf_counter() - t0
    record("2 sharpness by search", not bad and dt < 300,
           f"attained - bound in [{lo:.2e}, {hi:.2e}], {len(bad)} misses, {dt:.1f}s")


def test_c3_oracle_equivalence():
    rng = np.random.default_rng(3)
    t0 = time.perf_counter()
    worst = 0.0
    for params, c in zip(sample_params(rng, 1000, alpha_max=0.9), sample_coeffs(rng, 1000)):
        closed = coefmap.closed_form_coefficients(params, c)
        solved = coefmap.solve_coefficients(params, c.to_series())
        worst = max(worst, closed.max_abs_diff(solved))
    dt = time.perf_counter() - t0
    record("3 oracle equivalence", worst <= 1e-10 and dt < 10, f"max err {worst:.2e} over 1000, {dt:.2f}s")


def _slacks(c1, c2, c3):
    r = 1.0 - np.abs(c1) ** 2
    return (1.0 - np.abs(c1), r - np.abs(c2), r * r - np.abs(c2) ** 2 - np.abs(c3 * r + np.conj(c1) * c2 * c2))


def test_c4_constraint_soundness():
    rng = np.random.default_rng(4)
    n = 100_000
    s = _slacks(*schwarz.coeffs_from_schur_arrays(*schwarz.random_schur(rng, n)))
    worst = min(float(x.min()) for x in s)
    sb = _slacks(*schwarz.coeffs_from_schur_arrays(*schwarz.random_schur(rng, n, boundary=True)))
    eq = float(np.abs(sb[2]).max())
    # spot-check the vectorized slacks against the scalar validator
    spot = all(schwarz.validate_coeffs(c) for c in sample_coeffs(rng, 1000))
    record("4 constraint soundness", worst >= -1e-12 and eq <= 1e-12 and spot,
           f"min slack {worst:.2e} over {n}, boundary residual {eq:.2e}")


def test_c5_proof_chain_domination():
    rng = np.random.default_rng(5)
    n = 10_000
    link1 = link2 = 0
    for params, c in zip(sample_region_params(rng, n), sample_coeffs(rng, n)):
        h = abs(hankel.h22(coefmap.closed_form_coefficients(params, c)))
        tb = hankel.triangle_bound(params, c)
        link1 += h > tb
        link2 += tb > hankel.bound(params) + 1e-10
    record("5 proof-chain domination", link1 == 0 and link2 == 0,
           f"|H| > triangle: {link1}, triangle > bound: {link2} over {n}")


def test_c6_polynomial_certificates():
    checks = {
        "phi1(0)": abs(hankel.phi1(0.0) - (15 - 10 * SQRT2)) <= 1e-12,
        "phi1(2)": abs(hankel.phi1(2.0)) <= 1e-12,
        "phi1'(0)": abs(hankel.phi1_prime(0.0) - (17 - 10.5 * SQRT2)) <= 1e-12,
        "phi1'(2)": abs(hankel.phi1_prime(2.0) + 5.0) <= 1e-12,
    }
    t = np.linspace(0.0, 2.0, 20001)
    checks["phi1'' < 0"] = bool(np.all(hankel.phi1_double_prime(t) < 0))
    checks["phi1 >= -1e-9"] = bool(np.all(hankel.phi1(t) >= -1e-9))
    mpmath.mp.dps = 40
    ref = (mpmath.mpf(62) - 45 * mpmath.sqrt(2)) / 8
    checks["(62-45 sqrt2)/8"] = abs(hankel.PHI1_DD_PAPER_BOUND - float(ref)) <= 1e-12
    failed = [k for k, v in checks.items() if not v]
    record("6 polynomial certificates", not failed, f"failed: {failed or 'none'}")


def test_c7_region_facts():
    facts = hankel.certify_region(100)
    record("7 region facts", facts.passed and facts.n_points == 10_000,
           f"max A {facts.max_A:.2e}, nu1 in [{facts.min_nu1:.4f}, {facts.max_nu1:.4f}], "
           f"min ineq30 margin {facts.min_ineq30_margin:.2e}")


def test_c8_determinism():
    cmd = [sys.executable, "-m", "hankel_lab", "search", "--alpha", "0.3", "--gamma", "0.3",
           "--seed", "7", "--restarts", "8"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    record("8 determinism", a == b and len(a) > 0, f"{len(a)} bytes, identical={a == b}")


def test_c9_theorem_a_formulas():
    mpmath.mp.dps = 40
    rng = np.random.default_rng(9)
    worst = 0.0
    for a in rng.uniform(0.0, 2 / math.pi, 100):
        if a == 0.0:
            continue
        x = mpmath.mpf(a)
        r = mpmath.sqrt(2 / (mpmath.pi * x) - 1)
        beta = 2 / mpmath.pi * mpmath.atan(r)
        worst = max(worst, abs(hankel.gamma_star(a) - float(beta - x * r)), abs(hankel.beta_of(a) - float(beta)))
    record("9 Theorem A formulas", worst <= 1e-12, f"max err {worst:.2e} over 100")
