"""Global maximization of |H2(2)| over the Schwarz coefficient body.

The feasible set is the Schur polydisk, normalized so that ``g0`` is real and
nonnegative (a rotation ``z -> e^{i theta} z`` multiplies H2(2) by a
unimodular factor).  In polar coordinates that is the box

    g0 in [0, 1], |g1| in [0, 1], arg g1 in [0, 2 pi], |g2| in [0, 1], arg g2 in [0, 2 pi]

so a bounded Nelder-Mead (which clips every trial point to the box) can run
without penalties.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import Bounds, minimize

from .coefmap import ClassParams, CoefficientTriple, closed_form_coefficients, mu_nu
from .hankel import bound, h22
from .schwarz import SchurParams, SchwarzCoeffs, coeffs_from_schur, coeffs_from_schur_arrays

log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
BOX = Bounds([0.0, 0.0, 0.0, 0.0, 0.0], [1.0, 1.0, TWO_PI, 1.0, TWO_PI])
EXTREMAL_START = np.array([0.0, 1.0, 0.0, 0.0, 0.0])
THREADS_ENV = "HANKEL_LAB_THREADS"


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 64
    max_iterations: int = 500
    tolerance: float = 1e-9
    seed: int = 0
    grid_resolution: int = 21

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1 or self.grid_resolution < 1:
            raise ValueError("restarts, max_iterations and grid_resolution must be positive")
        if not 0.0 < self.tolerance < 1e-3:
            raise ValueError("tolerance must lie in (0, 1e-3)")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass
class SearchReport:
    alpha: float
    gamma: float
    best_schur: SchurParams
    best_coeffs: SchwarzCoeffs
    best_triple: CoefficientTriple
    attained: float
    theoretical: float
    gap: float
    in_region: bool
    iterations_used: int
    restarts_converged: int
    restarts: int

    @property
    def exploratory(self) -> bool:
        return not self.in_region

    def to_dict(self) -> dict:
        def cx(z):
            z = complex(z)
            return [z.real, z.imag]

        return {
            "alpha": self.alpha,
            "gamma": self.gamma,
            "in_region": self.in_region,
            "exploratory": self.exploratory,
            "attained": self.attained,
            "theoretical": self.theoretical,
            "gap": self.gap,
            "best_schur": {k: cx(v) for k, v in zip(("g0", "g1", "g2"), self.best_schur.as_tuple())},
            "best_coeffs": {k: cx(v) for k, v in zip(("c1", "c2", "c3"), self.best_coeffs.as_tuple())},
            "best_triple": {k: cx(v) for k, v in zip(("a2", "a3", "a4"), self.best_triple.as_tuple())},
            "iterations_used": self.iterations_used,
            "restarts": self.restarts,
            "restarts_converged": self.restarts_converged,
        }


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def _box_to_schur(x) -> tuple[complex, complex, complex]:
    g0 = min(max(x[0], 0.0), 1.0)
    r1 = min(max(x[1], 0.0), 1.0)
    r2 = min(max(x[3], 0.0), 1.0)
    return complex(g0, 0.0), r1 * complex(math.cos(x[2]), math.sin(x[2])), r2 * complex(math.cos(x[4]), math.sin(x[4]))


class _Objective:
    """|H2(2)| as a function of the box coordinates, with the class constants cached."""

    def __init__(self, params: ClassParams):
        a, g = params.alpha, params.gamma
        mu, nu = mu_nu(params)
        self.k2 = 2.0 * g / (1.0 - a)
        self.k3 = 2.0 * g / (2.0 - a)
        self.k3b = 2.0 * (3.0 - a) * g * g / ((1.0 - a) ** 2 * (2.0 - a))
        self.k4 = 2.0 * g / (3.0 - a)
        self.mu, self.nu = mu, nu

    def value(self, x) -> float:
        g0, g1, g2 = _box_to_schur(x)
        s0 = 1.0 - g0.real * g0.real
        c1 = g0
        c2 = s0 * g1
        c3 = s0 * ((1.0 - abs(g1) ** 2) * g2 - g0 * g1 * g1)
        a2 = self.k2 * c1
        a3 = self.k3 * c2 + self.k3b * c1 * c1
        a4 = self.k4 * (c3 + self.mu * c1 * c2 + self.nu * c1 * c1 * c1)
        return abs(a2 * a4 - a3 * a3)

    def __call__(self, x) -> float:
        return -self.value(x)

    def arrays(self, c1, c2, c3):
        a2 = self.k2 * c1
        a3 = self.k3 * c2 + self.k3b * c1 * c1
        a4 = self.k4 * (c3 + self.mu * c1 * c2 + self.nu * c1**3)
        return np.abs(a2 * a4 - a3 * a3)


def _initial_simplex(x0: np.ndarray, scale: float) -> np.ndarray:
    lo, hi = BOX.lb, BOX.ub
    step = scale * (hi - lo)
    sim = [x0]
    for i in range(x0.size):
        y = x0.copy()
        y[i] = y[i] + step[i] if y[i] + step[i] <= hi[i] else y[i] - step[i]
        sim.append(y)
    return np.array(sim)


def _local_run(obj: _Objective, x0: np.ndarray, config: SearchConfig, scale: float):
    res = minimize(
        obj,
        x0,
        method="Nelder-Mead",
        bounds=BOX,
        options={
            "maxiter": config.max_iterations,
            "xatol": 1e-10,
            "fatol": config.tolerance,
            "initial_simplex": _initial_simplex(x0, scale),
        },
    )
    x = np.clip(res.x, BOX.lb, BOX.ub)
    return x, obj.value(x), int(res.nit), bool(res.success)


def starting_points(config: SearchConfig) -> list[np.ndarray]:
    """The extremal seed followed by ``restarts`` random interior points."""
    ss = np.random.SeedSequence(config.seed)
    starts = [EXTREMAL_START.copy()]
    for child in ss.spawn(config.restarts):
        u = np.random.default_rng(child).random(5)
        starts.append(BOX.lb + u * (BOX.ub - BOX.lb))
    return starts


def maximize_h22(params: ClassParams, config: SearchConfig | None = None) -> SearchReport:
    config = config or SearchConfig()
    obj = _Objective(params)
    starts = starting_points(config)
    scales = [0.01] + [0.1] * config.restarts

    def run(i):
        return _local_run(obj, starts[i], config, scales[i])

    workers = min(thread_count(), len(starts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(len(starts))))
    else:
        results = [run(i) for i in range(len(starts))]

    # ordered reduction: first index wins ties
    best = 0
    for i, r in enumerate(results):
        if r[1] > results[best][1]:
            best = i
    x, attained, _, _ = results[best]
    schur = SchurParams(*_box_to_schur(x))
    coeffs = coeffs_from_schur(schur)
    triple = closed_form_coefficients(params, coeffs)
    attained = abs(h22(triple))
    theoretical = bound(params, warn=False)
    report = SearchReport(
        alpha=params.alpha,
        gamma=params.gamma,
        best_schur=schur,
        best_coeffs=coeffs,
        best_triple=triple,
        attained=attained,
        theoretical=theoretical,
        gap=theoretical - attained,
        in_region=params.in_region,
        iterations_used=sum(r[2] for r in results),
        restarts_converged=sum(r[3] for r in results),
        restarts=len(results),
    )
    if report.in_region and report.gap < -1e-8:
        log.warning("bound exceeded in region: alpha=%s gamma=%s gap=%.3e", params.alpha, params.gamma, report.gap)
    return report


def brute_force_grid(params: ClassParams, resolution: int = 21) -> float:
    """Max of |H2(2)| over a product grid of the normalized polydisk.

    Radii run over ``linspace(0, 1, resolution)`` and angles over
    ``linspace(0, 2 pi, resolution)``, so grids with (resolution - 1) dividing
    each other nest, and the extremal node g = (0, 1, 0) is always present.
    """
    if resolution < 5:
        raise ValueError("resolution must be at least 5")
    obj = _Objective(params)
    radii = np.linspace(0.0, 1.0, resolution)
    angles = np.exp(1j * np.linspace(0.0, TWO_PI, resolution))
    ring = (radii[:, None] * angles[None, :]).ravel()
    G1, G2 = np.meshgrid(ring, ring, indexing="ij")
    G1, G2 = G1.ravel(), G2.ravel()
    best = 0.0
    for g0 in radii:
        c1, c2, c3 = coeffs_from_schur_arrays(np.full(G1.shape, g0 + 0j), G1, G2)
        best = max(best, float(obj.arrays(c1, c2, c3).max()))
    return best
