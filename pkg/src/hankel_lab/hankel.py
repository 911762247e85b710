"""Second Hankel determinant, the sharp bound, and the inequalities behind it."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .coefmap import ALPHA_REGION_MAX, ClassParams, CoefficientTriple, gamma_max, mu_nu
from .schwarz import SchwarzCoeffs

STRICT_SLACK = 1e-12
PHI1_DD_PAPER_BOUND = (62.0 - 45.0 * math.sqrt(2.0)) / 8.0


class OutsideRegionWarning(UserWarning):
    """The requested (alpha, gamma) is outside the region where the bound is proved."""


def h22(a: CoefficientTriple) -> complex:
    return a.a2 * a.a4 - a.a3 * a.a3


def bound(params: ClassParams, warn: bool = True) -> float:
    """(2 gamma / (2 - alpha))^2, warning (not failing) outside the proved region."""
    if warn and not params.in_region:
        warnings.warn(
            f"alpha={params.alpha}, gamma={params.gamma} is outside the proved region",
            OutsideRegionWarning,
            stacklevel=2,
        )
    return (2.0 * params.gamma / (2.0 - params.alpha)) ** 2


def c2_weight(alpha: float) -> float:
    """(1 - alpha)(3 - alpha)/(2 - alpha)^2, the |c2|^2 weight and F(0)."""
    return (1.0 - alpha) * (3.0 - alpha) / (2.0 - alpha) ** 2


@dataclass(frozen=True)
class ProofIntermediates:
    alpha: float
    gamma: float
    mu: float
    nu: float
    mu1: float
    nu1: float
    A: float
    B: float
    F0: float = field(repr=False)

    @property
    def prefactor(self) -> float:
        """4 gamma^2 / ((1 - alpha)(3 - alpha))."""
        return 4.0 * self.gamma**2 / ((1.0 - self.alpha) * (3.0 - self.alpha))

    def F(self, c1):
        return self.F0 + self.A * c1**2 + self.B * c1**4

    @property
    def F_max(self) -> float:
        """max of F over [0, 1] as concluded in the proof: F(0)."""
        return self.F0


def proof_intermediates(params: ClassParams) -> ProofIntermediates:
    a, g = params.alpha, params.gamma
    mu, nu = mu_nu(params)
    d2 = (2.0 - a) ** 2
    mu1 = 2.0 * g / d2
    nu1 = (a * a - 10.0 * a + 13.0) * g * g / (3.0 * (1.0 - a) ** 2 * d2)
    A = (2.0 * g - (a * a - 4.0 * a + 2.0)) / d2
    B = abs(1.0 / 3.0 - nu1) - (2.0 * g + 1.0) / d2
    return ProofIntermediates(a, g, mu, nu, mu1, nu1, A, B, c2_weight(a))


def F_majorant(params: ClassParams, c1):
    """The quartic majorant F(c1) = F(0) + A c1^2 + B c1^4 on [0, 1]."""
    x = np.asarray(c1, dtype=float)
    if np.any((x < 0.0) | (x > 1.0)):
        raise ValueError("c1 must lie in [0, 1]")
    val = proof_intermediates(params).F(x)
    return float(val) if np.ndim(val) == 0 else val


def hankel_expansion(params: ClassParams, c: SchwarzCoeffs) -> complex:
    """H2(2) written directly in c1, c2, c3 (prefactor times the bracketed quartic)."""
    pi = proof_intermediates(params)
    c1, c2, c3 = complex(c.c1), complex(c.c2), complex(c.c3)
    inner = (c1 * c3 + pi.mu1 * c1 * c1 * c2 + (1.0 / 3.0 - pi.nu1) * c1**4
             - pi.F0 * c2 * c2)
    return pi.prefactor * inner


def triangle_bound(params: ClassParams, c: SchwarzCoeffs) -> float:
    """Termwise absolute bound on the H2(2) expansion."""
    pi = proof_intermediates(params)
    r1, r2, r3 = abs(c.c1), abs(c.c2), abs(c.c3)
    inner = r1 * r3 + pi.mu1 * r1 * r1 * r2 + abs(1.0 / 3.0 - pi.nu1) * r1**4 + pi.F0 * r2 * r2
    return pi.prefactor * inner


def ineq30_margin(params: ClassParams) -> float:
    """F(0) - |1/3 - nu1|; positive when the key endpoint inequality holds."""
    pi = proof_intermediates(params)
    return pi.F0 - abs(1.0 / 3.0 - pi.nu1)


def check_ineq_30(params: ClassParams) -> bool:
    return ineq30_margin(params) > STRICT_SLACK


# ---------------------------------------------------------------- polynomials


def phi(alpha):
    """4(1-a)^2(4a^2-16a+13) - (a^2-4a+2)^2 (a^2-10a+13)."""
    a = np.asarray(alpha, dtype=float)
    val = 4.0 * (1.0 - a) ** 2 * (4.0 * a * a - 16.0 * a + 13.0) - (a * a - 4.0 * a + 2.0) ** 2 * (
        a * a - 10.0 * a + 13.0
    )
    return float(val) if val.ndim == 0 else val


def _t_arg(t):
    x = np.asarray(t, dtype=float)
    if np.any((x < 0.0) | (x > 2.0)):
        raise ValueError("t must lie in [0, 2]")
    return x


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def phi1(t):
    """phi after the substitution t = a^2 - 4a + 2, as displayed: phi(2 - sqrt(2+t)) / 4."""
    x = _t_arg(t)
    s = np.sqrt(2.0 + x)
    return _out(0.25 * (2.0 + x) * (30.0 + 19.0 * x - x * x - (20.0 + 6.0 * x) * s))


def phi1_prime(t):
    x = _t_arg(t)
    s = np.sqrt(2.0 + x)
    return _out(0.25 * (68.0 + 34.0 * x - 3.0 * x * x - (42.0 + 15.0 * x) * s))


def phi1_double_prime(t):
    x = _t_arg(t)
    s = np.sqrt(2.0 + x)
    return _out(0.125 * (68.0 - 12.0 * x - 45.0 * s - 12.0 / s))


# ---------------------------------------------------------------- starlikeness


def _starlike_radicand(alpha: float) -> float:
    if not 0.0 < alpha < 2.0 / math.pi:
        raise ValueError(f"alpha must lie in (0, 2/pi), got {alpha}")
    return math.sqrt(2.0 / (math.pi * alpha) - 1.0)


def gamma_star(alpha: float) -> float:
    r = _starlike_radicand(alpha)
    return 2.0 / math.pi * math.atan(r) - alpha * r


def beta_of(alpha: float) -> float:
    return 2.0 / math.pi * math.atan(_starlike_radicand(alpha))


# ---------------------------------------------------------------- certificates


@dataclass
class PhiCertificate:
    step: float
    min_phi1: float
    argmin_phi1: float
    max_phi1_dd: float
    phi1_prime_0: float
    phi1_prime_2: float
    prime_sign_changes: int
    min_phi_alpha: float

    @property
    def checks(self) -> dict:
        return {
            "phi1 >= -1e-9": self.min_phi1 >= -1e-9,
            "phi1'' <= -1e-3": self.max_phi1_dd <= -1e-3,
            "phi1' has one sign change": self.prime_sign_changes == 1,
            "phi >= -1e-9 on alpha grid": self.min_phi_alpha >= -1e-9,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def certify_phi(step: float = 1e-4) -> PhiCertificate:
    """Dense-grid sign certificate for phi1, phi1', phi1'' on [0, 2] and phi on (0, 2 - sqrt 2)."""
    if not 0.0 < step <= 1e-2:
        raise ValueError("step must lie in (0, 1e-2]")
    n = int(round(2.0 / step))
    t = np.linspace(0.0, 2.0, n + 1)
    p = phi1(t)
    dp = phi1_prime(t)
    ddp = phi1_double_prime(t)
    signs = np.sign(dp)
    signs = signs[signs != 0]
    m = int(round(ALPHA_REGION_MAX / step))
    alphas = np.linspace(0.0, ALPHA_REGION_MAX, m + 1)[1:-1]
    k = int(np.argmin(p))
    return PhiCertificate(
        step=step,
        min_phi1=float(p[k]),
        argmin_phi1=float(t[k]),
        max_phi1_dd=float(ddp.max()),
        phi1_prime_0=float(dp[0]),
        phi1_prime_2=float(dp[-1]),
        prime_sign_changes=int(np.count_nonzero(np.diff(signs))),
        min_phi_alpha=float(phi(alphas).min()),
    )


@dataclass
class RegionFacts:
    n_points: int
    max_A: float
    min_nu1: float
    max_nu1: float
    min_ineq30_margin: float
    any_B_positive: bool

    @property
    def checks(self) -> dict:
        return {
            "A <= 0": self.max_A <= 0.0,
            "0 < nu1 < 13/12": self.min_nu1 > 0.0 and self.max_nu1 < 13.0 / 12.0,
            "ineq30 margin > 1e-9": self.min_ineq30_margin > 1e-9,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def region_grid(n: int = 100):
    """n x n points inside the proved region.

    alpha takes cell midpoints of (0, 2 - sqrt 2); gamma runs over the
    fractions k/n (k = 1..n) of gamma_max(alpha), so the boundary is included.
    """
    alphas = (np.arange(n) + 0.5) / n * ALPHA_REGION_MAX
    for a in alphas:
        gm = gamma_max(float(a))
        for k in range(1, n + 1):
            yield ClassParams(float(a), min(gm * k / n, gm))


def certify_region(n: int = 100) -> RegionFacts:
    As, nus, margins, bpos = [], [], [], False
    for params in region_grid(n):
        pi = proof_intermediates(params)
        As.append(pi.A)
        nus.append(pi.nu1)
        margins.append(pi.F0 - abs(1.0 / 3.0 - pi.nu1))
        bpos = bpos or pi.B > 0.0
    return RegionFacts(len(As), max(As), min(nus), max(nus), min(margins), bpos)
