"""Taylor coefficients a2, a3, a4 of a class member from its Schwarz function.

Members ``f(z) = z + a2 z^2 + ...`` satisfy

    (f(z)/z)^(-(1+alpha)) f'(z) = ((1 + w(z)) / (1 - w(z)))^gamma

for a Schwarz function ``w``.  Two independent routes are provided: an
order-by-order solver of that identity and the explicit closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .powser import Series, series_add, series_derivative, series_div, series_mul, series_pow_real

ALPHA_REGION_MAX = 2.0 - math.sqrt(2.0)


def gamma_max(alpha: float) -> float:
    """Largest gamma of the sharp-bound region at ``alpha``: (alpha^2 - 4 alpha + 2)/2."""
    return 0.5 * (alpha * alpha - 4.0 * alpha + 2.0)


@dataclass(frozen=True)
class ClassParams:
    alpha: float
    gamma: float

    def __post_init__(self):
        a, g = float(self.alpha), float(self.gamma)
        if not 0.0 < a < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {a}")
        if not 0.0 < g <= 1.0:
            raise ValueError(f"gamma must lie in (0, 1], got {g}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "gamma", g)

    @property
    def in_region(self) -> bool:
        """Whether (alpha, gamma) lies where the sharp bound is proved."""
        return self.alpha < ALPHA_REGION_MAX and self.gamma <= gamma_max(self.alpha)


@dataclass(frozen=True)
class CoefficientTriple:
    a2: complex
    a3: complex
    a4: complex

    def as_tuple(self):
        return (self.a2, self.a3, self.a4)

    def max_abs_diff(self, other: "CoefficientTriple") -> float:
        return max(abs(x - y) for x, y in zip(self.as_tuple(), other.as_tuple()))


def rhs_series(omega: Series, gamma: float, order: int) -> Series:
    """Expansion of ((1+w)/(1-w))^gamma through z^order.

    Coefficients of ``omega`` beyond its stored order are taken as zero.
    """
    if omega.coeffs[0] != 0:
        raise ValueError("omega must vanish at the origin")
    w = omega.truncate(order)
    one = Series.constant(1.0, order)
    ratio = series_div(series_add(one, w), series_add(one, -w))
    return series_pow_real(ratio, gamma)


def lhs_series(params: ClassParams, p: Series) -> Series:
    """(f/z)^(-(1+alpha)) f' written in terms of ``p = f/z``.

    With ``f = z p`` we have ``f' = p + z p'``.
    """
    if p.order == 0:
        return Series.constant(1.0, 0)
    z_dp = Series.from_coeffs([0j, *series_derivative(p).coeffs], p.order)
    fprime = series_add(p, z_dp)
    return series_mul(series_pow_real(p, -(1.0 + params.alpha)), fprime)


def solve_series(params: ClassParams, omega: Series, order: int = 3) -> Series:
    """``p = f/z`` through z^order by forward recursion on the functional identity.

    The z^n equation involves the unknown p_n only through ``(n - alpha) p_n``,
    so each p_n follows from p_0..p_{n-1}.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    rhs = rhs_series(omega, params.gamma, order)
    p = [0j] * (order + 1)
    p[0] = 1.0 + 0j
    for n in range(1, order + 1):
        trial = Series.from_coeffs(p[: n + 1], n)
        residual = rhs.coeffs[n] - lhs_series(params, trial).coeffs[n]
        p[n] = residual / (n - params.alpha)
    return Series(p)


def solve_coefficients(params: ClassParams, omega: Series) -> CoefficientTriple:
    p = solve_series(params, omega, 3)
    return CoefficientTriple(complex(p[1]), complex(p[2]), complex(p[3]))


def mu_nu(params: ClassParams) -> tuple[float, float]:
    a, g = params.alpha, params.gamma
    mu = 2.0 * (5.0 - a) * g / ((1.0 - a) * (2.0 - a))
    nu = 1.0 / 3.0 + (2.0 / 3.0) * (a * a - 6.0 * a + 17.0) * g * g / ((1.0 - a) ** 3 * (2.0 - a))
    return mu, nu


def closed_form_coefficients(params: ClassParams, c) -> CoefficientTriple:
    """a2, a3, a4 from c1, c2, c3 by the explicit formulas."""
    a, g = params.alpha, params.gamma
    c1, c2, c3 = complex(c.c1), complex(c.c2), complex(c.c3)
    mu, nu = mu_nu(params)
    a2 = 2.0 * g / (1.0 - a) * c1
    a3 = 2.0 * g / (2.0 - a) * c2 + 2.0 * (3.0 - a) * g * g / ((1.0 - a) ** 2 * (2.0 - a)) * c1 * c1
    a4 = 2.0 * g / (3.0 - a) * (c3 + mu * c1 * c2 + nu * c1**3)
    return CoefficientTriple(a2, a3, a4)
