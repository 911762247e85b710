"""Admissible leading coefficients (c1, c2, c3) of Schwarz functions.

The coefficient body is generated exactly by three Schur parameters
``g0, g1, g2`` in the closed unit disk through the Moebius recursion

    w0(z) = (g0 + z w1(z)) / (1 + conj(g0) z w1(z)),   w1 = (g1 + z g2) / (1 + conj(g1) z g2),

with ``omega(z) = z w0(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .powser import DEFAULT_ORDER, Series, series_add, series_div, series_mul

CONSTRAINT_TOL = 1e-12


@dataclass(frozen=True)
class SchwarzCoeffs:
    c1: complex
    c2: complex
    c3: complex

    def as_tuple(self):
        return (self.c1, self.c2, self.c3)

    def rotated(self, theta: float) -> "SchwarzCoeffs":
        """Coefficients of ``omega(e^{i theta} z)``."""
        u = np.exp(1j * theta)
        return SchwarzCoeffs(self.c1 * u, self.c2 * u**2, self.c3 * u**3)

    def to_series(self, order: int = DEFAULT_ORDER) -> Series:
        return Series.from_coeffs([0, self.c1, self.c2, self.c3], order)


@dataclass(frozen=True)
class SchurParams:
    g0: complex
    g1: complex
    g2: complex

    def __post_init__(self):
        for name in ("g0", "g1", "g2"):
            v = complex(getattr(self, name))
            if abs(v) > 1.0 + CONSTRAINT_TOL:
                raise ValueError(f"Schur parameter {name}={v} lies outside the closed unit disk")
            object.__setattr__(self, name, v)

    def as_tuple(self):
        return (self.g0, self.g1, self.g2)


def coeffs_from_schur(g: SchurParams) -> SchwarzCoeffs:
    g0, g1, g2 = g.g0, g.g1, g.g2
    s0 = 1.0 - abs(g0) ** 2
    s1 = 1.0 - abs(g1) ** 2
    return SchwarzCoeffs(g0, s0 * g1, s0 * (s1 * g2 - g0.conjugate() * g1 * g1))


def coeffs_from_schur_arrays(g0, g1, g2):
    """Vectorized :func:`coeffs_from_schur` over numpy arrays (no validation)."""
    s0 = 1.0 - np.abs(g0) ** 2
    s1 = 1.0 - np.abs(g1) ** 2
    return g0, s0 * g1, s0 * (s1 * g2 - np.conj(g0) * g1 * g1)


def omega_from_schur_series(g: SchurParams, order: int = DEFAULT_ORDER) -> Series:
    """``omega`` as a series, by composing the Moebius steps (tail parameter zero)."""
    z = Series.variable(order)
    one = Series.constant(1.0, order)
    w = Series.constant(g.g2, order)
    for gk in (g.g1, g.g0):
        zw = series_mul(z, w)
        w = series_div(series_add(Series.constant(gk, order), zw),
                       series_add(one, zw * gk.conjugate()))
    return series_mul(z, w)


def constraint_slacks(c: SchwarzCoeffs) -> tuple[float, float, float]:
    """Right side minus left side of the three coefficient-body relations.

    Nonnegative slacks mean the triple is admissible:

    * ``|c1| <= 1``
    * ``|c2| <= 1 - |c1|^2``
    * ``|c3 (1 - |c1|^2) + conj(c1) c2^2| <= (1 - |c1|^2)^2 - |c2|^2``
    """
    c1, c2, c3 = complex(c.c1), complex(c.c2), complex(c.c3)
    r = 1.0 - abs(c1) ** 2
    return (
        1.0 - abs(c1),
        r - abs(c2),
        r * r - abs(c2) ** 2 - abs(c3 * r + c1.conjugate() * c2 * c2),
    )


def validate_coeffs(c: SchwarzCoeffs, tol: float = CONSTRAINT_TOL) -> bool:
    return all(s >= -tol for s in constraint_slacks(c))


def validate_coeffs_normalized(c: SchwarzCoeffs, tol: float = CONSTRAINT_TOL) -> bool:
    """The weaker relations available once c1 is rotated to [0, 1].

    ``|c2| <= 1 - c1^2`` and ``|c3| <= 1 - c1^2 - |c2|^2 / (1 + c1)``.
    """
    c1 = complex(c.c1)
    if c1.imag != 0.0 or not 0.0 <= c1.real <= 1.0:
        raise ValueError(f"c1 must be real in [0, 1], got {c.c1!r}")
    x = c1.real
    c2, c3 = abs(complex(c.c2)), abs(complex(c.c3))
    return c2 <= 1.0 - x * x + tol and c3 <= 1.0 - x * x - c2 * c2 / (1.0 + x) + tol


def extremal_omega(order: int = DEFAULT_ORDER) -> Series:
    """The Schwarz function ``z^2`` that realizes equality in the sharp bound."""
    return Series.from_coeffs([0, 0, 1], order)


EXTREMAL_COEFFS = SchwarzCoeffs(0j, 1 + 0j, 0j)
EXTREMAL_SCHUR = SchurParams(0j, 1 + 0j, 0j)


def random_schur(rng: np.random.Generator, size: int, boundary: bool = False):
    """Uniform samples from the polydisk (area measure per factor) as three arrays.

    With ``boundary=True`` the last parameter is placed on the unit circle.
    """

    def disk(n):
        r = np.sqrt(rng.random(n))
        return r * np.exp(2j * np.pi * rng.random(n))

    g0, g1 = disk(size), disk(size)
    g2 = np.exp(2j * np.pi * rng.random(size)) if boundary else disk(size)
    return g0, g1, g2


def schur_from_coeffs(c: SchwarzCoeffs, tol: float = 1e-12) -> SchurParams:
    """Invert :func:`coeffs_from_schur` by running the Schur algorithm on (c1, c2, c3).

    Degenerate cases (``|g0| = 1`` or ``|g1| = 1``) leave the later parameters
    free; they are set to zero.
    """
    g0 = complex(c.c1)
    s0 = 1.0 - abs(g0) ** 2
    if s0 <= tol:
        return SchurParams(g0 / max(abs(g0), 1.0), 0j, 0j)
    g1 = complex(c.c2) / s0
    s1 = 1.0 - abs(g1) ** 2
    if s1 <= tol:
        return SchurParams(g0, g1 / max(abs(g1), 1.0), 0j)
    g2 = (complex(c.c3) / s0 + g0.conjugate() * g1 * g1) / s1
    if abs(g2) > 1.0:
        g2 /= abs(g2)
    return SchurParams(g0, g1, g2)
