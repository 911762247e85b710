"""Truncated power series with complex coefficients.

A :class:`Series` stores the coefficients of ``z**0 .. z**order``.  Binary
operations truncate to the smaller of the two orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

DEFAULT_ORDER = 8

Number = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class Series:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int | None = None) -> "Series":
        """Build a series, zero-padding or truncating to ``order`` when given."""
        c = np.array(list(coeffs), dtype=complex)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            out = np.zeros(order + 1, dtype=complex)
            n = min(order + 1, c.size)
            out[:n] = c[:n]
            c = out
        return cls(c)

    @classmethod
    def constant(cls, value: Number, order: int = DEFAULT_ORDER) -> "Series":
        return cls.from_coeffs([value], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.coeffs.size

    def truncate(self, order: int) -> "Series":
        return Series.from_coeffs(self.coeffs, order)

    def allclose(self, other: "Series", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self.coeffs[:n] - other.coeffs[:n]) <= atol))

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (Horner)."""
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"Series([{terms}])"

    # operator sugar over the module functions below
    def __add__(self, other):
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return Series(-self.coeffs)

    def __sub__(self, other):
        return series_add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return series_add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return series_div(self, other)
        return Series(self.coeffs / complex(other))

    def __rtruediv__(self, other):
        return series_div(_coerce(other, self.order), self)

    def __pow__(self, beta: float):
        return series_pow_real(self, beta)


def _coerce(x, order: int) -> Series:
    if isinstance(x, Series):
        return x
    return Series.constant(x, order)


def _common(a: Series, b: Series) -> int:
    return min(a.order, b.order)


def series_add(a: Series, b: Series) -> Series:
    n = _common(a, b) + 1
    return Series(a.coeffs[:n] + b.coeffs[:n])


def series_mul(a: Series, b: Series) -> Series:
    n = _common(a, b) + 1
    return Series(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def series_div(a: Series, b: Series) -> Series:
    """Quotient ``q`` with ``q * b == a`` through the common order."""
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("divisor series has zero constant term")
    n = _common(a, b) + 1
    x, y = a.coeffs[:n], b.coeffs[:n]
    q = np.zeros(n, dtype=complex)
    for k in range(n):
        q[k] = (x[k] - np.dot(q[:k], y[k:0:-1])) / y[0]
    return Series(q)


def series_derivative(a: Series) -> Series:
    """Term-wise derivative; the order drops by one (a constant stays at order 0)."""
    if a.order == 0:
        return Series([0])
    k = np.arange(1, a.order + 1)
    return Series(a.coeffs[1:] * k)


def series_integral(a: Series) -> Series:
    """Antiderivative with zero constant term; the order grows by one."""
    k = np.arange(1, a.order + 2)
    return Series(np.concatenate(([0], a.coeffs / k)))


def series_log(a: Series) -> Series:
    """``log a`` for a series with constant term 1, via ``(log a)' = a'/a``."""
    _require_normalized(a)
    if a.order == 0:
        return Series([0])
    return series_integral(series_div(series_derivative(a), a.truncate(a.order - 1)))


def series_exp(a: Series) -> Series:
    """``exp a`` for a series with zero constant term.

    Uses ``e' = a' e``, i.e. ``n e_n = sum_{k=1}^n k a_k e_{n-k}``.
    """
    if a.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant term")
    c = a.coeffs
    e = np.zeros(a.order + 1, dtype=complex)
    e[0] = 1.0
    for n in range(1, a.order + 1):
        k = np.arange(1, n + 1)
        e[n] = np.dot(k * c[1 : n + 1], e[n - 1 :: -1][:n]) / n
    return Series(e)


def series_pow_real(a: Series, beta: float) -> Series:
    """``a**beta = exp(beta log a)``; ``a`` must have constant term exactly 1."""
    _require_normalized(a)
    return series_exp(series_log(a) * float(beta))


def series_compose(a: Series, b: Series) -> Series:
    """``a(b(z))`` truncated to the common order; ``b(0)`` must vanish."""
    if b.coeffs[0] != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    n = _common(a, b)
    bb = b.truncate(n)
    acc = Series.constant(a.coeffs[n], n)
    for c in a.coeffs[n - 1 :: -1] if n > 0 else []:
        acc = series_mul(acc, bb) + c
    return acc


def _require_normalized(a: Series):
    if a.coeffs[0] != 1:
        raise ValueError(
            f"series must be normalized (constant term 1), got {a.coeffs[0]!r}; "
            "factor the constant out first"
        )


def polynomial(coeffs: Sequence[Number], order: int = DEFAULT_ORDER) -> Series:
    """Shorthand for ``Series.from_coeffs(coeffs, order)``."""
    return Series.from_coeffs(coeffs, order)
