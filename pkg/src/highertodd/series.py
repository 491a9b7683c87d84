"""Truncated one-variable power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import SeriesNotNilpotent, SeriesNotUnital


class PowerSeries1:
    """``a_0 + a_1 x + ... + a_N x^N``, arithmetic closed under truncation at N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries1({[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> PowerSeries1:
        return PowerSeries1(self.coeffs, order)

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries1([self[i] + other[i] for i in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return PowerSeries1([self[i] - other[i] for i in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries1([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries1(out)

    __rmul__ = __mul__

    def inverse(self) -> PowerSeries1:
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / self[0]
        for k in range(1, n + 1):
            s = sum(self[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -s * inv[0]
        return PowerSeries1(inv)

    def __truediv__(self, other):
        return self * other.inverse()

    def derivative(self) -> PowerSeries1:
        return PowerSeries1([i * self.coeffs[i] for i in range(1, len(self.coeffs))] or [0])

    def even_part(self) -> PowerSeries1:
        """Series in ``y = x**2``: coefficients a_0, a_2, a_4, ..."""
        return PowerSeries1(self.coeffs[::2])


def series_log(s: PowerSeries1) -> PowerSeries1:
    """Formal logarithm of a series with constant term 1."""
    if s[0] != 1:
        raise SeriesNotUnital(f"log needs constant term 1, got {s[0]}")
    n = s.order
    # log' = s'/s, integrated term by term
    q = (s.derivative().truncate(n) * s.inverse()).coeffs
    out = [Fraction(0)] + [q[k - 1] / k for k in range(1, n + 1)]
    return PowerSeries1(out)


def series_exp(s: PowerSeries1) -> PowerSeries1:
    """Formal exponential of a series with zero constant term."""
    if s[0] != 0:
        raise SeriesNotNilpotent(f"exp needs constant term 0, got {s[0]}")
    n = s.order
    # e' = s' e  =>  k e_k = sum_{i=1}^k i s_i e_{k-i}
    e = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for k in range(1, n + 1):
        e[k] = sum(i * s[i] * e[k - i] for i in range(1, k + 1)) / k
    return PowerSeries1(e)


def todd_series(N: int) -> PowerSeries1:
    """``x / (1 - e^{-x})`` to order N."""
    # (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
    denom = PowerSeries1([Fraction((-1) ** k, factorial(k + 1)) for k in range(N + 1)])
    return denom.inverse()


def l_series(N: int) -> PowerSeries1:
    """``x / tanh(x)`` to order N."""
    cosh = [Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(N + 1)]
    sinh_over_x = [Fraction(1, factorial(k + 1)) if k % 2 == 0 else Fraction(0)
                   for k in range(N + 1)]
    return PowerSeries1(cosh) * PowerSeries1(sinh_over_x).inverse()


def ahat_series(N: int) -> PowerSeries1:
    """``(x/2) / sinh(x/2)`` to order N."""
    half = Fraction(1, 2)
    sinh_over = [half ** k / factorial(k + 1) if k % 2 == 0 else Fraction(0)
                 for k in range(N + 1)]
    return PowerSeries1(sinh_over).inverse()
