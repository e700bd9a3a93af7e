"""Exact power series for the closed form of the 3 x 2n sequence.

    sum a_n x^n = (1 + S) / (S + x)^2 / S - (1 - x^2 + 2x^3) / (1 - x)^3,
    S = sqrt(1 - 4x)

All arithmetic is over ``fractions.Fraction`` so integrality of the result
is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class RationalSeries:
    """Power series truncated after the x**order term."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence, order: int) -> RationalSeries:
        vals = [Fraction(v) for v in values[: order + 1]]
        vals += [Fraction(0)] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _lift(self, other) -> RationalSeries:
        if isinstance(other, RationalSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        return RationalSeries.of([other], self.order)

    def __add__(self, other) -> RationalSeries:
        o = self._lift(other)
        return RationalSeries(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return RationalSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> RationalSeries:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> RationalSeries:
        return self._lift(other) - self

    def __mul__(self, other) -> RationalSeries:
        o = self._lift(other)
        n = self.order + 1
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n - i):
                    out[i + j] += a * o.coeffs[j]
        return RationalSeries(tuple(out))

    __rmul__ = __mul__

    def truncate(self, order: int) -> RationalSeries:
        return RationalSeries.of(self.coeffs, order)

    def inverse(self) -> RationalSeries:
        """Multiplicative inverse by Newton iteration g <- g (2 - f g)."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        g = RationalSeries.of([1 / self.coeffs[0]], 0)
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            f = self.truncate(prec)
            g = g.truncate(prec)
            g = g * (2 - f * g)
        return g

    def __truediv__(self, other) -> RationalSeries:
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> RationalSeries:
        return self._lift(other) * self.inverse()


def sqrt_series(order: int) -> RationalSeries:
    """sqrt(1 - 4x) to the given order, by Newton iteration s <- (s + f/s) / 2."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    target = RationalSeries.of([1, -4], order)
    s = RationalSeries.of([1], 0)
    prec = 0
    while prec < order:
        prec = min(2 * prec + 1, order)
        f = target.truncate(prec)
        s = s.truncate(prec)
        s = (s + f / s) * Fraction(1, 2)
    return s


def knuth_series(order: int) -> list[int]:
    """a_0..a_order: equal-area two-region dissections of 3 x 2n boards."""
    s = sqrt_series(order)
    x = RationalSeries.of([0, 1], order)
    algebraic = (1 + s) / ((s + x) * (s + x)) / s
    rational = RationalSeries.of([1, 0, -1, 2], order) / RationalSeries.of([1, -3, 3, -1], order)
    out = []
    for k, c in enumerate((algebraic - rational).coeffs):
        if c.denominator != 1:
            raise ArithmeticError(f"coefficient {k} is not an integer: {c}")
        out.append(int(c))
    return out
