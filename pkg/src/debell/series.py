"""Truncated formal power series over exact rationals.

A series is a fixed-length coefficient vector ``c[0..order]``; every operation
truncates at that order.  Binary operations require equal orders (use
``truncate`` to align them first).  exp, log, and inverse use the classical
O(order^2) differential recurrences, which is plenty at the desk-scale orders
used here; there is deliberately no asymptotically fast multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .exact import as_rat

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_rat(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([_ONE] + [_ZERO] * order)

    @classmethod
    def monomial(cls, coeff, degree: int, order: int) -> "TruncatedSeries":
        if not 0 <= degree <= order:
            raise ValueError(f"degree {degree} out of range for order {order}")
        cs = [_ZERO] * (order + 1)
        cs[degree] = as_rat(coeff)
        return cls(cs)

    # -- basic protocol -------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} out of range 0..{self.order}")
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def _same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self._coeffs)

    def scale(self, c) -> "TruncatedSeries":
        c = as_rat(c)
        return TruncatedSeries(c * a for a in self._coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        n = self.order
        a, b = self._coeffs, other._coeffs
        out = [_ZERO] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return TruncatedSeries(out)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 series")
        return TruncatedSeries(k * c for k, c in enumerate(self._coeffs) if k >= 1)

    def valuation(self):
        """Index of the lowest nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return None

    # -- multiplicative transcendentals ---------------------------------------

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal series; requires a nonzero constant term."""
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("inverse requires a nonzero constant term")
        n = self.order
        inv0 = 1 / a[0]
        out = [inv0] + [_ZERO] * n
        for m in range(1, n + 1):
            acc = _ZERO
            for j in range(1, m + 1):
                if a[j] != 0:
                    acc += a[j] * out[m - j]
            out[m] = -inv0 * acc
        return TruncatedSeries(out)

    def exp(self) -> "TruncatedSeries":
        """Formal exponential; requires constant term 0."""
        a = self._coeffs
        if a[0] != 0:
            raise ValueError("exp requires constant term 0")
        n = self.order
        out = [_ONE] + [_ZERO] * n
        for m in range(1, n + 1):
            acc = _ZERO
            for j in range(1, m + 1):
                if a[j] != 0:
                    acc += j * a[j] * out[m - j]
            out[m] = acc / m
        return TruncatedSeries(out)

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; requires constant term 1."""
        a = self._coeffs
        if a[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        out = [_ZERO] * (n + 1)
        for m in range(1, n + 1):
            acc = _ZERO
            for j in range(1, m):
                if a[m - j] != 0 and out[j] != 0:
                    acc += j * out[j] * a[m - j]
            out[m] = a[m] - acc / m
        return TruncatedSeries(out)

    def pow_int(self, m: int) -> "TruncatedSeries":
        """Nonnegative integer power, truncated to the series order."""
        if m < 0:
            raise ValueError("pow_int needs a nonnegative exponent")
        if m == 0:
            return TruncatedSeries.one(self.order)
        v = self.valuation()
        if v is None or v * m > self.order:
            return TruncatedSeries.zero(self.order)
        result = None
        base = self
        while m:
            if m & 1:
                result = base if result is None else result * base
            m >>= 1
            if m:
                base = base * base
        return result

    # -- coefficient extraction -----------------------------------------------

    def egf_coeff(self, n: int) -> Fraction:
        """n! times the t^n coefficient (the value an EGF encodes at index n)."""
        if not 0 <= n <= self.order:
            raise ValueError(f"index {n} outside 0..{self.order}")
        return factorial(n) * self._coeffs[n]


def binpow(alpha, c, order: int) -> TruncatedSeries:
    """The series (1 + alpha t)^(c/alpha); at alpha = 0 the limit exp(c t).

    The alpha = 0 branch is the first-class degenerate case, with coefficients
    c^n / n!.
    """
    alpha = as_rat(alpha)
    c = as_rat(c)
    if alpha == 0:
        return TruncatedSeries(c**n / factorial(n) for n in range(order + 1))
    coeffs = [_ZERO] * (order + 1)
    coeffs[0] = _ONE
    if order >= 1:
        coeffs[1] = alpha
    base = TruncatedSeries(coeffs)
    return base.log().scale(c / alpha).exp()
