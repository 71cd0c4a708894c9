"""Large-exponent behaviour of series-power coefficients.

For a base series Omega(t) = sum b_n t^n with b_0 = 1 and an exponent delta,
the coefficient [t^n] Omega^delta expands as

    a(delta, n) / (delta)_n = sum_{f=0}^{m} W(n, f) / (delta-n+f)_f + remainder,

where W(n, f) sums, over the integer partitions of n with n-f parts,
prod_i b_i^{k_i} / k_i!.  Applied to the deranged-Bell family the base is
b_i = B[i at lam=1] / i!, the exact side is B[n] at lam = delta with gamma
scaled by delta, and everything is evaluated in exact rational arithmetic at
finite delta.  For r >= 1 the base has b_0 = 0, which breaks the Omega(0) = 1
premise; such runs are diagnostic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bell import _lambda1, bell_egf
from .exact import ParamSet, as_rat, falling

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class IntPartition:
    """An integer partition stored as multiplicities: mult[i-1] copies of i."""

    mult: tuple

    def __post_init__(self):
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def total(self) -> int:
        return sum((i + 1) * m for i, m in enumerate(self.mult))

    @property
    def parts(self) -> int:
        return sum(self.mult)


@dataclass(frozen=True)
class BaseSequence:
    """Coefficients of a base series Omega(t); the expansion needs b_0 = 1."""

    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(as_rat(c) for c in self.b))
        if not self.b or self.b[0] != 1:
            raise ValueError("a base sequence must start with b_0 = 1")


def geometric_base(order: int) -> BaseSequence:
    """The base 1/(1-t): all coefficients 1."""
    return BaseSequence((_ONE,) * (order + 1))


@lru_cache(maxsize=None)
def partitions_with_parts(n: int, k: int) -> tuple:
    """All partitions of n with exactly k parts, each exactly once."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")

    results = []

    def rec(remaining, parts_left, max_part, acc):
        if parts_left == 0:
            if remaining == 0:
                mult = [0] * n
                for p in acc:
                    mult[p - 1] += 1
                results.append(IntPartition(tuple(mult)))
            return
        # each remaining part is at least 1 and at most max_part
        lo = -(-remaining // parts_left)  # ceil: parts are nonincreasing
        hi = min(max_part, remaining - (parts_left - 1))
        for p in range(hi, lo - 1, -1):
            rec(remaining - p, parts_left - 1, p, acc + [p])

    if n == 0 and k == 0:
        return (IntPartition(()),)
    rec(n, k, n, [])
    return tuple(results)


def w_from_base(b, n: int, f: int) -> Fraction:
    """W(n, f) = sum over partitions of n with n-f parts of prod b_i^{k_i}/k_i!."""
    total = _ZERO
    for part in partitions_with_parts(n, n - f):
        prod = _ONE
        for i, k in enumerate(part.mult):
            if k:
                prod *= b[i + 1] ** k / factorial(k)
        total += prod
    return total


@lru_cache(maxsize=None)
def bell_base(params: ParamSet, n_max: int) -> tuple:
    """Base coefficients b_i = B[i at lam=1] / i! for the family's expansion."""
    return tuple(
        _lambda1(params.alpha, params.beta, params.gamma, params.x, params.r, i)
        / factorial(i)
        for i in range(n_max + 1)
    )


def w_coefficient(n: int, f: int, params: ParamSet) -> Fraction:
    """Generic partition-sum W(n, f) over the family's base."""
    if not 0 <= f <= n - 1:
        raise ValueError(f"f must satisfy 0 <= f <= n-1, got f={f}, n={n}")
    return w_from_base(bell_base(params, n), n, f)


def w_explicit(n: int, f: int, params: ParamSet) -> Fraction:
    """Fixed expanded forms of W(n, f) for f <= 5, evaluated literally.

    The f = 4 and f = 5 forms deviate from the generic partition sum in
    specific terms (marked below); they exist so the harness can record
    exactly where, and must not be "corrected"."""
    if f > 5:
        raise ValueError("expanded forms exist only for f <= 5")
    if f < 0 or n < 0:
        raise ValueError("n and f must be nonnegative")
    b = bell_base(params, max(n, 6))

    def term(head: int, excess: int, *factors) -> Fraction:
        # 1/(head! * (n-excess)!) * b1^(n-excess) * factors, dropped when n < excess
        if n - excess < 0:
            return _ZERO
        out = Fraction(1, factorial(head) * factorial(n - excess))
        out *= b[1] ** (n - excess)
        for fac in factors:
            out *= fac
        return out

    if f == 0:
        return term(0, 0)
    if f == 1:
        return term(0, 2, b[2])
    if f == 2:
        return term(0, 3, b[3]) + term(2, 4, b[2] ** 2)
    if f == 3:
        return term(0, 4, b[4]) + term(0, 5, b[2] * b[3]) + term(3, 6, b[2] ** 3)
    if f == 4:
        return (
            term(0, 5, b[5])
            + term(2, 6, b[3] ** 2)
            + term(2, 7, b[2] ** 2 * (b[1] / 6))  # variant term: b1, not b3, over 3!
            + term(4, 8, b[2] ** 4)
            + term(2, 6, b[2] * b[4])  # variant term: carries an extra 1/2!
        )
    return (
        term(0, 6, b[6])
        + term(0, 7, b[2] * b[5])
        + term(0, 7, b[4] * b[3])
        + term(2, 8, b[2] ** 2)  # variant term: the b4 factor is absent
        + term(2, 8, b[2] * b[3] ** 2)
        + term(3, 9, b[2] ** 3 * b[3])
        + term(5, 10, b[2] ** 5)
    )


def hsu_expansion(base: BaseSequence, delta, n: int, m: int) -> Fraction:
    """Partial sum sum_{f=0}^{m} W(n, f) / (delta-n+f)_f for the given base.

    Valid asymptotically for n = o(sqrt(|delta|)); that regime is the
    caller's concern, the sum itself is exact.
    """
    delta = as_rat(delta)
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must satisfy 0 <= m <= n-1, got m={m}, n={n}")
    if len(base.b) <= n:
        raise ValueError(f"base sequence too short for n={n}")
    total = _ZERO
    for f in range(m + 1):
        total += w_from_base(base.b, n, f) / falling(delta - n + f, f)
    return total


@dataclass(frozen=True)
class AsymptoticComparison:
    delta: int
    estimate: Fraction
    exact: Fraction
    rel_error: Fraction | None
    status: str  # "ok" or "exact-zero"


def bell_asymptotic_estimate(n: int, m: int, delta: int, params: ParamSet) -> AsymptoticComparison:
    """Compare the truncated expansion with the family's exact value.

    estimate = sum_{f=0}^{m} (delta)_{n-f} W(n, f);
    exact    = B[n] at lam = delta with gamma scaled to gamma*delta, over n!.

    delta must be an integer >= n (the exact side needs an integer exponent
    and (delta)_n must not vanish).  A zero exact value is reported as the
    distinct status "exact-zero" instead of dividing.
    """
    if not isinstance(delta, int) or delta < n:
        raise ValueError("delta must be an integer >= n")
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must satisfy 0 <= m <= n-1, got m={m}, n={n}")
    b = bell_base(params, n)
    estimate = _ZERO
    for f in range(m + 1):
        estimate += falling(delta, n - f) * w_from_base(b, n, f)
    scaled = params.replace(lam=delta, gamma=params.gamma * delta)
    exact = bell_egf(n, scaled)[n] / factorial(n)
    if exact == 0:
        return AsymptoticComparison(delta, estimate, exact, None, "exact-zero")
    return AsymptoticComparison(delta, estimate, exact, abs(estimate / exact - 1), "ok")
