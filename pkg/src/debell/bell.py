"""Higher-order r-deranged Bell numbers and barred-arrangement polynomials.

Write u = (1+alpha t)^(beta/alpha) - 1 (at alpha = 0 this degenerates to
e^(beta t) - 1).  The defining route for the family B[n] is coefficient
extraction from the exponential generating function

    (1+alpha t)^(gamma/alpha) * (x u)^(r lam) * exp(-lam x u)
        / (1 - x u)^((r+1) lam),

and it is the single source of truth here.  Every alternative expression --
the lam = 1 closed sum over r-derangements and generalized Stirling numbers,
the binomially weighted closed sum for general lam, the section convolution,
the classical specialization, and the omega identities -- is computed
independently so that agreement can be adjudicated point by point instead of
assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from . import stirling
from .derangements import r_derangement
from .exact import ParamSet, binomial, gen_falling, multinomial
from .series import TruncatedSeries, binpow

_ZERO = Fraction(0)


class BellRoute(enum.Enum):
    EGF = "egf"
    LAMBDA1 = "lambda1"
    GENERAL_CLOSED = "closed"
    CONVOLUTION = "convolution"
    CLASSIC = "classic"


@dataclass(frozen=True)
class BellValue:
    n: int
    params: ParamSet
    value: Fraction
    route: BellRoute


def _xu(params: ParamSet, order: int) -> TruncatedSeries:
    u = binpow(params.alpha, params.beta, order) - TruncatedSeries.one(order)
    return u.scale(params.x)


@lru_cache(maxsize=None)
def _bell_egf(params: ParamSet, n_max: int) -> tuple:
    order = n_max + 1  # spare position past anything read
    head = binpow(params.alpha, params.gamma, order)
    lam, r = params.lam, params.r
    xu = _xu(params, order)
    ser = head * xu.pow_int(r * lam)
    ser = ser * xu.scale(-lam).exp()
    one = TruncatedSeries.one(order)
    ser = ser * (one - xu).log().scale(-(r + 1) * lam).exp()
    return tuple(ser.egf_coeff(n) for n in range(n_max + 1))


def bell_egf(n_max: int, params: ParamSet) -> list:
    """B[0..n_max] from the defining generating function."""
    return list(_bell_egf(params, n_max))


def bell_at(n: int, params: ParamSet) -> Fraction:
    return _bell_egf(params, n)[n]


@lru_cache(maxsize=None)
def _lambda1(alpha, beta, gamma, x, r: int, n: int) -> Fraction:
    tab = stirling.table(alpha, beta, gamma)
    total = _ZERO
    for k in range(n + 1):
        d = r_derangement(k, r)
        if d:
            total += d * x**k * beta**k * tab.value(n, k)
    return total


def bell_lambda1(n: int, params: ParamSet) -> Fraction:
    """Closed sum sum_k d_{k,r} x^k beta^k S(n,k); only defined at lam = 1."""
    if params.lam != 1:
        raise ValueError("the lambda-1 route requires lam == 1")
    return _lambda1(params.alpha, params.beta, params.gamma, params.x, params.r, n)


def bell_general_closed(n: int, params: ParamSet) -> Fraction:
    """The binomially weighted closed sum

        sum_k C(k+r+lam-1, k+r) d_{k,r} x^k beta^k S(n,k).

    Its agreement with the generating-function route is a recorded claim, not
    a postcondition, except at lam = 1 where the weight is 1.
    """
    tab = stirling.table(params.alpha, params.beta, params.gamma)
    total = _ZERO
    for k in range(n + 1):
        w = binomial(k + params.r + params.lam - 1, k + params.r)
        if w == 0:
            continue
        d = r_derangement(k, params.r)
        if d:
            total += w * d * params.x**k * params.beta**k * tab.value(n, k)
    return total


def _compositions(n: int, parts: int):
    """Weak compositions of n into `parts` ordered parts."""
    if parts == 1:
        yield (n,)
        return
    for bars in combinations(range(n + parts - 1), parts - 1):
        cuts = (-1,) + bars + (n + parts - 1,)
        yield tuple(cuts[i + 1] - cuts[i] - 1 for i in range(parts))


def _section_sum(n: int, total: int, params: ParamSet) -> Fraction:
    base = params.replace(lam=1, gamma=Fraction(0))
    out = _ZERO
    for comp in _compositions(total, params.lam + 1):
        tail = gen_falling(params.gamma, params.alpha, comp[-1])
        if tail == 0:
            continue
        prod = multinomial(total, comp) * tail
        for part in comp[:-1]:
            prod *= _lambda1(base.alpha, base.beta, base.gamma, base.x, base.r, part)
            if prod == 0:
                break
        out += prod
    return out


def bell_convolution(n: int, params: ParamSet) -> Fraction:
    """Section convolution over compositions of n into lam+1 parts:

        sum multinomial(n; i_1..i_{lam+1}) (gamma|alpha)_{i_{lam+1}}
            prod_s B[i_s] at (lam=1, gamma=0).

    With compositions of n this reproduces the generating-function route
    exactly (the product structure of the EGF).
    """
    if params.lam < 1:
        raise ValueError("the convolution route requires lam >= 1")
    return _section_sum(n, n, params)


def bell_convolution_nr(n: int, params: ParamSet) -> Fraction:
    """Variant index convention: compositions of n+r with multinomial(n+r; ...).
    Kept only so the harness can record how this convention compares."""
    if params.lam < 1:
        raise ValueError("the convolution route requires lam >= 1")
    return _section_sum(n, n + params.r, params)


def deranged_bell_classic(n: int, r: int) -> int:
    """Classical r-deranged Bell number: sum_i d_{i,r} times the r-Stirling
    count of partitions of [n+r] into i+r blocks with 1..r separated."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    total = _ZERO
    for i in range(n + 1):
        d = r_derangement(i, r)
        if d:
            total += d * stirling.stirling_rec(n, i, 0, 1, r)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"classic deranged Bell value not integral: {total}")
    return int(total)


def bell_value(n: int, params: ParamSet, route: BellRoute = BellRoute.EGF) -> BellValue:
    if route is BellRoute.EGF:
        value = bell_at(n, params)
    elif route is BellRoute.LAMBDA1:
        value = bell_lambda1(n, params)
    elif route is BellRoute.GENERAL_CLOSED:
        value = bell_general_closed(n, params)
    elif route is BellRoute.CONVOLUTION:
        value = bell_convolution(n, params)
    elif route is BellRoute.CLASSIC:
        expected = ParamSet.make(alpha=0, beta=1, gamma=params.r, x=1, lam=1, r=params.r)
        if params != expected:
            raise ValueError(
                "the classic route is the specialization alpha=0, beta=1, gamma=r, x=1, lam=1"
            )
        value = Fraction(deranged_bell_classic(n, params.r))
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(f"unknown route {route}")
    return BellValue(n, params, value, route)


# -- barred-arrangement polynomials --------------------------------------------


def omega(n: int, params: ParamSet) -> Fraction:
    """Closed sum sum_k C(k+lam-1, k) x^k k! beta^k S(n,k)."""
    tab = stirling.table(params.alpha, params.beta, params.gamma)
    total = _ZERO
    for k in range(n + 1):
        w = binomial(k + params.lam - 1, k)
        if w == 0:
            continue
        total += w * params.x**k * factorial(k) * params.beta**k * tab.value(n, k)
    return total


@lru_cache(maxsize=None)
def _omega_egf(params: ParamSet, n_max: int) -> tuple:
    order = n_max + 1
    head = binpow(params.alpha, params.gamma, order)
    xu = _xu(params, order)
    one = TruncatedSeries.one(order)
    ser = head * (one - xu).log().scale(-params.lam).exp()
    return tuple(ser.egf_coeff(n) for n in range(n_max + 1))


def omega_egf(n_max: int, params: ParamSet) -> list:
    """omega[0..n_max] from (1+alpha t)^(gamma/alpha) / (1 - x u)^lam."""
    return list(_omega_egf(params, n_max))


def omega_identity_check(n: int, r: int, params: ParamSet) -> tuple:
    """Both sides of the fixed-block decomposition

        omega[n+r] =? sum_i C(n+r, i) B[i]
                      * sum_l beta^l S(n+r-i, l; alpha, beta, 0) x^l lam^l

    returned without asserting equality; the harness records the comparison.
    """
    p = params.replace(r=r)
    m = n + r
    lhs = omega(m, p)
    zero_gamma = stirling.table(p.alpha, p.beta, 0)
    bvals = bell_egf(m, p)
    rhs = _ZERO
    for i in range(m + 1):
        if bvals[i] == 0:
            continue
        inner = _ZERO
        for l in range(m - i + 1):
            s = zero_gamma.value(m - i, l)
            if s != 0:
                inner += p.beta**l * s * p.x**l * Fraction(p.lam) ** l
        rhs += binomial(m, i) * bvals[i] * inner
    return lhs, rhs


@dataclass(frozen=True)
class ProductFormRow:
    n: int
    egf: Fraction
    literal: Fraction
    power: Fraction


@lru_cache(maxsize=None)
def _product_forms(params: ParamSet, n_max: int) -> tuple:
    order = n_max + 1
    head = binpow(params.alpha, params.gamma, order)
    xu = _xu(params, order)
    one = TruncatedSeries.one(order)
    log_one_minus = (one - xu).log()
    r, lam = params.r, params.lam

    single = xu.pow_int(r) * xu.scale(-1).exp() * log_one_minus.scale(-(r + 1)).exp()

    literal = head
    for i in range(1, lam + 1):
        factor = xu.pow_int(r * i) * xu.scale(-i).exp() * log_one_minus.scale(-(r + 1) * i).exp()
        literal = literal * factor
    power = head * single.pow_int(lam)
    return (
        tuple(literal.egf_coeff(n) for n in range(n_max + 1)),
        tuple(power.egf_coeff(n) for n in range(n_max + 1)),
    )


def product_form_check(n_max: int, params: ParamSet) -> list:
    """Coefficients of the per-section product read two ways.

    ``literal`` multiplies factors whose exponents grow with the factor index
    i (r*i, -i, (r+1)*i); ``power`` raises the single lam = 1 factor to the
    lam-th power.  Both are compared against the defining route per index.
    """
    if params.lam < 1:
        raise ValueError("the product forms require lam >= 1")
    literal, power = _product_forms(params, n_max)
    egf = bell_egf(n_max, params)
    return [
        ProductFormRow(n=n, egf=egf[n], literal=literal[n], power=power[n])
        for n in range(n_max + 1)
    ]
