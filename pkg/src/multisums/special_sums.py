"""Exact power-sum formulas and even-argument zeta machinery.

Power sums of integers come from the Bernoulli closed form; multiple power
sums reuse the partition reduction from :mod:`multisums.core`. Even zeta
values are exact rational multiples of powers of pi (:class:`PiPolynomial`),
so depth reductions of repeated even arguments stay exact end to end.
The exponent-4 and exponent-6 closed forms are classical evaluations,
implemented exactly and exercised against the partition route.

Only :func:`mzv_limit_trend` touches floating point, and only to display a
convergence trend; it never feeds a verdict.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .core import IndexPower, SumProblem, brute_multiple_sum, reduce_from_power_sums
from .exact_arith import PiPolynomial, bernoulli, binomial, factorial
from .partitions import enumerate_partitions

__all__ = [
    "faulhaber",
    "multiple_power_sum",
    "stirling_via_multiple_sum",
    "zeta_even",
    "mzv_even_reduced",
    "mzv_closed_form",
    "bernoulli_partition_sum",
    "mzv_partial_identity",
    "mzv_limit_trend",
    "load_zeta_golden_table",
    "MZV_PARTIAL_MAX_N",
]

MZV_PARTIAL_MAX_N = 12  # exact brute side sums 2^n tuples


def faulhaber(n: int, p: int) -> Fraction:
    """sum_{N=1}^{n} N**p, closed form with Bernoulli numbers (B_1 = -1/2).

    (1/(p+1)) sum_{j=0}^{p} (-1)^j C(p+1, j) B_j n^(p+1-j).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 0:
        raise ValueError("p must be >= 0")
    total = Fraction(0)
    big_n = Fraction(n)
    for j in range(p + 1):
        term = binomial(p + 1, j) * bernoulli(j) * big_n ** (p + 1 - j)
        total += -term if j % 2 else term
    return total / (p + 1)


def multiple_power_sum(m: int, n: int, p: int) -> Fraction:
    """The order-m multiple sum of N**p over [1, n], via the reduction.

    S_i = faulhaber(n, i p) feeds the partition formula; no tuples are
    enumerated. Requires 0 <= m <= n.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if n < m:
        raise ValueError("need n >= m")
    if p < 0:
        raise ValueError("p must be >= 0")
    return reduce_from_power_sums([faulhaber(n, i * p) for i in range(1, m + 1)], m)


def stirling_via_multiple_sum(m: int, n: int) -> int:
    """[n+1, n+1-m] computed as the order-m multiple sum of N over [1, n].

    Cross-route for the recurrence table; always an exact integer.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    value = multiple_power_sum(m, n, 1)
    if value.denominator != 1:
        raise AssertionError("multiple sum of integers must be an integer")
    return value.numerator


def zeta_even(p: int) -> PiPolynomial:
    """zeta(2p) as an exact rational multiple of pi**(2p).

    (-1)^(p+1) (2 pi)^(2p) B_{2p} / (2 (2p)!).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    coeff = Fraction(2) ** (2 * p) * bernoulli(2 * p) / (2 * factorial(2 * p))
    if p % 2 == 0:
        coeff = -coeff
    return PiPolynomial({2 * p: coeff})


def mzv_even_reduced(m: int, p: int) -> PiPolynomial:
    """Depth-m repeated even zeta value zeta(2p, ..., 2p), by reduction.

    (-1)^m sum over partitions y of m of
      prod_i [(-1)^(y_i) / (y_i! i^(y_i))] zeta(2 i p)^(y_i)

    a single pi^(2pm) monomial once assembled.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if p < 1:
        raise ValueError("p must be >= 1")
    total = PiPolynomial()
    for part in enumerate_partitions(m):
        term = PiPolynomial.from_rational(1)
        for i, mult in enumerate(part.y, start=1):
            if mult:
                weight = Fraction(1, factorial(mult) * i ** mult)
                if mult % 2:
                    weight = -weight
                term = term * (zeta_even(i * p) ** mult) * weight
        total = total + term
    return -total if m % 2 else total


def mzv_closed_form(m: int, p: int) -> PiPolynomial:
    """Closed forms for the depth-m repeated even zeta values, p in {1, 2, 3}.

    p=1: pi^(2m) / (2m+1)!
    p=2: 2 * 2^(2m) * pi^(4m) / (4m+2)!
    p=3: 6 * (2 pi)^(6m) / (6m+3)!
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if p == 1:
        return PiPolynomial({2 * m: Fraction(1, factorial(2 * m + 1))})
    if p == 2:
        return PiPolynomial({4 * m: Fraction(2 * 2 ** (2 * m), factorial(4 * m + 2))})
    if p == 3:
        return PiPolynomial({6 * m: Fraction(6 * 2 ** (6 * m), factorial(6 * m + 3))})
    raise ValueError("closed form available for p in {1, 2, 3} only")


def bernoulli_partition_sum(m: int, p: int) -> Fraction:
    """Partition-weighted Bernoulli products.

    sum over partitions y of m of prod_i (1/y_i!) (B_{2ip} / ((2i) (2ip)!))^(y_i).
    Collapses to 1/(2^(2m) (2m+1)!) at p=1, 2 (-1)^m / (2^(2m) (4m+2)!) at
    p=2, and 6/(6m+3)! at p=3; callers check those forms.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if p < 1:
        raise ValueError("p must be >= 1")
    total = Fraction(0)
    for part in enumerate_partitions(m):
        term = Fraction(1)
        for i, mult in enumerate(part.y, start=1):
            if mult:
                base = bernoulli(2 * i * p) / (2 * i * factorial(2 * i * p))
                term *= base ** mult / factorial(mult)
        total += term
    return total


def mzv_partial_identity(n: int, p: int) -> tuple[Fraction, Fraction]:
    """Both sides of the finite product identity for partial zeta sums.

    lhs = sum over m = 0..n of the order-m multiple sum of N**(-p) on [1, n]
    (brute forced, hence the n <= 12 cap); rhs = prod_{N=1}^{n} (1 + N**(-p)).
    Exact rationals; equality is the caller's check.
    """
    if not 1 <= n <= MZV_PARTIAL_MAX_N:
        raise ValueError(f"n must be in [1, {MZV_PARTIAL_MAX_N}]")
    if p < 1:
        raise ValueError("p must be >= 1")
    spec = IndexPower(-p)
    lhs = Fraction(0)
    for m in range(n + 1):
        lhs += brute_multiple_sum(SumProblem((spec,) * m, 1, n))
    rhs = Fraction(1)
    for N in range(1, n + 1):
        rhs *= 1 + Fraction(1, N**p)
    return lhs, rhs


def mzv_limit_trend(exponents: Sequence[int], n: int) -> list[str]:
    """|prod_{N=1}^{n} (1 + N**(-p)) - 2| per exponent, as decimal strings.

    Floating point by design (denominators explode otherwise); trend
    display only. Computed stably as 2 |expm1(sum log1p(N**-p))| over
    N >= 2, since the N = 1 factor is exactly 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for p in exponents:
        if p < 2:
            raise ValueError("exponents below 2 have no finite product limit")
        log_tail = 0.0
        for N in range(2, n + 1):
            log_tail += math.log1p(float(N) ** (-p))
        gap = 2.0 * abs(math.expm1(log_tail))
        out.append(repr(gap))
    return out


def load_zeta_golden_table() -> dict[int, Fraction]:
    """The shipped zeta(2)..zeta(16) coefficient table (argument -> rational).

    Read from the packaged data file, independent of zeta_even's formula,
    so the two can check each other.
    """
    text = resources.files("multisums").joinpath("data/zeta_even.json").read_text(encoding="utf-8")
    raw = json.loads(text)
    return {int(arg): Fraction(coeff) for arg, coeff in raw.items()}
