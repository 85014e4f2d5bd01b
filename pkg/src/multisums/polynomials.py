"""Dense univariate polynomials over exact rationals, and root identities.

Coefficients are stored ascending: coeffs[i] multiplies x**i. Trailing
zeros are stripped, so the leading coefficient is nonzero; the zero
polynomial keeps a single zero coefficient and has degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    ExplicitSequence,
    SequenceSpec,
    SumProblem,
    brute_multiple_sum,
    reduce_from_power_sums,
)
from .exact_arith import RationalLike

__all__ = [
    "Polynomial",
    "poly_from_roots",
    "coeff_ratio_from_roots",
    "poly_derivative",
    "mean_root_ratio",
    "eval_factored_sum",
    "sum_of_multiple_sums",
    "generalized_binomial",
]


@dataclass(frozen=True)
class Polynomial:
    """coeffs[i] is the coefficient of x**i; the zero polynomial is (0,)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)


def poly_from_roots(roots: Iterable[RationalLike], leading: RationalLike = 1) -> Polynomial:
    """leading * prod (x - r) expanded to dense coefficients."""
    lead = Fraction(leading)
    if lead == 0:
        raise ValueError("leading coefficient must be nonzero")
    coeffs = [lead]
    for root in roots:
        r = Fraction(root)
        grown = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            grown[i] -= r * c
            grown[i + 1] += c
        coeffs = grown
    return Polynomial(tuple(coeffs))


def _root_power_sums(roots: Sequence[Fraction], m: int) -> list[Fraction]:
    sums = []
    powers = [Fraction(1)] * len(roots)
    for _ in range(m):
        powers = [p * r for p, r in zip(powers, roots)]
        sums.append(sum(powers, Fraction(0)))
    return sums


def coeff_ratio_from_roots(roots: Sequence[RationalLike], m: int) -> Fraction:
    """a_{n-m} / a_n of the monic-or-not polynomial with these roots.

    Computed without expanding the polynomial, as the signed partition
    reduction of the root power sums; equals (-1)^m e_m(roots).
    """
    roots = [Fraction(r) for r in roots]
    if not 0 <= m <= len(roots):
        raise ValueError("m must be in [0, number of roots]")
    value = reduce_from_power_sums(_root_power_sums(roots, m), m)
    return -value if m % 2 else value


def poly_derivative(poly: Polynomial, k: int = 1) -> Polynomial:
    """k-th formal derivative; the zero polynomial once k exceeds the degree."""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    coeffs = poly.coeffs
    for _ in range(k):
        coeffs = tuple((i + 1) * coeffs[i + 1] for i in range(len(coeffs) - 1))
    return Polynomial(coeffs)


def mean_root_ratio(poly: Polynomial) -> Fraction:
    """-a_{n-1} / (n a_n): the average of the roots of a degree-n polynomial.

    Invariant under differentiation, which callers verify.
    """
    n = poly.degree
    if n < 1:
        raise ValueError("mean root ratio needs degree >= 1")
    return -poly.coeffs[n - 1] / (n * poly.coeffs[n])


def eval_factored_sum(roots: Sequence[RationalLike], x: RationalLike) -> tuple[Fraction, Fraction]:
    """Both sides of the alternating expansion of a factored polynomial.

    lhs = sum_{m=0}^{n} (-1)^m x^(n-m) e_m(roots), with e_m from the
    partition reduction; rhs = (-1)^n prod (r - x). Equal for every x.
    """
    roots = [Fraction(r) for r in roots]
    x = Fraction(x)
    n = len(roots)
    sums = _root_power_sums(roots, n)
    lhs = Fraction(0)
    for m in range(n + 1):
        e_m = reduce_from_power_sums(sums[:m], m)
        term = x ** (n - m) * e_m
        lhs += -term if m % 2 else term
    rhs = Fraction(1)
    for r in roots:
        rhs *= r - x
    if n % 2:
        rhs = -rhs
    return lhs, rhs


def sum_of_multiple_sums(spec: SequenceSpec, q: int, n: int) -> Fraction:
    """Sum of the order-m multiple sums over every order m = 0 .. n-q+1.

    Telescopes to prod_{N=q}^{n} (a_N + 1); with a_N = N and q = 1 that is
    (n+1)!. Callers check the product form.
    """
    top = max(n - q + 1, 0)
    total = Fraction(0)
    for m in range(top + 1):
        total += brute_multiple_sum(SumProblem((spec,) * m, q, n))
    return total


def generalized_binomial(
    a_values: Sequence[RationalLike], b_values: Sequence[RationalLike]
) -> tuple[Fraction, Fraction]:
    """prod (a_i + b_i) two ways: directly, and via multiple sums of a_i/b_i.

    Returns (direct product, prod(b) * sum over all orders of the multiple
    sums of the ratio sequence). The b values must be nonzero.
    """
    a = [Fraction(v) for v in a_values]
    b = [Fraction(v) for v in b_values]
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    if any(v == 0 for v in b):
        raise ValueError("b values must be nonzero")
    direct = Fraction(1)
    for x, y in zip(a, b):
        direct *= x + y
    ratios = ExplicitSequence(tuple(x / y for x, y in zip(a, b)), base=1)
    reconstructed = sum_of_multiple_sums(ratios, 1, len(a))
    for y in b:
        reconstructed *= y
    return direct, reconstructed
