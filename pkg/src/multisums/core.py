"""Evaluators for ordered multiple sums.

A multiple sum of order m runs over strictly increasing index tuples
q <= N_1 < N_2 < ... < N_m <= n and multiplies one factor per position,
the innermost position N_1 drawn from ``specs[0]`` and the outermost N_m
from ``specs[-1]``. Conventions, applied uniformly: order 0 gives 1, and
an index window shorter than m gives 0.

Routes come in independent pairs so each can act as the other's oracle:

* ``brute_multiple_sum``        direct tuple enumeration
* ``reduce_multiple_sum``       partition-weighted power sums (single sequence)
* ``brute_recurrent_sum``       weakly increasing tuples, enumeration
* ``symmetrized_multiple_sum``  all m! spec orderings, enumeration
* ``reduce_symmetrized``        set-partition reduction of the same total
* ``variation_*``               window-extension expansions of P `(m, q, n+1)`
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Sequence, Union

from .exact_arith import factorial, rational_from_str, rational_to_str
from .partitions import enumerate_partitions, enumerate_set_partitions

__all__ = [
    "ExplicitSequence",
    "IndexPower",
    "SequenceSpec",
    "SumProblem",
    "eval_sequence",
    "sequence_spec_to_json",
    "sequence_spec_from_json",
    "power_sums",
    "brute_multiple_sum",
    "brute_recurrent_sum",
    "reduce_multiple_sum",
    "reduce_from_power_sums",
    "variation_lemma",
    "variation_expand",
    "variation_recursive",
    "symmetrized_multiple_sum",
    "reduce_symmetrized",
    "SYMMETRIZED_BRUTE_MAX_M",
    "SET_REDUCTION_MAX_M",
]

SYMMETRIZED_BRUTE_MAX_M = 6   # m! orderings, each brute forced
SET_REDUCTION_MAX_M = 8       # Bell(8) = 4140 set partitions


@dataclass(frozen=True)
class ExplicitSequence:
    """A finite sequence of rationals; values[k] sits at index base + k."""

    values: tuple[Fraction, ...]
    base: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))


@dataclass(frozen=True)
class IndexPower:
    """The sequence a_N = N ** exponent; exponent may be negative."""

    exponent: int


SequenceSpec = Union[ExplicitSequence, IndexPower]


def eval_sequence(spec: SequenceSpec, index: int) -> Fraction:
    """The sequence value at an index, exact.

    Raises ValueError outside an explicit sequence's range and at index 0
    for a negative power.
    """
    if isinstance(spec, IndexPower):
        if index == 0 and spec.exponent < 0:
            raise ValueError("index 0 is not valid for a negative exponent")
        return Fraction(index) ** spec.exponent
    offset = index - spec.base
    if not 0 <= offset < len(spec.values):
        raise ValueError(f"index {index} outside explicit range [{spec.base}, {spec.base + len(spec.values) - 1}]")
    return spec.values[offset]


def sequence_spec_to_json(spec: SequenceSpec) -> dict:
    if isinstance(spec, IndexPower):
        return {"kind": "index_power", "exponent": spec.exponent}
    return {
        "kind": "explicit",
        "base": spec.base,
        "values": [rational_to_str(v) for v in spec.values],
    }


def sequence_spec_from_json(data: dict) -> SequenceSpec:
    kind = data.get("kind")
    if kind == "index_power":
        return IndexPower(int(data["exponent"]))
    if kind == "explicit":
        values = tuple(rational_from_str(v) if isinstance(v, str) else Fraction(v) for v in data["values"])
        return ExplicitSequence(values, int(data.get("base", 1)))
    raise ValueError(f"unknown sequence kind: {kind!r}")


@dataclass(frozen=True)
class SumProblem:
    """An order-m multiple sum: one spec per position, window [q, n].

    The order m is len(specs). q must be >= 0; a negative q is rejected
    outright rather than silently summed over.
    """

    specs: tuple[SequenceSpec, ...]
    q: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "specs", tuple(self.specs))
        if self.q < 0:
            raise ValueError("q must be >= 0")

    @property
    def m(self) -> int:
        return len(self.specs)


def _value_tables(specs: Sequence[SequenceSpec], q: int, n: int) -> list[dict[int, Fraction]]:
    # One pass per spec; every index in [q, n] is touched by some tuple, so
    # building the full table does not introduce spurious range errors.
    return [{N: eval_sequence(spec, N) for N in range(q, n + 1)} for spec in specs]


def brute_multiple_sum(problem: SumProblem) -> Fraction:
    """Direct enumeration over strictly increasing index tuples. The oracle."""
    m, q, n = problem.m, problem.q, problem.n
    if m == 0:
        return Fraction(1)
    if n - q + 1 < m:
        return Fraction(0)
    tables = _value_tables(problem.specs, q, n)
    total = Fraction(0)
    for combo in combinations(range(q, n + 1), m):
        term = Fraction(1)
        for table, index in zip(tables, combo):
            term *= table[index]
        total += term
    return total


def brute_recurrent_sum(spec: SequenceSpec, m: int, q: int, n: int) -> Fraction:
    """Weakly increasing counterpart: q <= N_1 <= ... <= N_m <= n, one sequence."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if q < 0:
        raise ValueError("q must be >= 0")
    if m == 0:
        return Fraction(1)
    if n < q:
        return Fraction(0)
    table = {N: eval_sequence(spec, N) for N in range(q, n + 1)}
    total = Fraction(0)
    for combo in combinations_with_replacement(range(q, n + 1), m):
        term = Fraction(1)
        for index in combo:
            term *= table[index]
        total += term
    return total


def power_sums(spec: SequenceSpec, q: int, n: int, m: int) -> list[Fraction]:
    """S_i = sum_{N=q}^{n} a_N ** i for i = 1..m.

    Each sequence value is evaluated once and raised incrementally, one
    multiplication per i, so the whole family costs one pass over the window.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if q < 0:
        raise ValueError("q must be >= 0")
    sums = [Fraction(0)] * m
    for N in range(q, n + 1):
        value = eval_sequence(spec, N)
        power = Fraction(1)
        for i in range(m):
            power *= value
            sums[i] += power
    return sums


def reduce_from_power_sums(sums: Sequence[Fraction], m: int) -> Fraction:
    """Partition-weighted reduction of an order-m sum from S_1..S_m.

    (-1)^m * sum over partitions y of m of prod_i [(-1)^(y_i) / y_i!] * (S_i / i)^(y_i).
    Equal to the elementary symmetric function e_m of the underlying values.
    Extra trailing sums beyond S_m are accepted and ignored.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if len(sums) < m:
        raise ValueError(f"need at least {m} power sums, got {len(sums)}")
    sums = [Fraction(s) for s in sums]
    total = Fraction(0)
    for part in enumerate_partitions(m):
        term = Fraction(1)
        for i, mult in enumerate(part.y, start=1):
            if mult:
                base = sums[i - 1] / i
                term *= base ** mult / factorial(mult)
                if mult % 2:
                    term = -term
        total += term
    return -total if m % 2 else total


def reduce_multiple_sum(spec: SequenceSpec, m: int, q: int, n: int) -> Fraction:
    """Order-m multiple sum of one sequence via power sums, no enumeration.

    Agrees with brute_multiple_sum on identical specs, including the
    degenerate window cases (empty window gives 0 for m >= 1, and m = 0
    gives 1 through the empty partition).
    """
    return reduce_from_power_sums(power_sums(spec, q, n, m), m)


def variation_lemma(problem: SumProblem) -> tuple[Fraction, Fraction, Fraction]:
    """(P_{m,q,n+1}, P_{m,q,n}, P_{m-1,q,n}), all brute forced.

    The first equals the second plus a_{(m); n+1} times the third; callers
    assert that. P_{m-1} drops the outermost spec.
    """
    if problem.m < 1:
        raise ValueError("variation needs order >= 1")
    extended = SumProblem(problem.specs, problem.q, problem.n + 1)
    dropped = SumProblem(problem.specs[:-1], problem.q, problem.n)
    return (
        brute_multiple_sum(extended),
        brute_multiple_sum(problem),
        brute_multiple_sum(dropped),
    )


def _leading_product(specs: Sequence[SequenceSpec], m: int, n: int, k: int) -> Fraction:
    # prod_{j=0}^{m-k-1} a_{(m-j); n+1-j}; empty when k == m.
    product = Fraction(1)
    for j in range(m - k):
        product *= eval_sequence(specs[m - j - 1], n + 1 - j)
    return product


def variation_expand(problem: SumProblem, cutoff: int) -> Fraction:
    """P_{m,q,n+1} expanded down to order ``cutoff``, inner sums brute forced.

    sum_{k=cutoff+1}^{m} (leading product to order k) * P_{k,q,n-m+k}
      + (leading product to order cutoff) * P_{cutoff,q,n-m+cutoff+1}

    cutoff = m collapses to P_{m,q,n+1} itself. Meaningful for windows
    satisfying n >= q + m - 1; explicit sequences must cover [q, n+1].
    """
    m, q, n = problem.m, problem.q, problem.n
    if not 0 <= cutoff <= m:
        raise ValueError("cutoff must be in [0, m]")
    specs = problem.specs
    total = Fraction(0)
    for k in range(cutoff + 1, m + 1):
        inner = brute_multiple_sum(SumProblem(specs[:k], q, n - m + k))
        total += _leading_product(specs, m, n, k) * inner
    last = brute_multiple_sum(SumProblem(specs[:cutoff], q, n - m + cutoff + 1))
    total += _leading_product(specs, m, n, cutoff) * last
    return total


def variation_recursive(problem: SumProblem, cutoff: int) -> Fraction:
    """Horner form of variation_expand: same value, nested products.

    X_cutoff = P_{cutoff,q,n-m+cutoff+1};
    X_k = a_{(k); n-m+k+1} * X_{k-1} + P_{k,q,n-m+k};  answer X_m.
    """
    m, q, n = problem.m, problem.q, problem.n
    if not 0 <= cutoff <= m:
        raise ValueError("cutoff must be in [0, m]")
    specs = problem.specs
    acc = brute_multiple_sum(SumProblem(specs[:cutoff], q, n - m + cutoff + 1))
    for k in range(cutoff + 1, m + 1):
        inner = brute_multiple_sum(SumProblem(specs[:k], q, n - m + k))
        acc = eval_sequence(specs[k - 1], n - m + k + 1) * acc + inner
    return acc


def symmetrized_multiple_sum(specs: Sequence[SequenceSpec], q: int, n: int) -> Fraction:
    """Sum of the order-m multiple sum over all m! orderings of the specs.

    Brute force, capped at m <= 6 (m! enumerations); permutations are taken
    in lexicographic position order for reproducibility.
    """
    specs = tuple(specs)
    m = len(specs)
    if m > SYMMETRIZED_BRUTE_MAX_M:
        raise ValueError(f"symmetrized brute force capped at m = {SYMMETRIZED_BRUTE_MAX_M}")
    total = Fraction(0)
    for ordering in permutations(specs):
        total += brute_multiple_sum(SumProblem(ordering, q, n))
    return total


def reduce_symmetrized(specs: Sequence[SequenceSpec], q: int, n: int) -> Fraction:
    """Set-partition reduction of the symmetrized sum; no permutations.

    sum over set partitions P of {1..m} of
      (-1)^(m - |P|) * prod_{blocks B} (|B| - 1)! * sum_{N=q}^{n} prod_{h in B} a_{(h); N}

    With all specs identical this equals m! times reduce_multiple_sum.
    """
    specs = tuple(specs)
    m = len(specs)
    if q < 0:
        raise ValueError("q must be >= 0")
    if m > SET_REDUCTION_MAX_M:
        raise ValueError(f"set-partition reduction capped at m = {SET_REDUCTION_MAX_M}")
    if m == 0:
        return Fraction(1)
    tables = _value_tables(specs, q, n)
    block_sums: dict[tuple[int, ...], Fraction] = {}

    def block_sum(block: tuple[int, ...]) -> Fraction:
        cached = block_sums.get(block)
        if cached is None:
            cached = Fraction(0)
            for N in range(q, n + 1):
                product = Fraction(1)
                for h in block:
                    product *= tables[h - 1][N]
                cached += product
            block_sums[block] = cached
        return cached

    total = Fraction(0)
    for sp in enumerate_set_partitions(m):
        term = Fraction(1)
        for block in sp.blocks:
            term *= factorial(len(block) - 1) * block_sum(block)
        if (m - sp.block_count) % 2:
            term = -term
        total += term
    return total
