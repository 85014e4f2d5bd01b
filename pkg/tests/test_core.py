import time
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multisums.core import (
    ExplicitSequence,
    IndexPower,
    SumProblem,
    brute_multiple_sum,
    brute_recurrent_sum,
    eval_sequence,
    power_sums,
    reduce_from_power_sums,
    reduce_multiple_sum,
    reduce_symmetrized,
    sequence_spec_from_json,
    sequence_spec_to_json,
    symmetrized_multiple_sum,
    variation_expand,
    variation_lemma,
    variation_recursive,
)

N = IndexPower(1)


def test_brute_frozen_values():
    assert brute_multiple_sum(SumProblem((N, N), 1, 4)) == 35
    assert brute_multiple_sum(SumProblem((N, N, N), 1, 4)) == 50
    assert brute_multiple_sum(SumProblem((N,), 1, 4)) == 10
    # order 0 is 1, impossible windows are 0
    assert brute_multiple_sum(SumProblem((), 1, 4)) == 1
    assert brute_multiple_sum(SumProblem((), 5, 2)) == 1
    assert brute_multiple_sum(SumProblem((N, N, N), 1, 2)) == 0


def test_recurrent_frozen_values():
    assert brute_recurrent_sum(N, 2, 1, 3) == 25
    assert brute_recurrent_sum(N, 0, 1, 3) == 1
    assert brute_recurrent_sum(N, 2, 3, 2) == 0


def test_reduce_from_power_sums_examples():
    sums = [Fraction(6), Fraction(14), Fraction(36)]
    assert reduce_from_power_sums(sums, 2) == 11
    assert reduce_from_power_sums(sums, 3) == 6
    assert reduce_from_power_sums(sums, 0) == 1
    # extra trailing sums are allowed, short lists are not
    with pytest.raises(ValueError):
        reduce_from_power_sums(sums[:1], 2)


def test_reduce_matches_brute_frozen():
    assert reduce_multiple_sum(N, 2, 1, 4) == 35
    assert reduce_multiple_sum(N, 3, 1, 4) == 50
    assert reduce_multiple_sum(N, 1, 1, 4) == 10
    assert reduce_multiple_sum(N, 0, 1, 4) == 1
    assert reduce_multiple_sum(N, 4, 1, 3) == 0


def test_sum_problem_validation():
    with pytest.raises(ValueError):
        SumProblem((N,), -1, 4)
    problem = SumProblem((N, N), 0, 3)
    assert problem.m == 2
    assert brute_multiple_sum(problem) == brute_multiple_sum(SumProblem((N, N), 0, 3))


def test_index_power_domain():
    assert eval_sequence(IndexPower(2), 3) == 9
    assert eval_sequence(IndexPower(0), 0) == 1
    with pytest.raises(ValueError):
        eval_sequence(IndexPower(-1), 0)


def test_explicit_sequence_domain():
    seq = ExplicitSequence(["1/2", "2/3"], base=3)
    assert eval_sequence(seq, 3) == Fraction(1, 2)
    assert eval_sequence(seq, 4) == Fraction(2, 3)
    with pytest.raises(ValueError):
        eval_sequence(seq, 5)


def test_sequence_spec_json_round_trip():
    for spec in (IndexPower(2), ExplicitSequence([1, Fraction(1, 2)], base=0)):
        assert sequence_spec_from_json(sequence_spec_to_json(spec)) == spec
    assert sequence_spec_to_json(IndexPower(1)) == {"kind": "index_power", "exponent": 1}
    with pytest.raises(ValueError):
        sequence_spec_from_json({"kind": "mystery"})


def test_variation_lemma_example():
    new, old, lower = variation_lemma(SumProblem((N, N), 1, 3))
    assert (new, old, lower) == (35, 11, 6)
    assert new == old + eval_sequence(N, 4) * lower


def test_variation_expand_examples():
    assert variation_expand(SumProblem((N, N), 1, 3), 0) == 35
    assert variation_recursive(SumProblem((N, N), 1, 3), 0) == 35
    # cutoff m is the identity case
    problem = SumProblem((N, N, N), 1, 4)
    target = brute_multiple_sum(SumProblem((N, N, N), 1, 5))
    assert target == 225
    for cutoff in range(4):
        assert variation_expand(problem, cutoff) == 225
        assert variation_recursive(problem, cutoff) == 225
    with pytest.raises(ValueError):
        variation_expand(problem, 4)
    with pytest.raises(ValueError):
        variation_recursive(problem, -1)


def test_symmetrized_example():
    a = ExplicitSequence([1, 2, 3], base=1)
    b = ExplicitSequence([1, 1, 2], base=1)
    assert symmetrized_multiple_sum((a, b), 1, 3) == 15
    # (sum a)(sum b) - sum of pointwise products = 24 - 9
    assert reduce_symmetrized((a, b), 1, 3) == 24 - 9
    assert symmetrized_multiple_sum((a,), 1, 3) == 6
    assert reduce_symmetrized((), 1, 3) == 1


def test_symmetrized_identical_specs_scale():
    assert symmetrized_multiple_sum((N, N), 1, 4) == 2 * brute_multiple_sum(SumProblem((N, N), 1, 4))
    assert symmetrized_multiple_sum((N, N, N), 1, 5) == 6 * reduce_multiple_sum(N, 3, 1, 5)


def test_symmetrized_caps():
    with pytest.raises(ValueError):
        symmetrized_multiple_sum((N,) * 7, 1, 8)
    with pytest.raises(ValueError):
        reduce_symmetrized((N,) * 9, 1, 10)


def test_three_sequence_set_partition_expansion():
    # order 3 mixed reduction, including the +2 coefficient on the triple term
    a = ExplicitSequence([1, 2, 1], base=1)
    b = ExplicitSequence([2, 1, 1], base=1)
    c = ExplicitSequence([1, 1, 3], base=1)
    sa = sum(a.values)
    sb = sum(b.values)
    sc = sum(c.values)
    sab = sum(x * y for x, y in zip(a.values, b.values))
    sac = sum(x * y for x, y in zip(a.values, c.values))
    sbc = sum(x * y for x, y in zip(b.values, c.values))
    sabc = sum(x * y * z for x, y, z in zip(a.values, b.values, c.values))
    expected = sa * sb * sc - sa * sbc - sb * sac - sc * sab + 2 * sabc
    assert reduce_symmetrized((a, b, c), 1, 3) == expected
    assert symmetrized_multiple_sum((a, b, c), 1, 3) == expected


explicit_values = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=9),
    min_size=1,
    max_size=8,
)


@given(explicit_values, st.integers(min_value=0, max_value=5))
def test_reduce_equals_brute_property(values, m):
    spec = ExplicitSequence(values, base=1)
    n = len(values)
    assert reduce_multiple_sum(spec, m, 1, n) == brute_multiple_sum(SumProblem((spec,) * m, 1, n))


@given(explicit_values)
def test_full_window_reduction_is_plain_product(values):
    spec = ExplicitSequence(values, base=1)
    n = len(values)
    product = Fraction(1)
    for v in values:
        product *= v
    assert reduce_multiple_sum(spec, n, 1, n) == product


def test_reduction_speed_large_window():
    # the point of the reduction: m=5 over ten thousand terms, well under a second
    started = time.perf_counter()
    value = reduce_multiple_sum(N, 5, 1, 10_000)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    # independent check: elementary symmetric DP over the same window
    e = [Fraction(1)] + [Fraction(0)] * 5
    for a in range(1, 10_001):
        for k in range(5, 0, -1):
            e[k] += a * e[k - 1]
    assert value == e[5]
