from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permlis.counting import (
    binomial,
    catalan,
    count_lis,
    count_lis_231,
    count_lis_321,
    cum_count_lis_132,
    cum_count_lis_321,
    dist_table,
    exact_moments,
    two_row_tableau_count,
)
from permlis.errors import BoundExceededError
from permlis.oracle import histogram_lis
from permlis.permutations import PATTERNS


def test_binomial_conventions():
    assert binomial(6, 3) == 20
    assert binomial(8, -2) == 0
    assert binomial(5, 7) == 0
    assert binomial(-1, 0) == 0
    assert binomial(8, 4) // 5 == 14


def test_catalan_small_values_and_recurrence():
    assert catalan(0) == 1
    assert catalan(4) == 14
    # independent cross-check: the convolution recurrence up to n = 12
    values = [1]
    for n in range(12):
        values.append(sum(values[i] * values[n - i] for i in range(n + 1)))
    for n, c in enumerate(values):
        assert catalan(n) == c
    assert catalan(10) == 16796


# ---------------------------------------------------------------------------
# (231): Narayana numbers


@pytest.mark.parametrize(
    "n, k, expected", [(4, 2, 6), (1, 1, 1), (5, 2, 10), (5, 4, 10)]
)
def test_count_231_examples(n, k, expected):
    assert count_lis_231(n, k) == expected


def test_231_row_sums_and_symmetry():
    for n in range(1, 61):
        row = [count_lis_231(n, k) for k in range(1, n + 1)]
        assert sum(row) == catalan(n)
        assert row == row[::-1]


# ---------------------------------------------------------------------------
# (132): cumulative counts


def test_cum_132_examples():
    assert cum_count_lis_132(3, 2) == 1
    assert cum_count_lis_132(1, 1) == 0
    for n in range(0, 30):
        assert cum_count_lis_132(n, n + 1) == catalan(n)
        assert cum_count_lis_132(n, n + 5) == catalan(n)


def test_cum_132_is_integral_and_monotone():
    # integrality is enforced by exact division inside; this exercises it
    for n in range(0, 61):
        prev = cum_count_lis_132(n, 1)
        assert prev == (1 if n == 0 else 0)
        for k in range(1, n + 2):
            cur = cum_count_lis_132(n, k)
            assert cur >= prev
            prev = cur


# ---------------------------------------------------------------------------
# (321): squared tableau counts


@pytest.mark.parametrize("n, k, expected", [(4, 2, 4), (4, 3, 9), (4, 1, 0)])
def test_count_321_examples(n, k, expected):
    assert count_lis_321(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(4, 2, 2), (4, 4, 1), (4, 3, 3)])
def test_two_row_tableau_count_examples(n, k, expected):
    assert two_row_tableau_count(n, k) == expected


def test_two_row_tableau_count_domain():
    with pytest.raises(ValueError):
        two_row_tableau_count(4, 1)
    with pytest.raises(ValueError):
        two_row_tableau_count(4, 5)


def test_321_square_identity_and_sums():
    for n in range(1, 61):
        total = 0
        for k in range((n + 1) // 2, n + 1):
            a = count_lis_321(n, k)
            assert a == two_row_tableau_count(n, k) ** 2
            total += a
        assert total == catalan(n)


def test_cum_321_examples_and_vanishing():
    assert cum_count_lis_321(5, 2) == 0
    assert cum_count_lis_321(4, 4) == 14
    assert cum_count_lis_321(4, 3) == 13
    for n in range(1, 101):
        for k in range(1, (n - 1) // 2 + 1):  # exactly the n >= 2k+1 regime
            assert cum_count_lis_321(n, k) == 0


# ---------------------------------------------------------------------------
# assembled tables


@pytest.mark.parametrize(
    "pattern, n, expected",
    [
        ("312", 4, {1: 1, 2: 6, 3: 6, 4: 1}),
        ("213", 3, {1: 1, 2: 3, 3: 1}),
        ("132", 3, {1: 1, 2: 3, 3: 1}),
        ("123", 5, {1: 1, 2: 41}),
        ("123", 1, {1: 1}),
    ],
)
def test_dist_table_examples(pattern, n, expected):
    assert dist_table(pattern, n).counts == expected


def test_dist_table_matches_enumeration():
    for n in range(1, 8):
        for pattern in PATTERNS:
            assert dist_table(pattern, n).counts == histogram_lis(n, pattern)


def test_dist_table_probabilities_sum_to_one():
    for pattern in PATTERNS:
        table = dist_table(pattern, 9)
        assert table.total == catalan(9)
        assert sum(table.probabilities().values()) == 1


def test_dist_table_132_bound():
    with pytest.raises(BoundExceededError):
        dist_table("132", 50, limit_132=49)
    with pytest.raises(BoundExceededError):
        exact_moments("213", 50, limit_132=49)


def test_count_lis_single_k_agrees_with_table():
    for pattern in PATTERNS:
        table = dist_table(pattern, 8)
        for k in range(0, 10):
            assert count_lis(pattern, 8, k) == table.counts.get(k, 0)


@given(st.integers(1, 40))
def test_moments_231_mean_is_half_n_plus_one(n):
    mean, _ = exact_moments("231", n)
    assert mean == Fraction(n + 1, 2)


def test_moments_132_example():
    # brute-force histogram of S_4(132) is {1: 1, 2: 7, 3: 5, 4: 1}
    histogram = histogram_lis(4, "132")
    assert histogram == {1: 1, 2: 7, 3: 5, 4: 1}
    expected_mean = Fraction(sum(k * c for k, c in histogram.items()), 14)
    mean, _ = exact_moments("132", 4)
    assert mean == expected_mean == Fraction(17, 7)


def test_moments_match_enumeration():
    for n in range(1, 8):
        for pattern in PATTERNS:
            histogram = histogram_lis(n, pattern)
            total = sum(histogram.values())
            m1 = Fraction(sum(k * c for k, c in histogram.items()), total)
            m2 = Fraction(sum(k * k * c for k, c in histogram.items()), total)
            mean, var = exact_moments(pattern, n)
            assert mean == m1
            assert var == m2 - m1 * m1
