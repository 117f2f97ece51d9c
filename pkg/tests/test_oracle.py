import itertools

import pytest

from permlis.counting import catalan
from permlis.errors import BoundExceededError
from permlis.oracle import enumerate_class, histogram_lis
from permlis.permutations import PATTERNS, iter_permutations, pattern_perm


def rank3(tri):
    s = sorted(tri)
    return tuple(s.index(v) + 1 for v in tri)


def naive_class(n, pattern):
    """Filter S_n by exhaustive triple enumeration; the dumbest possible route."""
    pat = pattern_perm(pattern)
    return [
        p
        for p in iter_permutations(n)
        if not any(rank3(t) == pat for t in itertools.combinations(p, 3))
    ]


def test_enumerate_matches_naive_filter():
    for n in range(7):
        for pattern in PATTERNS:
            assert list(enumerate_class(n, pattern)) == naive_class(n, pattern)


def test_s3_231_class():
    got = list(enumerate_class(3, "231"))
    assert len(got) == 5
    assert (2, 3, 1) not in got


def test_empty_class():
    for pattern in PATTERNS:
        assert list(enumerate_class(0, pattern)) == [()]


def test_class_sizes_are_catalan():
    for n in range(8):
        for pattern in PATTERNS:
            assert sum(1 for _ in enumerate_class(n, pattern)) == catalan(n)


def test_lexicographic_order():
    for pattern in PATTERNS:
        members = list(enumerate_class(6, pattern))
        assert members == sorted(members)


def test_bound_exceeded():
    with pytest.raises(BoundExceededError):
        list(enumerate_class(11, "132"))
    with pytest.raises(BoundExceededError):
        histogram_lis(8, "132", n_max=7)


@pytest.mark.parametrize(
    "n, pattern, expected",
    [
        (4, "231", {1: 1, 2: 6, 3: 6, 4: 1}),
        (4, "321", {2: 4, 3: 9, 4: 1}),
        (3, "123", {1: 1, 2: 4}),
        (0, "132", {0: 1}),
    ],
)
def test_histogram_examples(n, pattern, expected):
    assert histogram_lis(n, pattern) == expected


def test_reversal_reductions_between_histograms():
    for n in range(1, 8):
        assert histogram_lis(n, "312") == histogram_lis(n, "231")
        assert histogram_lis(n, "213") == histogram_lis(n, "132")


def test_123_histogram_concentrates_on_two_lengths():
    for n in range(2, 8):
        assert histogram_lis(n, "123") == {1: 1, 2: catalan(n) - 1}
