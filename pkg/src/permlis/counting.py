"""Exact counts of avoiders by LIS length, in arbitrary-precision arithmetic.

All six length-3 avoidance classes of S_n have Catalan-many members; these
functions give the closed-form split of each class by the length of the
longest increasing subsequence:

* (231) and (312): the Narayana numbers ``binomial(n,k) * binomial(n,k-1) / n``.
* (132) and (213): differences of the cumulative count ``cum_count_lis_132``,
  a two-sided binomial sum inherited from ordered trees counted by height.
* (321): the squared two-row standard-Young-tableau count
  ``two_row_tableau_count(n, k) ** 2``, supported on floor((n+1)/2) <= k <= n.
* (123): concentrated on LIS length 2, except the reversed identity.

Counts are Python ints (exact at every n); probabilities and moments are
``fractions.Fraction`` values, converted to float only by callers that need
statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceededError
from .permutations import PATTERNS

#: Bound for the O(n^2)-term evaluation of the (132)/(213) table.
LIMIT_132_DEFAULT = 2000


def exact_div(a: int, b: int) -> int:
    """Integer division that insists on divisibility."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def binomial(a: int, b: int) -> int:
    """C(a, b) with the out-of-range convention C(a, b) = 0.

    Zero is returned whenever b < 0, b > a, or a < 0, which is what the
    doubly infinite sums below require.

    >>> binomial(6, 3), binomial(8, -2), binomial(-1, 0)
    (20, 0, 0)
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    """The Catalan number C(2n, n) / (n + 1); the size of every avoidance class.

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def count_lis_231(n: int, k: int) -> int:
    """Number of (231)-avoiders of n letters whose LIS has length exactly k.

    This is the Narayana number binomial(n,k) * binomial(n,k-1) / n, symmetric
    under k -> n+1-k.  Zero outside 1 <= k <= n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= k <= n:
        return 0
    return exact_div(binomial(n, k) * binomial(n, k - 1), n)


def cum_count_lis_132(n: int, k: int) -> int:
    """Number of (132)-avoiders of n letters whose LIS is strictly shorter than k.

    Equals the number of ordered trees with n edges and height < k:

        2 * sum_t [ C(2n, n + t(k+1)) - (1/4) C(2n+2, n+1 + t(k+1)) ]

    over all integers t.  The quarter is cleared by summing
    4*C(2n, .) - C(2n+2, .) and halving at the end; the result is integral.
    Note the strict inequality: ``cum_count_lis_132(n, n + 1) == catalan(n)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be at least 1")
    period = k + 1
    total = 4 * binomial(2 * n, n) - binomial(2 * n + 2, n + 1)
    t = 1
    while t * period <= 2 * n + 2:
        off = t * period
        total += 4 * binomial(2 * n, n + off) - binomial(2 * n + 2, n + 1 + off)
        total += 4 * binomial(2 * n, n - off) - binomial(2 * n + 2, n + 1 - off)
        t += 1
    return exact_div(total, 2)


def two_row_tableau_count(n: int, k: int) -> int:
    """Number of standard Young tableaux with n cells, at most two rows, k columns.

    By the hook length formula this is (2k-n+1) / (n+1) * binomial(n+1, n-k),
    defined for floor((n+1)/2) <= k <= n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not (n + 1) // 2 <= k <= n:
        raise ValueError(f"k={k} outside the two-row support for n={n}")
    return exact_div((2 * k - n + 1) * binomial(n + 1, n - k), n + 1)


def count_lis_321(n: int, k: int) -> int:
    """Number of (321)-avoiders of n letters whose LIS has length exactly k.

    The square of :func:`two_row_tableau_count` on its support (Schensted
    pairs of two-row tableaux with k columns) and zero otherwise; in
    particular zero for k < floor((n+1)/2), the Erdos-Szekeres threshold.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not (n + 1) // 2 <= k <= n:
        return 0
    return two_row_tableau_count(n, k) ** 2


def cum_count_lis_321(n: int, k: int) -> int:
    """Number of (321)-avoiders of n letters whose LIS has length at most k.

    Note the weak inequality, unlike :func:`cum_count_lis_132`.  Vanishes
    whenever n >= 2k + 1 (every such avoider has an increasing run of
    length k + 1).
    """
    if n < 1:
        raise ValueError("n must be positive")
    lo = (n + 1) // 2
    return sum(count_lis_321(n, j) for j in range(lo, min(k, n) + 1))


def count_lis(pattern: str, n: int, k: int) -> int:
    """Number of ``pattern``-avoiders of n letters with LIS length exactly k."""
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    if n < 1:
        raise ValueError("n must be positive")
    if pattern in ("231", "312"):
        return count_lis_231(n, k)
    if pattern in ("132", "213"):
        if not 1 <= k <= n:
            return 0
        return cum_count_lis_132(n, k + 1) - cum_count_lis_132(n, k)
    if pattern == "321":
        return count_lis_321(n, k)
    # (123): everything has LIS length 2 except the reversed identity.
    if k == 1:
        return 1
    if k == 2 and n >= 2:
        return catalan(n) - 1
    return 0


@dataclass(frozen=True)
class DistTable:
    """Exact histogram of LIS lengths over one avoidance class of S_n."""

    pattern: str
    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def probabilities(self) -> dict[int, Fraction]:
        total = self.total
        return {k: Fraction(c, total) for k, c in sorted(self.counts.items())}

    def mean(self) -> Fraction:
        return Fraction(sum(k * c for k, c in self.counts.items()), self.total)

    def variance(self) -> Fraction:
        m = self.mean()
        second = Fraction(sum(k * k * c for k, c in self.counts.items()), self.total)
        return second - m * m


def dist_table(pattern: str, n: int, *, limit_132: int = LIMIT_132_DEFAULT) -> DistTable:
    """Exact LIS-length histogram for any of the six patterns.

    Entries with zero count are omitted, matching the brute-force histogram.
    The (132)/(213) evaluation costs O(n^2) big-integer terms and is bounded
    by ``limit_132``.
    """
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    if n < 1:
        raise ValueError("n must be positive")

    counts: dict[int, int]
    if pattern in ("231", "312"):
        counts = {k: count_lis_231(n, k) for k in range(1, n + 1)}
    elif pattern in ("132", "213"):
        if n > limit_132:
            raise BoundExceededError(
                f"n={n} exceeds the (132)/(213) exact-table bound {limit_132}"
            )
        counts = {}
        prev = cum_count_lis_132(n, 1)
        for k in range(1, n + 1):
            cur = cum_count_lis_132(n, k + 1)
            counts[k] = cur - prev
            prev = cur
    elif pattern == "321":
        counts = {k: count_lis_321(n, k) for k in range((n + 1) // 2, n + 1)}
    else:  # "123"
        counts = {1: 1} if n == 1 else {1: 1, 2: catalan(n) - 1}

    counts = {k: c for k, c in counts.items() if c}
    return DistTable(pattern=pattern, n=n, counts=counts)


def exact_moments(
    pattern: str, n: int, *, limit_132: int = LIMIT_132_DEFAULT
) -> tuple[Fraction, Fraction]:
    """Exact (mean, variance) of the LIS length over one avoidance class."""
    table = dist_table(pattern, n, limit_132=limit_132)
    return table.mean(), table.variance()
