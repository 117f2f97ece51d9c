"""Permutations in one-line notation, with length-3 pattern containment and LIS/LDS.

A permutation of n letters is a tuple holding each of 1..n exactly once
(1-based letters).  The empty permutation is allowed; its LIS length is 0.

Patterns are the six permutations of length 3, written as the strings
"123", "132", "213", "231", "312", "321".  A permutation contains a pattern
when some index triple i < j < k carries values in the same relative order
as the pattern; otherwise it avoids the pattern.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceededError

Perm = tuple[int, ...]

PATTERNS: tuple[str, ...] = ("123", "132", "213", "231", "312", "321")

#: Default cap for operations that enumerate all of S_n.
EXHAUSTIVE_LIMIT = 9


def is_permutation(values: Sequence[int]) -> bool:
    """Check that ``values`` holds each of 1..n exactly once.

    >>> [is_permutation(v) for v in [(), (1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, True, False, False]
    """
    n = len(values)
    if n == 0:
        return True
    if min(values) != 1 or max(values) != n:
        return False
    return len(set(values)) == n


def check_permutation(values: Iterable[int]) -> Perm:
    """Return ``values`` as a tuple, raising ValueError if not a permutation."""
    p = tuple(values)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reverse(p: Sequence[int]) -> Perm:
    """Reflect positions: output(i) = p(n+1-i)."""
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Perm:
    """Reflect values: output(i) = n+1-p(i)."""
    n = len(p)
    return tuple(n + 1 - x for x in p)


def pattern_perm(pattern: str) -> Perm:
    """The length-3 permutation denoted by a pattern label, e.g. "132" -> (1, 3, 2)."""
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    return tuple(int(ch) for ch in pattern)


def lis_length(p: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sorting).

    O(n log n): ``tails[i]`` is the smallest possible last element of an
    increasing subsequence of length i+1 seen so far.

    >>> lis_length((2, 7, 1, 5, 6, 3, 4))
    3
    >>> lis_length(())
    0
    """
    tails: list[int] = []
    for x in p:
        i = bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
    return len(tails)


def lds_length(p: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence.

    >>> lds_length((2, 7, 1, 5, 6, 3, 4))
    3
    """
    return lis_length(tuple(reversed(p)))


def _scan_123(p: Sequence[int]) -> bool:
    # Increasing triple: track the smallest letter seen and the smallest
    # letter that terminates an increasing pair.
    first = second = None
    for x in p:
        if second is not None and x > second:
            return True
        if first is None or x < first:
            first = x
        elif second is None or x < second:
            second = x
    return False


def _scan_132(p: Sequence[int]) -> bool:
    # Right-to-left stack scan: ``mid`` is the largest letter known to have a
    # larger letter before it; any earlier letter below ``mid`` completes 132.
    mid: int | None = None
    stack: list[int] = []
    for x in reversed(p):
        if mid is not None and x < mid:
            return True
        while stack and stack[-1] < x:
            mid = stack.pop()
        stack.append(x)
    return False


def contains_pattern(p: Sequence[int], pattern: str) -> bool:
    """True iff some i < j < k orders p(i), p(j), p(k) like ``pattern``.

    Each pattern reduces to a linear scan for "123" or "132" applied to a
    reversal and/or complement of ``p``, so the check runs in O(n) time.
    Only comparisons are used: ``p`` may be any sequence of distinct integers
    (e.g. a prefix of a permutation), not necessarily 1..n.  The generic
    triple enumeration lives in the test suite as the oracle.

    >>> contains_pattern((4, 1, 3, 2), "132")
    True
    >>> contains_pattern((3, 2, 1), "132")
    False
    """
    if pattern == "123":
        return _scan_123(p)
    if pattern == "321":
        return _scan_123(complement(p))
    if pattern == "132":
        return _scan_132(p)
    if pattern == "231":
        return _scan_132(reverse(p))
    if pattern == "312":
        return _scan_132(complement(p))
    if pattern == "213":
        return _scan_132(reverse(complement(p)))
    raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")


def avoids(p: Sequence[int], pattern: str) -> bool:
    return not contains_pattern(p, pattern)


def iter_permutations(n: int) -> Iterator[Perm]:
    """All permutations of 1..n in lexicographic order."""
    return iter(itertools.permutations(range(1, n + 1)))


def erdos_szekeres_check(n: int, r: int, s: int, *, limit: int = EXHAUSTIVE_LIMIT) -> bool:
    """Exhaustively verify the Erdos-Szekeres property on S_n.

    True iff every permutation of n >= (r-1)(s-1)+1 letters has a decreasing
    subsequence of length r or an increasing one of length s; vacuously true
    for smaller n.  This is a desk-scale verifier, not a proof: n is capped
    by ``limit``.
    """
    if r < 2 or s < 2:
        raise ValueError("r and s must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the exhaustive limit {limit}")
    if n < (r - 1) * (s - 1) + 1:
        return True
    return all(
        lds_length(p) >= r or lis_length(p) >= s for p in iter_permutations(n)
    )
