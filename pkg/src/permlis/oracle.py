"""Brute-force ground truth: enumerate an avoidance class and histogram LIS lengths.

Everything numeric in this package is ultimately checked against these
enumerations.  They rely only on pattern containment being monotone under
extension (a prefix that contains a pattern cannot be completed into an
avoider), on :func:`permlis.permutations.contains_pattern`, which is itself
tested against exhaustive triple enumeration, and on patience sorting.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .errors import BoundExceededError
from .permutations import PATTERNS, Perm, contains_pattern, lis_length

#: Default enumeration cap.  The avoidance classes are Catalan-sized, so the
#: recursive generator stays usable a little past this, but full-class work
#: above n = 10 is no longer "desk scale".
N_MAX_DEFAULT = 10


def enumerate_class(n: int, pattern: str, *, n_max: int = N_MAX_DEFAULT) -> Iterator[Perm]:
    """Yield the pattern-avoiding permutations of 1..n in lexicographic order.

    Generation is a depth-first search over prefixes, pruned as soon as a
    prefix contains the pattern; candidates are tried in increasing order,
    which yields lexicographic output.
    """
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > n_max:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {n_max}")

    prefix: list[int] = []
    free = [True] * (n + 1)

    def walk() -> Iterator[Perm]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in range(1, n + 1):
            if not free[x]:
                continue
            prefix.append(x)
            if not contains_pattern(prefix, pattern):
                free[x] = False
                yield from walk()
                free[x] = True
            prefix.pop()

    return walk()


def histogram_lis(n: int, pattern: str, *, n_max: int = N_MAX_DEFAULT) -> dict[int, int]:
    """Map each LIS length k to the number of avoiders attaining it.

    The counts sum to the Catalan number C_n for every pattern.  For n = 0
    the histogram is {0: 1} (the empty permutation).
    """
    counts = Counter(lis_length(p) for p in enumerate_class(n, pattern, n_max=n_max))
    return dict(sorted(counts.items()))
