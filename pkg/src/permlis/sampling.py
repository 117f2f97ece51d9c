"""Exactly uniform random generation for Dyck paths and all six avoidance classes.

No rejection and no floating point: every branch of the construction is taken
with probability (number of completions after the branch) / (number of
completions), realized as an integer draw below the exact denominator.  The
completion-count ratios collapse to small closed forms:

* Dyck path at height h with m steps left:  P(U) = (h+2)(m-h) / (2m(h+1)).
* Two-row tableau of shape (p, q), deleting the largest letter:
  P(row 2) = q(p-q+2) / ((p+q)(p-q+1)).

Both follow from the ballot-style product formulas for the completion counts,
so each sampled object carries probability exactly 1/(class size).

Routes per class: (132) pulls back a uniform Dyck path through the
height-preserving bijection; (231), (312), (213) are reversal/complement
images of a (132) draw; (321) picks a two-row shape with probability
(tableau count)^2 / Catalan and inverts Schensted insertion on two
independent uniform tableaux; (123) is the reversal of a (321) draw.
"""

from __future__ import annotations

import random
import secrets
from bisect import bisect_right

from .bijections import Tableau, TableauPair, dyck_to_perm132, rsk_inverse
from .counting import catalan, count_lis_321
from .permutations import PATTERNS, Perm, complement, reverse

_GENERATOR_NOTE = "random.Random (MT19937); identical seeds replay identical streams"


class SamplerState:
    """Seeded generator state plus cached per-n shape weights.

    Single-owner: one state must not be shared across concurrent callers.
    Draws from equal seeds reproduce the same sequence run to run; the
    underlying generator is the stdlib Mersenne Twister, whose algorithm is
    stable across platforms.
    """

    def __init__(self, seed: int | None = None):
        if seed is None:
            seed = secrets.randbits(64)
        self.seed = seed
        self.rng = random.Random(seed)
        self._shape_tables: dict[int, tuple[list[int], list[int]]] = {}

    def __repr__(self) -> str:
        return f"SamplerState(seed={self.seed})"

    def shape_table(self, n: int) -> tuple[list[int], list[int]]:
        """Column counts k and cumulative weights of two-row shapes of S_n(321)."""
        cached = self._shape_tables.get(n)
        if cached is not None:
            return cached
        ks: list[int] = []
        cums: list[int] = []
        running = 0
        for k in range((n + 1) // 2, n + 1):
            running += count_lis_321(n, k)
            ks.append(k)
            cums.append(running)
        self._shape_tables[n] = (ks, cums)
        return ks, cums


def sample_dyck_uniform(n: int, state: SamplerState) -> str:
    """A Dyck path of semilength n, each of the C_n paths equally likely."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = state.rng
    steps: list[str] = []
    h = 0
    for m in range(2 * n, 0, -1):
        up_weight = (h + 2) * (m - h)
        if rng.randrange(2 * m * (h + 1)) < up_weight:
            steps.append("U")
            h += 1
        else:
            steps.append("D")
            h -= 1
    return "".join(steps)


def _sample_two_row_tableau(k: int, n: int, state: SamplerState) -> Tableau:
    """Uniform standard tableau of shape (k, n-k), by corner deletion.

    Deleting letters n down to 1, the corner choice with probability
    (count of smaller shape)/(count of current shape) telescopes to an
    exactly uniform tableau.
    """
    rng = state.rng
    p, q = k, n - k
    row1: list[int] = []
    row2: list[int] = []
    while p + q:
        letter = p + q
        if q and rng.randrange((p + q) * (p - q + 1)) < q * (p - q + 2):
            row2.append(letter)
            q -= 1
        else:
            row1.append(letter)
            p -= 1
    row1.reverse()
    row2.reverse()
    rows = (tuple(row1), tuple(row2)) if row2 else (tuple(row1),)
    return Tableau(rows)


def _sample_321(n: int, state: SamplerState) -> Perm:
    ks, cums = state.shape_table(n)
    r = state.rng.randrange(cums[-1])
    k = ks[bisect_right(cums, r)]
    p = _sample_two_row_tableau(k, n, state)
    q = _sample_two_row_tableau(k, n, state)
    return rsk_inverse(TableauPair(p=p, q=q))


def sample_avoider(pattern: str, n: int, state: SamplerState) -> Perm:
    """A uniform random ``pattern``-avoiding permutation of 1..n."""
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    if n < 1:
        raise ValueError("n must be positive")
    if pattern in ("132", "231", "312", "213"):
        base = dyck_to_perm132(sample_dyck_uniform(n, state))
        if pattern == "132":
            return base
        if pattern == "231":
            return reverse(base)
        if pattern == "312":
            return complement(base)
        return reverse(complement(base))
    if pattern == "321":
        return _sample_321(n, state)
    # (123): reversal maps S_n(321) onto S_n(123) bijectively.
    return reverse(_sample_321(n, state))
