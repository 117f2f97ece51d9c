"""Convergence harness: exact finite-n normalized CDFs against the limit laws.

For a pattern family with limit law L, center c(n), and scale s(n), the
normalized statistic is (LIS - c(n)) / s(n); its exact finite-n distribution
is a step CDF built from the rational probabilities of
:func:`permlis.counting.dist_table`.  The Kolmogorov-Smirnov distance to L is
evaluated tightly, at both one-sided limits of every jump.

The (123) class is excluded: its law is concentrated on LIS lengths {1, 2}
and has no interesting normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .counting import dist_table
from .errors import LawMismatchError
from .limits import SQRT_PI, gamma321_cdf, normal_cdf, theta_cdf


@dataclass(frozen=True)
class LimitLaw:
    """A limiting CDF together with the finite-n centering and scaling."""

    name: str
    cdf: Callable[[float], float]
    center: Callable[[int], float]
    scale: Callable[[int], float]


def _theta_total(theta: float) -> float:
    return theta_cdf(theta) if theta > -SQRT_PI else 0.0


def _gamma_total(t: float) -> float:
    return gamma321_cdf(t) if t >= 0.0 else 0.0


NORMAL_231 = LimitLaw(
    name="normal231",
    cdf=normal_cdf,
    center=lambda n: (n + 1) / 2.0,
    scale=lambda n: math.sqrt(n) / 2.0,
)

THETA_132 = LimitLaw(
    name="theta132",
    cdf=_theta_total,
    center=lambda n: math.sqrt(math.pi * n),
    scale=lambda n: math.sqrt(n),
)

GAMMA_321 = LimitLaw(
    name="gamma321",
    cdf=_gamma_total,
    center=lambda n: n / 2.0,
    scale=lambda n: math.sqrt(n),
)

LAWS: dict[str, LimitLaw] = {
    law.name: law for law in (NORMAL_231, THETA_132, GAMMA_321)
}

_PATTERN_LAW: dict[str, LimitLaw] = {
    "231": NORMAL_231,
    "312": NORMAL_231,
    "132": THETA_132,
    "213": THETA_132,
    "321": GAMMA_321,
}


def law_for_pattern(pattern: str) -> LimitLaw:
    """The limit law describing a pattern family; (123) has none."""
    law = _PATTERN_LAW.get(pattern)
    if law is None:
        raise LawMismatchError(
            f"pattern {pattern!r} has no nondegenerate limit law"
            " (the (123) class concentrates on LIS lengths 1 and 2)"
        )
    return law


@dataclass(frozen=True)
class NormalizedCdf:
    """Step CDF of the normalized LIS statistic at one (pattern, n)."""

    pattern: str
    n: int
    thetas: tuple[float, ...]
    cums: tuple[float, ...]


def normalized_cdf(pattern: str, n: int) -> NormalizedCdf:
    """Exact step CDF of (LIS - center(n)) / scale(n) for one class."""
    law = law_for_pattern(pattern)
    table = dist_table(pattern, n)
    center = law.center(n)
    scale = law.scale(n)
    total = table.total
    thetas: list[float] = []
    cums: list[float] = []
    running = Fraction(0)
    for k in sorted(table.counts):
        running += Fraction(table.counts[k], total)
        thetas.append((k - center) / scale)
        cums.append(float(running))
    return NormalizedCdf(pattern=pattern, n=n, thetas=tuple(thetas), cums=tuple(cums))


def ks_distance(empirical: NormalizedCdf, law: LimitLaw) -> float:
    """sup |F_n - F| over both one-sided limits of every jump of F_n."""
    if law_for_pattern(empirical.pattern) is not law:
        raise LawMismatchError(
            f"law {law.name!r} does not describe the ({empirical.pattern}) family"
        )
    best = 0.0
    prev = 0.0
    for theta, cum in zip(empirical.thetas, empirical.cums):
        f = law.cdf(theta)
        best = max(best, abs(f - prev), abs(f - cum))
        prev = cum
    return best


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    ks_distance: float
    mean_error: float
    stdev_ratio: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-n distance of the exact finite-n distribution from its limit law.

    ``mean_error`` is |exact mean - center(n)| and ``stdev_ratio`` is the
    exact standard deviation divided by scale(n); for the (132)/(213) family
    the ratio is to be compared against theta_law_stdev() = 0.38506...
    """

    pattern: str
    law: str
    rows: tuple[ConvergenceRow, ...]


def convergence_report(
    pattern: str, n_list: Sequence[int], law: LimitLaw | None = None
) -> ConvergenceReport:
    if law is None:
        law = law_for_pattern(pattern)
    elif law_for_pattern(pattern) is not law:
        raise LawMismatchError(
            f"law {law.name!r} does not describe the ({pattern}) family"
        )
    rows = []
    for n in sorted(n_list):
        table = dist_table(pattern, n)
        emp = normalized_cdf(pattern, n)
        mean = float(table.mean())
        stdev = math.sqrt(float(table.variance()))
        rows.append(
            ConvergenceRow(
                n=n,
                ks_distance=ks_distance(emp, law),
                mean_error=abs(mean - law.center(n)),
                stdev_ratio=stdev / law.scale(n),
            )
        )
    return ConvergenceReport(pattern=pattern, law=law.name, rows=tuple(rows))
