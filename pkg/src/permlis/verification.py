"""Cross-checks of every closed form and bijection against brute-force enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .bijections import (
    dyck_height,
    dyck_to_perm132,
    dyck_to_tree,
    iter_dyck_paths,
    perm132_to_dyck,
    rsk_insert,
    rsk_inverse,
    tree_height,
    tree_to_dyck,
)
from .counting import catalan, dist_table
from .oracle import enumerate_class, histogram_lis
from .permutations import PATTERNS, avoids, iter_permutations, lis_length

#: Full-S_n checks (RSK) get expensive fast; cap them independently of n_max.
RSK_FULL_SN_CAP = 7
DYCK_CLASS_CAP = 10
TREE_CAP = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check_tables(n_max: int) -> list[CheckResult]:
    out = []
    for pattern in PATTERNS:
        ok = True
        detail = ""
        for n in range(1, n_max + 1):
            expected = histogram_lis(n, pattern, n_max=n_max)
            got = dist_table(pattern, n).counts
            if got != expected:
                ok = False
                detail = f"n={n}: formula {got} != enumeration {expected}"
                break
            if sum(got.values()) != catalan(n):
                ok = False
                detail = f"n={n}: total {sum(got.values())} != Catalan {catalan(n)}"
                break
        out.append(CheckResult(f"table({pattern}) vs enumeration, n <= {n_max}", ok, detail))
    return out


def _check_dyck_bijection(n_max: int) -> CheckResult:
    cap = min(n_max, DYCK_CLASS_CAP)
    for n in range(cap + 1):
        images = set()
        for p in enumerate_class(n, "132", n_max=cap):
            d = perm132_to_dyck(p)
            if dyck_to_perm132(d) != p:
                return CheckResult("132 <-> Dyck", False, f"round trip failed at {p}")
            if dyck_height(d) != lis_length(p):
                return CheckResult("132 <-> Dyck", False, f"height != LIS at {p}")
            images.add(d)
        if len(images) != catalan(n):
            return CheckResult("132 <-> Dyck", False, f"not bijective at n={n}")
    return CheckResult(f"132 <-> Dyck round trip, LIS = height, n <= {cap}", True)


def _check_tree_bijection(n_max: int) -> CheckResult:
    cap = min(n_max, TREE_CAP)
    for n in range(cap + 1):
        for d in iter_dyck_paths(n):
            t = dyck_to_tree(d)
            if tree_to_dyck(t) != d:
                return CheckResult("Dyck <-> tree", False, f"round trip failed at {d}")
            if tree_height(t) != dyck_height(d):
                return CheckResult("Dyck <-> tree", False, f"height mismatch at {d}")
    return CheckResult(f"Dyck <-> tree round trip, equal heights, n <= {cap}", True)


def _check_rsk(n_max: int) -> CheckResult:
    cap = min(n_max, RSK_FULL_SN_CAP)
    for n in range(cap + 1):
        for p in iter_permutations(n):
            pair = rsk_insert(p)
            if rsk_inverse(pair) != p:
                return CheckResult("RSK", False, f"round trip failed at {p}")
            row1 = len(pair.p.rows[0]) if pair.p.rows else 0
            if row1 != lis_length(p):
                return CheckResult("RSK", False, f"first row != LIS at {p}")
            if (len(pair.p.rows) <= 2) != avoids(p, "321"):
                return CheckResult("RSK", False, f"two-row test failed at {p}")
    return CheckResult(f"RSK round trip, Schensted row 1, two-row <=> avoids 321, n <= {cap}", True)


def run_verification(n_max: int = 9) -> list[CheckResult]:
    """Run every cross-check up to the given size; results in a fixed order."""
    results = _check_tables(n_max)
    results.append(_check_dyck_bijection(n_max))
    results.append(_check_tree_bijection(n_max))
    results.append(_check_rsk(n_max))
    return results
