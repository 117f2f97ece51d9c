"""Dyck paths, ordered trees, Schensted insertion, and the maps between them.

Three structures, three correspondences:

* 132-avoiding permutations <-> Dyck paths, sending LIS length to path height.
  A nonempty 132-avoider factors uniquely as (sigma, n, tau) around its
  maximum, with every letter of sigma above every letter of tau; the map is
  ``U map(sigma) D map(tau)``, so height(image) = max(1 + LIS(sigma),
  LIS(tau)) = LIS(p).
* Dyck paths <-> ordered trees via the traversal reading (U descends to a new
  child, D returns to the parent); path height equals tree height in edges.
* Permutations <-> same-shape pairs of standard Young tableaux via Schensted
  row insertion; the first row of the insertion tableau has the LIS length,
  and the pair has at most two rows exactly when the permutation avoids 321.

Dyck paths are strings over {U, D}; ordered trees are nested tuples of child
subtrees (the 0-edge tree is ``()``); tableaux are tuples of row tuples.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import MalformedPathError, PatternContainedError, TableauError
from .permutations import Perm, contains_pattern

Tree = tuple  # nested tuples: each node is the tuple of its child subtrees


# ---------------------------------------------------------------------------
# Dyck paths


def is_dyck_path(steps: str) -> bool:
    h = 0
    for s in steps:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def check_dyck_path(steps: str) -> str:
    if not is_dyck_path(steps):
        raise MalformedPathError(f"not a Dyck path: {steps!r}")
    return steps


def dyck_height(steps: str) -> int:
    """Maximum prefix excess of U steps over D steps."""
    h = best = 0
    for s in steps:
        h += 1 if s == "U" else -1
        if h > best:
            best = h
    return best


def iter_dyck_paths(n: int) -> Iterator[str]:
    """All Dyck paths of semilength n (C_n of them)."""
    if n == 0:
        yield ""
        return
    # first-return split: U A D B with A, B Dyck
    for a in range(n):
        for inner in iter_dyck_paths(a):
            for rest in iter_dyck_paths(n - 1 - a):
                yield "U" + inner + "D" + rest


def _match_indices(steps: str) -> list[int]:
    match = [0] * len(steps)
    stack: list[int] = []
    for i, s in enumerate(steps):
        if s == "U":
            stack.append(i)
        else:
            match[stack.pop()] = i
    return match


def perm132_to_dyck(p: Sequence[int]) -> str:
    """Map a 132-avoiding permutation to a Dyck path of equal semilength.

    Height of the image equals the LIS length of ``p``.  Raises
    PatternContainedError when ``p`` contains 132.
    """
    if contains_pattern(p, "132"):
        raise PatternContainedError(f"permutation contains 132: {tuple(p)!r}")
    out: list[str] = []
    # Explicit stack replaces recursion on (sigma, max, tau); "D" tokens mark
    # where the matching down-step goes once sigma is emitted.
    work: list[object] = [(0, len(p))]
    while work:
        item = work.pop()
        if item == "D":
            out.append("D")
            continue
        i, j = item  # type: ignore[misc]
        if i == j:
            continue
        m = i
        for t in range(i + 1, j):
            if p[t] > p[m]:
                m = t
        out.append("U")
        work.append((m + 1, j))
        work.append("D")
        work.append((i, m))
    return "".join(out)


def dyck_to_perm132(steps: str) -> Perm:
    """Inverse of :func:`perm132_to_dyck`."""
    check_dyck_path(steps)
    n = len(steps) // 2
    out = [0] * n
    match = _match_indices(steps)
    # frame: steps[i:j] fills positions pos.. with letters low..low+m-1
    frames = [(0, len(steps), 0, 1)]
    while frames:
        i, j, pos, low = frames.pop()
        if i == j:
            continue
        d = match[i]
        a = (d - i - 1) // 2        # semilength inside the first U..D
        m = (j - i) // 2
        b = m - 1 - a               # semilength after the first return
        out[pos + a] = low + m - 1
        frames.append((i + 1, d, pos, low + b))
        frames.append((d + 1, j, pos + a + 1, low))
    return tuple(out)


# ---------------------------------------------------------------------------
# Ordered trees


def dyck_to_tree(steps: str) -> Tree:
    """Read a Dyck path as a tree traversal: U opens a child, D closes it."""
    check_dyck_path(steps)
    stack: list[list] = [[]]
    for s in steps:
        if s == "U":
            stack.append([])
        else:
            done = tuple(stack.pop())
            stack[-1].append(done)
    return tuple(stack[0])


def tree_to_dyck(tree: Tree) -> str:
    """Inverse of :func:`dyck_to_tree`."""
    out: list[str] = []
    stack = [iter(tree)]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            if stack:
                out.append("D")
        else:
            out.append("U")
            stack.append(iter(child))
    return "".join(out)


def tree_height(tree: Tree) -> int:
    """Edges on the longest root-to-leaf path; 0 for the single-node tree."""
    best = 0
    stack: list[tuple[Tree, int]] = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        if depth > best:
            best = depth
        for child in node:
            stack.append((child, depth + 1))
    return best


def tree_edge_count(tree: Tree) -> int:
    count = 0
    stack: list[Tree] = [tree]
    while stack:
        node = stack.pop()
        count += len(node)
        stack.extend(node)
    return count


def tree_to_parens(tree: Tree) -> str:
    """Balanced-parenthesis string, one () pair per edge."""
    return tree_to_dyck(tree).replace("U", "(").replace("D", ")")


# ---------------------------------------------------------------------------
# Tableaux and Schensted insertion


@dataclass(frozen=True)
class Tableau:
    """Rows of a standard Young tableau, as a tuple of increasing row tuples."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        """Row-list form used for JSON serialization."""
        return [list(r) for r in self.rows]


def is_standard(t: Tableau) -> bool:
    """Letters 1..n each once, rows and columns strictly increasing, shape a partition."""
    rows = t.rows
    letters = [x for row in rows for x in row]
    n = len(letters)
    if sorted(letters) != list(range(1, n + 1)):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            return False
        if any(lower[i] <= upper[i] for i in range(len(lower))):
            return False
    return True


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau P and recording tableau Q of equal shape."""

    p: Tableau
    q: Tableau


def rsk_insert(perm: Sequence[int]) -> TableauPair:
    """Schensted row insertion.

    The first row of P has length equal to the LIS length of ``perm``, and P
    has at most two rows exactly when ``perm`` avoids 321.
    """
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for pos, x in enumerate(perm, start=1):
        r = 0
        while True:
            if r == len(prows):
                prows.append([x])
                qrows.append([pos])
                break
            row = prows[r]
            i = bisect_left(row, x)
            if i == len(row):
                row.append(x)
                qrows[r].append(pos)
                break
            row[i], x = x, row[i]
            r += 1
    return TableauPair(
        p=Tableau(tuple(tuple(r) for r in prows)),
        q=Tableau(tuple(tuple(r) for r in qrows)),
    )


def rsk_inverse(pair: TableauPair) -> Perm:
    """Recover the permutation from a same-shape standard pair."""
    if pair.p.shape != pair.q.shape:
        raise TableauError(f"shape mismatch: {pair.p.shape} vs {pair.q.shape}")
    if not is_standard(pair.p) or not is_standard(pair.q):
        raise TableauError("both tableaux must be standard")
    prows = [list(r) for r in pair.p.rows]
    qrows = [list(r) for r in pair.q.rows]
    n = pair.p.size
    out: list[int] = []
    for letter in range(n, 0, -1):
        r = next(i for i, row in enumerate(qrows) if row and row[-1] == letter)
        qrows[r].pop()
        x = prows[r].pop()
        for s in range(r - 1, -1, -1):
            row = prows[s]
            i = bisect_left(row, x) - 1   # rightmost entry below the bumped value
            row[i], x = x, row[i]
        out.append(x)
    return tuple(reversed(out))
