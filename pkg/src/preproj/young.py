"""Young diagrams and symmetric-group irreducibles in Young's seminormal form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .linalg import Mat

MAX_IRREP_SIZE = 7


@dataclass(frozen=True)
class YoungDiagram:
    """A partition, stored as weakly decreasing positive row lengths."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise ValueError("row lengths must be positive")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError("row lengths must be weakly decreasing")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, d) -> "YoungDiagram":
        if isinstance(d, YoungDiagram):
            return d
        if isinstance(d, str):
            return cls(tuple(int(x) for x in d.replace(" ", "").split(",") if x))
        if isinstance(d, int):
            return cls((d,))
        return cls(tuple(d))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def boxes(self):
        for r, length in enumerate(self.rows):
            for c in range(length):
                yield r, c

    def conjugate(self) -> "YoungDiagram":
        if not self.rows:
            return self
        return YoungDiagram(tuple(sum(1 for r in self.rows if r > c) for c in range(self.rows[0])))

    def hook_dimension(self) -> int:
        cols = self.conjugate().rows
        prod = 1
        for r, c in self.boxes():
            prod *= (self.rows[r] - c - 1) + (cols[c] - r - 1) + 1
        return factorial(self.size) // prod

    def __str__(self):
        return ",".join(str(r) for r in self.rows)


def partitions(n: int, max_part: int | None = None):
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_rectangular(d) -> tuple[int, int] | None:
    """``(rows, columns)`` when every row has the same length, else None."""
    d = YoungDiagram.of(d)
    if not d.rows or len(set(d.rows)) != 1:
        return None
    return (len(d.rows), d.rows[0])


def content_sum(d) -> int:
    """Sum over boxes of (column - row), 0-indexed."""
    return sum(c - r for r, c in YoungDiagram.of(d).boxes())


def standard_tableaux(d) -> list[tuple[tuple[int, int], ...]]:
    """Standard tableaux as tuples ``pos[k] = (row, col)`` of entry ``k``.

    Entries are 0-indexed.  Order is deterministic (row-reading recursion).
    """
    d = YoungDiagram.of(d)
    out = []

    def grow(filled: list[int], placed: list[tuple[int, int]]):
        if len(placed) == d.size:
            out.append(tuple(placed))
            return
        for r in range(len(d.rows)):
            c = filled[r]
            if c < d.rows[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                placed.append((r, c))
                grow(filled, placed)
                placed.pop()
                filled[r] -= 1

    grow([0] * len(d.rows), [])
    return out


@lru_cache(maxsize=None)
def _seminormal(rows: tuple[int, ...]) -> tuple[Mat, ...]:
    tabs = standard_tableaux(rows)
    index = {t: k for k, t in enumerate(tabs)}
    n = sum(rows)
    dim = len(tabs)
    gens = []
    for k in range(n - 1):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for col, t in enumerate(tabs):
            (r1, c1), (r2, c2) = t[k], t[k + 1]
            axial = (c2 - r2) - (c1 - r1)
            m[col][col] = Fraction(1, axial)
            if r1 == r2 or c1 == c2:
                continue
            swapped = list(t)
            swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
            other = index[tuple(swapped)]
            # k+1 below k in t means t is the "larger" tableau of the pair.
            if r2 > r1:
                m[other][col] = Fraction(1)
            else:
                m[other][col] = 1 - Fraction(1, axial * axial)
        gens.append(Mat(m, dim))
    return tuple(gens)


def symmetric_group_irrep(d) -> list[Mat]:
    """Seminormal matrices of the adjacent transpositions ``s_0 .. s_{n-2}``.

    ``s_k`` swaps ``k`` and ``k+1`` (0-indexed).  Entries are rational.
    """
    d = YoungDiagram.of(d)
    if d.size > MAX_IRREP_SIZE:
        raise ValueError(f"diagram of size {d.size} exceeds the supported size {MAX_IRREP_SIZE}")
    return list(_seminormal(d.rows))


def irrep_dimension(d) -> int:
    return len(standard_tableaux(d))


def coxeter_relations_hold(gens: Sequence[Mat]) -> bool:
    if not gens:
        return True
    dim = gens[0].nrows
    one = Mat.identity(dim)
    for k, s in enumerate(gens):
        if s @ s != one:
            return False
        for j in range(k + 1, len(gens)):
            t = gens[j]
            if j == k + 1:
                if s @ t @ s != t @ s @ t:
                    return False
            elif s @ t != t @ s:
                return False
    return True


def permutation_word(perm: Sequence[int]) -> list[int]:
    """Adjacent transpositions ``[k1, k2, ...]`` with ``perm = s_kr ... s_k1``.

    ``perm[m]`` is the image of ``m``.  Applying ``s_k1`` first, then
    ``s_k2`` and so on realizes ``perm``.
    """
    cur = list(perm)
    ks = []
    changed = True
    while changed:
        changed = False
        for k in range(len(cur) - 1):
            if cur[k] > cur[k + 1]:
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                ks.append(k)
                changed = True
    return ks


def perm_matrix_in_irrep(gens: Sequence[Mat], perm: Sequence[int], dim: int) -> Mat:
    out = Mat.identity(dim)
    for k in permutation_word(perm):
        out = gens[k] @ out
    return out
