"""The infinite affine quivers A_inf, A_plus_inf, D_inf and explicit quivers.

Vertex conventions:

* ``A_plus_inf``: vertices 0, 1, 2, ... with arrows i -> i+1.
* ``A_inf``: vertices in Z with arrows i -> i+1.
* ``D_inf``: vertices 0, 1, 2, ... with arrows 0 -> 2, 1 -> 2 and i -> i+1
  for i >= 2.  Vertices 0 and 1 are the fork.

Arrows point toward the higher index.  Every algebra built on top of these
quivers is orientation independent, so one canonical choice is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence

from .linalg import nullspace_basis

FAMILIES = ("A_inf", "A_plus_inf", "D_inf", "explicit")


@dataclass(frozen=True, order=True)
class Arrow:
    """An arrow of the double quiver.

    ``tail -> head`` is the arrow of Q; ``star=True`` denotes its reverse
    ``a*: head -> tail``.  The double-quiver source and target are given by
    :attr:`source` and :attr:`target`.
    """

    tail: Hashable
    head: Hashable
    star: bool = False
    name: str = ""

    @property
    def source(self):
        return self.head if self.star else self.tail

    @property
    def target(self):
        return self.tail if self.star else self.head

    @property
    def base(self) -> "Arrow":
        return Arrow(self.tail, self.head, False, self.name) if self.star else self

    def dual(self) -> "Arrow":
        return Arrow(self.tail, self.head, not self.star, self.name)

    @property
    def label(self) -> str:
        base = self.name or f"a_{self.tail}_{self.head}"
        if self.star:
            return "astar" + base[1:] if base.startswith("a_") else base + "*"
        return base


class DimVector(Mapping):
    """A finitely supported integer vector on the vertices.

    Entries may be negative (reflections produce negative vectors); use
    :meth:`is_dimension_vector` to test the nonnegativity invariant.
    Zero entries are never stored.
    """

    __slots__ = ("_d", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        d = {}
        for k, v in items:
            if int(v) != v:
                raise ValueError(f"dimension entries must be integers, got {v!r}")
            if v:
                d[k] = d.get(k, 0) + int(v)
        self._d = {k: v for k, v in d.items() if v}
        self._hash = None

    @classmethod
    def unit(cls, v) -> "DimVector":
        return cls({v: 1})

    @classmethod
    def interval(cls, s: int, r: int) -> "DimVector":
        """``alpha_[s,r]``: ones on the integer interval ``s..r``."""
        return cls({k: 1 for k in range(s, r + 1)})

    def __getitem__(self, k):
        return self._d.get(k, 0)

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __contains__(self, k):
        return k in self._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, DimVector):
            return self._d == other._d
        if isinstance(other, Mapping):
            return self._d == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self._d.items(), key=_vkey))
        return f"DimVector({{{inner}}})"

    def __add__(self, other):
        d = dict(self._d)
        for k, v in other.items():
            d[k] = d.get(k, 0) + v
        return DimVector(d)

    def __sub__(self, other):
        d = dict(self._d)
        for k, v in other.items():
            d[k] = d.get(k, 0) - v
        return DimVector(d)

    def __neg__(self):
        return DimVector({k: -v for k, v in self._d.items()})

    def __rmul__(self, c: int):
        return DimVector({k: c * v for k, v in self._d.items()})

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._d, key=_vkey))

    def total(self) -> int:
        return sum(self._d.values())

    def is_dimension_vector(self) -> bool:
        return all(v > 0 for v in self._d.values())

    def is_zero(self) -> bool:
        return not self._d

    def leq(self, other) -> bool:
        """Componentwise ``self <= other``."""
        keys = set(self._d) | set(other)
        return all(self[k] <= other[k] for k in keys)


def _vkey(v):
    # Sort ints numerically and everything else by string after them.
    return (0, v, "") if isinstance(v, int) and not isinstance(v, bool) else (1, 0, str(v))


class Quiver:
    """A locally finite quiver: one of the infinite families or explicit."""

    def __init__(self, family: str, vertices: Sequence | None = None, arrows: Sequence | None = None):
        if family not in FAMILIES:
            raise ValueError(f"unknown quiver family {family!r}")
        self.family = family
        if family == "explicit":
            vertices = list(vertices or [])
            if len(set(vertices)) != len(vertices):
                raise ValueError("duplicate vertex id in explicit quiver")
            vset = set(vertices)
            built = []
            seen = set()
            for a in arrows or []:
                if isinstance(a, Arrow):
                    t, h, name = a.tail, a.head, a.name
                elif isinstance(a, Mapping):
                    t, h, name = a["tail"], a["head"], a.get("name", "")
                else:
                    t, h = a[0], a[1]
                    name = a[2] if len(a) > 2 else ""
                if t not in vset or h not in vset:
                    raise ValueError(f"arrow endpoint not a vertex: {t!r} -> {h!r}")
                arrow = Arrow(t, h, False, name or "")
                if arrow.label in seen:
                    raise ValueError(f"duplicate arrow name {arrow.label!r}; name parallel arrows")
                seen.add(arrow.label)
                built.append(arrow)
            self._vertices = tuple(vertices)
            self._arrows = tuple(built)
        else:
            if vertices is not None or arrows is not None:
                raise ValueError("vertices/arrows are only accepted for explicit quivers")
            self._vertices = None
            self._arrows = None

    def __repr__(self):
        if self.family == "explicit":
            return f"Quiver(explicit, {len(self._vertices)} vertices, {len(self._arrows)} arrows)"
        return f"Quiver({self.family})"

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return (self.family, self._vertices, self._arrows) == (
            other.family,
            other._vertices,
            other._arrows,
        )

    def __hash__(self):
        return hash((self.family, self._vertices, self._arrows))

    @property
    def is_infinite(self) -> bool:
        return self.family != "explicit"

    @property
    def is_type_a(self) -> bool:
        return self.family in ("A_inf", "A_plus_inf")

    def has_vertex(self, v) -> bool:
        if self.family == "explicit":
            return v in self._vertex_set
        if not isinstance(v, int) or isinstance(v, bool):
            return False
        return self.family == "A_inf" or v >= 0

    @cached_property
    def _vertex_set(self):
        return frozenset(self._vertices or ())

    def check_vertex(self, v):
        if not self.has_vertex(v):
            raise ValueError(f"{v!r} is not a vertex of {self!r}")

    def vertices(self, count: int | None = None) -> list:
        """Vertices in canonical order; infinite families need ``count``."""
        if self.family == "explicit":
            return list(self._vertices if count is None else self._vertices[:count])
        if count is None:
            raise ValueError("an infinite quiver needs a vertex count")
        return list(range(count))

    @cached_property
    def _explicit_incidence(self):
        inc = {v: [] for v in self._vertices}
        for a in self._arrows:
            inc[a.tail].append(a)
            if a.head != a.tail:
                inc[a.head].append(a)
        return inc

    def arrows_at(self, v) -> list[Arrow]:
        """Arrows of Q incident to ``v`` (each listed once)."""
        self.check_vertex(v)
        if self.family == "explicit":
            return list(self._explicit_incidence[v])
        out = []
        if self.family == "A_inf":
            out = [Arrow(v - 1, v), Arrow(v, v + 1)]
        elif self.family == "A_plus_inf":
            if v > 0:
                out.append(Arrow(v - 1, v))
            out.append(Arrow(v, v + 1))
        else:
            if v in (0, 1):
                out = [Arrow(v, 2)]
            elif v == 2:
                out = [Arrow(0, 2), Arrow(1, 2), Arrow(2, 3)]
            else:
                out = [Arrow(v - 1, v), Arrow(v, v + 1)]
        return out

    def arrows_within(self, vertex_set: Iterable) -> list[Arrow]:
        """Arrows of Q with both endpoints in ``vertex_set``."""
        vs = set(vertex_set)
        seen = []
        for v in sorted(vs, key=_vkey):
            for a in self.arrows_at(v):
                if a.tail in vs and a.head in vs and a not in seen:
                    seen.append(a)
        return seen

    def all_arrows(self) -> list[Arrow]:
        if self.family != "explicit":
            raise ValueError("an infinite quiver has infinitely many arrows")
        return list(self._arrows)

    def double_arrows_from(self, v) -> list[Arrow]:
        """Arrows of the double quiver whose source is ``v``."""
        out = []
        for a in self.arrows_at(v):
            if a.tail == v:
                out.append(a)
            if a.head == v:
                out.append(a.dual())
        return out

    def neighbors(self, v) -> list:
        out = []
        for a in self.arrows_at(v):
            for w in (a.tail, a.head):
                if w != v and w not in out:
                    out.append(w)
        return sorted(out, key=_vkey)

    def has_loop(self, v) -> bool:
        return any(a.tail == a.head == v for a in self.arrows_at(v))

    def is_connected(self, vertex_set: Iterable) -> bool:
        vs = set(vertex_set)
        if not vs:
            return True
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == vs

    def components(self, vertex_set: Iterable) -> list[list]:
        vs = set(vertex_set)
        comps = []
        while vs:
            start = min(vs, key=_vkey)
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w in vs and w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(seen, key=_vkey))
            vs -= seen
        return comps

    def connected_hull(self, vertex_set: Iterable) -> list:
        """Smallest connected vertex set containing ``vertex_set``.

        Exact for trees (all three infinite families are trees): the union of
        the unique paths between the given vertices.
        """
        vs = sorted(set(vertex_set), key=_vkey)
        if len(vs) <= 1:
            return vs
        hull = {vs[0]}
        for target in vs[1:]:
            hull |= set(self._path(vs[0], target))
        return sorted(hull, key=_vkey)

    def _path(self, a, b) -> list:
        if self.family in ("A_inf", "A_plus_inf"):
            lo, hi = min(a, b), max(a, b)
            return list(range(lo, hi + 1))
        if self.family == "D_inf":
            if a == b:
                return [a]
            fork_a, fork_b = a in (0, 1), b in (0, 1)
            lo = 2 if fork_a else a
            hi = 2 if fork_b else b
            spine = list(range(min(lo, hi), max(lo, hi) + 1))
            return ([a] if fork_a else []) + spine + ([b] if fork_b else [])
        # explicit: BFS shortest path
        prev = {a: None}
        queue = [a]
        for v in queue:
            if v == b:
                break
            for w in self.neighbors(v):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        if b not in prev:
            raise ValueError(f"no path between {a!r} and {b!r}")
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path


def build_quiver(spec) -> Quiver:
    """Build a quiver from a family name or a JSON-style mapping.

    >>> build_quiver("D_inf").arrows_at(2)[:2]
    [Arrow(tail=0, head=2, star=False, name=''), Arrow(tail=1, head=2, star=False, name='')]
    """
    if isinstance(spec, Quiver):
        return spec
    if isinstance(spec, str):
        return Quiver(spec)
    if isinstance(spec, Mapping):
        family = spec.get("family")
        if family == "explicit":
            return Quiver("explicit", spec.get("vertices", []), spec.get("arrows", []))
        if family in FAMILIES:
            return Quiver(family)
        raise ValueError(f"unknown quiver family {family!r}")
    raise TypeError(f"cannot build a quiver from {type(spec).__name__}")


def _arrows_touching(q: Quiver, support: Iterable) -> list[Arrow]:
    seen = set()
    out = []
    for v in support:
        for a in q.arrows_at(v):
            if a not in seen:
                seen.add(a)
                out.append(a)
    return out


def ringel_form(q: Quiver, alpha: Mapping, beta: Mapping) -> int:
    """``<alpha, beta> = sum_i alpha_i beta_i - sum_a alpha_t(a) beta_h(a)``."""
    total = sum(v * beta.get(k, 0) for k, v in alpha.items())
    for a in _arrows_touching(q, [k for k, v in alpha.items() if v]):
        total -= alpha.get(a.tail, 0) * beta.get(a.head, 0)
    return total


def symmetrized_form(q: Quiver, alpha: Mapping, beta: Mapping) -> int:
    """``(alpha, beta) = <alpha, beta> + <beta, alpha>``; the Cartan form."""
    return ringel_form(q, alpha, beta) + ringel_form(q, beta, alpha)


def cartan_entry(q: Quiver, i, j) -> int:
    return symmetrized_form(q, {i: 1}, {j: 1})


def cartan_matrix(q: Quiver, window: Sequence) -> list[list[int]]:
    """The symmetrized form on the unit vectors of ``window``."""
    return [[cartan_entry(q, i, j) for j in window] for i in window]


def cartan_apply(q: Quiver, alpha: Mapping) -> dict:
    """``nu(alpha)``: the weight with ``nu(alpha)_j = (alpha, eps_j)``.

    Returned as a finite dict (vertex -> int) without zero entries.
    """
    out: dict = {}
    for i, ai in alpha.items():
        if not ai:
            continue
        out[i] = out.get(i, 0) + 2 * ai
        for a in q.arrows_at(i):
            if a.tail == a.head:
                out[i] -= 2 * ai
                continue
            j = a.head if a.tail == i else a.tail
            out[j] = out.get(j, 0) - ai
    return {k: v for k, v in out.items() if v}


def delta_prefix(q: Quiver, k: int) -> list[int]:
    """First ``k`` coordinates of the positive kernel vector of the Cartan matrix.

    Solved on the first ``max(k + 1, 4)`` vertices using only the rows whose
    neighbours all lie in the window (shorter windows leave D_inf
    underdetermined).  A_inf has a two-dimensional
    space of kernel vectors on any window (arithmetic progressions); the
    positive one is translation invariant, which pins it down.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if q.family == "explicit":
        raise ValueError("delta is defined for the infinite families only")
    window = list(range(max(k + 1, 4)))
    wset = set(window)
    rows = []
    for v in window:
        if all(w in wset for w in q.neighbors(v)):
            rows.append([Fraction(cartan_entry(q, v, w)) for w in window])
    if q.family == "A_inf":
        rows.append([Fraction(1), Fraction(-1)] + [Fraction(0)] * (len(window) - 2))
    basis = nullspace_basis(rows, len(window))
    if basis.ncols != 1:
        raise ArithmeticError(f"kernel on window has dimension {basis.ncols}, expected 1")
    col = [basis[r, 0] for r in range(basis.nrows)]
    den = 1
    for v in col:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in col]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if ints[0] < 0:
        ints = [-v for v in ints]
    return ints[:k]


def principal_minors_positive(matrix: Sequence[Sequence[int]]) -> bool:
    """All leading principal minors are positive (positive definiteness)."""
    n = len(matrix)
    for m in range(1, n + 1):
        if _det([[Fraction(x) for x in row[:m]] for row in matrix[:m]]) <= 0:
            return False
    return True


def _det(rows: list[list[Fraction]]) -> Fraction:
    rows = [list(r) for r in rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            if f:
                for j in range(c, n):
                    rows[r][j] -= f * rows[c][j]
    return det


def window_vertices(q: Quiver, spec) -> list:
    """Parse a window: ``"0..7"``, an int count, or an explicit vertex list."""
    if isinstance(spec, str):
        if ".." in spec:
            lo, hi = spec.split("..")
            vs = list(range(int(lo), int(hi) + 1))
        else:
            vs = [int(x) for x in spec.split(",") if x.strip()]
    elif isinstance(spec, int):
        vs = q.vertices(spec)
    else:
        vs = list(spec)
    for v in vs:
        q.check_vertex(v)
    return vs


__all__ = [
    "Arrow",
    "DimVector",
    "Quiver",
    "build_quiver",
    "ringel_form",
    "symmetrized_form",
    "cartan_entry",
    "cartan_matrix",
    "cartan_apply",
    "delta_prefix",
    "principal_minors_positive",
    "window_vertices",
]
