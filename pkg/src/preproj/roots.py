"""Roots, Weyl reflections, weights and the dominance reduction."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .quiver import DimVector, Quiver, _vkey, cartan_apply, cartan_matrix, principal_minors_positive, symmetrized_form
from .scalars import Scalar, precedes, scalar_from_json, scalar_to_json, sort_key, to_scalar

_ZERO = Fraction(0)


class Weight:
    """A scalar-valued function on the vertices.

    The value at a vertex is the overlay ``patch`` entry if present, else the
    value of the base generator.  Base generators:

    * ``("zero",)``: identically zero;
    * ``("explicit", {vertex: scalar})``: finitely many nonzero values;
    * ``("khare", (c0, c1, ...))``: ``lambda_i = (i+1)(1 + f(b_i))`` with
      ``f = c0 + c1*x + ...`` and ``b_i = i(i+2)/8``, for ``i >= 0``.
    """

    __slots__ = ("base", "patch")

    def __init__(self, base=("zero",), patch: Mapping | None = None):
        kind = base[0]
        if kind == "zero":
            base = ("zero",)
        elif kind == "explicit":
            vals = base[1]
            if not isinstance(vals, Mapping):
                vals = dict(enumerate(vals))
            base = ("explicit", {k: to_scalar(v) for k, v in vals.items() if to_scalar(v) != 0})
        elif kind == "khare":
            base = ("khare", tuple(Fraction(to_scalar(c)) for c in base[1]))
        else:
            raise ValueError(f"unknown weight base {kind!r}")
        self.base = base
        self.patch = {k: to_scalar(v) for k, v in (patch or {}).items()}

    @classmethod
    def zero(cls) -> "Weight":
        return cls()

    @classmethod
    def explicit(cls, values) -> "Weight":
        """From a list (vertices 0, 1, ...) or a dict vertex -> scalar."""
        return cls(("explicit", values))

    @classmethod
    def khare(cls, coeffs: Sequence) -> "Weight":
        return cls(("khare", coeffs))

    def base_value(self, v) -> Scalar:
        kind = self.base[0]
        if kind == "zero":
            return _ZERO
        if kind == "explicit":
            return self.base[1].get(v, _ZERO)
        if not isinstance(v, int) or v < 0:
            return _ZERO
        return _khare_value(self.base[1], v)

    def __getitem__(self, v) -> Scalar:
        if v in self.patch:
            return self.patch[v]
        return self.base_value(v)

    __call__ = __getitem__

    def with_values(self, updates: Mapping) -> "Weight":
        patch = dict(self.patch)
        patch.update({k: to_scalar(x) for k, x in updates.items()})
        return Weight(self.base, patch)

    def restrict(self, window: Iterable) -> dict:
        return {v: self[v] for v in window}

    def equal_on(self, other: "Weight", window: Iterable) -> bool:
        return all(self[v] == other[v] for v in window)

    def dot(self, alpha: Mapping) -> Scalar:
        return weight_dot(self, alpha)

    def __repr__(self):
        return f"Weight(base={self.base!r}, patch={self.patch!r})"

    def to_json(self) -> dict:
        kind = self.base[0]
        if kind == "zero":
            base = {"kind": "zero"}
        elif kind == "explicit":
            base = {
                "kind": "explicit",
                "values": {str(k): scalar_to_json(v) for k, v in sorted(self.base[1].items(), key=lambda kv: _vkey(kv[0]))},
            }
        else:
            base = {"kind": "khare", "f": [scalar_to_json(c) for c in self.base[1]]}
        return {
            "base": base,
            "patch": {str(k): scalar_to_json(v) for k, v in sorted(self.patch.items(), key=lambda kv: _vkey(kv[0]))},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Weight":
        if not isinstance(data, Mapping) or "base" not in data:
            raise ValueError("weight JSON needs a 'base' object")
        base = data["base"]
        kind = base.get("kind")
        if kind == "zero":
            b = ("zero",)
        elif kind == "explicit":
            vals = base.get("values", {})
            if isinstance(vals, list):
                b = ("explicit", [scalar_from_json(v) for v in vals])
            else:
                b = ("explicit", {_parse_vertex(k): scalar_from_json(v) for k, v in vals.items()})
        elif kind == "khare":
            b = ("khare", [scalar_from_json(c) for c in base.get("f", [])])
        else:
            raise ValueError(f"unknown weight base kind {kind!r}")
        patch = {_parse_vertex(k): scalar_from_json(v) for k, v in data.get("patch", {}).items()}
        return cls(b, patch)


@lru_cache(maxsize=4096)
def _khare_value(coeffs: tuple, v: int) -> Fraction:
    from .khare import casimir_scalar, evaluate_poly

    return (v + 1) * (1 + evaluate_poly(coeffs, casimir_scalar(v)))


def _parse_vertex(key):
    try:
        return int(key)
    except (TypeError, ValueError):
        return key


def as_weight(x) -> Weight:
    if isinstance(x, Weight):
        return x
    if isinstance(x, Mapping):
        return Weight.explicit(x)
    if isinstance(x, (list, tuple)):
        return Weight.explicit(list(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a weight")


def weight_dot(lam, alpha: Mapping) -> Scalar:
    """``lambda . alpha = sum_i lambda_i alpha_i``."""
    lam = as_weight(lam)
    total = _ZERO
    for k, a in alpha.items():
        if a:
            total = total + a * lam[k]
    return total


def simple_reflection(q: Quiver, i, alpha: Mapping) -> DimVector:
    """``s_i(alpha) = alpha - (alpha, eps_i) eps_i``."""
    q.check_vertex(i)
    c = symmetrized_form(q, alpha, {i: 1})
    return DimVector(alpha) - DimVector({i: c})


def dual_reflection(q: Quiver, i, lam) -> Weight:
    """``r_i(lambda) = lambda - lambda_i nu(eps_i)``; touches i and its neighbours."""
    q.check_vertex(i)
    lam = as_weight(lam)
    li = lam[i]
    if li == 0:
        return lam
    row = cartan_apply(q, {i: 1})
    return lam.with_values({j: lam[j] - c * li for j, c in row.items()})


def apply_word_to_weight(q: Quiver, lam, word: Sequence) -> Weight:
    """Apply ``r_{word[0]} ... r_{word[-1]}`` (rightmost first)."""
    lam = as_weight(lam)
    for j in reversed(list(word)):
        lam = dual_reflection(q, j, lam)
    return lam


def apply_word_to_dims(q: Quiver, alpha: Mapping, word: Sequence) -> DimVector:
    """Apply ``s_{word[0]} ... s_{word[-1]}`` (rightmost first)."""
    alpha = DimVector(alpha)
    for j in reversed(list(word)):
        alpha = simple_reflection(q, j, alpha)
    return alpha


def is_positive(alpha: Mapping) -> bool:
    vals = [v for v in alpha.values() if v]
    return bool(vals) and all(v > 0 for v in vals)


def enumerate_positive_roots(q: Quiver, window: Sequence) -> list[DimVector]:
    """All positive roots supported in a finite Dynkin window.

    Closure of the simple roots under the window's simple reflections,
    keeping positive vectors.  Returned sorted by height, then support.
    """
    return list(_positive_roots(q, tuple(dict.fromkeys(window))))


@lru_cache(maxsize=512)
def _positive_roots(q: Quiver, window: tuple) -> tuple:
    for v in window:
        q.check_vertex(v)
    if not window:
        return ()
    for comp in q.components(window):
        if not principal_minors_positive(cartan_matrix(q, comp)):
            raise ValueError("window is not a union of finite Dynkin diagrams")
    seen = {DimVector.unit(v) for v in window}
    queue = deque(sorted(seen, key=_root_key))
    wset = set(window)
    while queue:
        beta = queue.popleft()
        for j in window:
            gamma = simple_reflection(q, j, beta)
            if gamma not in seen and is_positive(gamma) and set(gamma) <= wset:
                seen.add(gamma)
                queue.append(gamma)
    return tuple(sorted(seen, key=_root_key))


def _root_key(alpha: DimVector):
    return (alpha.total(), [(_vkey(k), alpha[k]) for k in alpha.support])


def is_weakly_dominant(lam, window: Iterable) -> bool:
    lam = as_weight(lam)
    return not any(precedes(lam[j], 0) for j in window)


def dominate(q: Quiver, lam, window: Iterable) -> tuple[Weight, list]:
    """Reduce ``lam`` to a weight with no coordinate ``< 0`` on ``window``.

    Greedy: reflect at the violating vertex with the smallest value
    (ties broken by vertex order) until none is left.  Returns
    ``(lam_plus, word)`` where ``word`` lists reflections rightmost-first,
    i.e. ``lam_plus == apply_word_to_weight(q, lam, word)``.  The word is
    not guaranteed to be of minimal length.
    """
    lam = as_weight(lam)
    J = sorted(set(window), key=_vkey)
    for j in J:
        q.check_vertex(j)
    word: list = []
    # W(Q_J) is finite and each step raises the height, so this is generous.
    for _ in range(100_000):
        bad = [j for j in J if precedes(lam[j], 0)]
        if not bad:
            return lam, word
        j = min(bad, key=lambda v: (sort_key(lam[v]), _vkey(v)))
        lam = dual_reflection(q, j, lam)
        word.insert(0, j)
    raise RuntimeError("dominance reduction did not terminate")
