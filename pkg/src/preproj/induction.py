"""When an induced symmetric-group module extends to the deformed wreath algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .quiver import DimVector, Quiver, symmetrized_form
from .reps import Rep, check_wreath, induce
from .roots import as_weight, weight_dot
from .scalars import to_scalar
from .young import YoungDiagram, is_rectangular


@dataclass
class InductionVerdict:
    rectangular: bool
    orthogonal: bool | None  # None when skipped (single part)
    weight: bool
    shapes: list = field(default_factory=list)  # (rows, cols) or None per part
    relation_check: bool | None = None

    @property
    def passed(self) -> bool:
        return self.rectangular and self.orthogonal is not False and self.weight

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "rectangular": self.rectangular,
            "orthogonal": self.orthogonal,
            "weight": self.weight,
            "shapes": [list(s) if s else None for s in self.shapes],
            "relation_check": self.relation_check,
        }


def _validate(parts, diagrams, targets):
    parts = [int(c) for c in parts]
    diagrams = [YoungDiagram.of(d) for d in diagrams]
    if not (len(parts) == len(diagrams) == len(targets)):
        raise ValueError("need one diagram and one vertex (or root) per part")
    for c, d in zip(parts, diagrams):
        if c <= 0 or d.size != c:
            raise ValueError(f"diagram {d} does not have size {c}")
    return parts, diagrams


def check_extension_conditions(
    q: Quiver,
    parts: Sequence[int],
    diagrams: Sequence,
    lam,
    nu,
    vertices: Sequence | None = None,
    roots: Sequence[Mapping] | None = None,
) -> InductionVerdict:
    """Conditions (i) rectangular shapes, (ii) pairwise orthogonality,
    (iii) ``lam . beta_l = nu (a_l - b_l)`` with ``a`` rows and ``b`` columns.

    Give either distinct ``vertices`` (coordinate vectors) or ``roots``.
    """
    if (vertices is None) == (roots is None):
        raise ValueError("give exactly one of vertices or roots")
    if vertices is not None:
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertices must be distinct")
        for v in vertices:
            q.check_vertex(v)
        betas = [DimVector.unit(v) for v in vertices]
    else:
        betas = [DimVector(b) for b in roots]
    parts, diagrams = _validate(parts, diagrams, betas)
    lam = as_weight(lam)
    nu = to_scalar(nu)
    shapes = [is_rectangular(d) for d in diagrams]
    rect = all(s is not None for s in shapes)
    if len(parts) == 1:
        orth = None
    else:
        orth = all(
            symmetrized_form(q, betas[l], betas[m]) == 0
            for l in range(len(betas))
            for m in range(l + 1, len(betas))
        )
    weight = rect and all(weight_dot(lam, b) == nu * (a - c) for b, (a, c) in zip(betas, shapes))
    return InductionVerdict(rect, orth, weight, shapes)


def zero_arrow_module(q: Quiver, parts: Sequence[int], diagrams: Sequence, vertices: Sequence):
    """The induced module ``X (x) N`` with every arrow acting by zero."""
    key = (tuple(parts), tuple(YoungDiagram.of(d).rows for d in diagrams), tuple(vertices))
    return _zero_arrow_cached(q, *key)


@lru_cache(maxsize=256)
def _zero_arrow_cached(q, parts, rows, vertices):
    # independent of (lam, nu), so sweeps over parameters reuse it
    return induce(q, parts, list(rows), [Rep(q, {v: 1}) for v in vertices])


def verify_relation_I_with_zero_arrows(
    q: Quiver, parts: Sequence[int], diagrams: Sequence, vertices: Sequence, lam, nu
) -> bool:
    """Whether the zero-arrow induced module satisfies every defining relation.

    With arrows zero, relation (I) is the S_n identity
    ``-lam_{i_l} = nu sum_{m != l, i_m = i_l} sigma_ml`` and the mixed
    relation (II) fails exactly when two adjacent vertices both occur.
    """
    parts, diagrams = _validate(parts, diagrams, list(vertices))
    if sum(parts) > 5:
        raise ValueError("direct verification is limited to n <= 5")
    V = zero_arrow_module(q, parts, diagrams, vertices)
    return check_wreath(V, lam, nu).passed
