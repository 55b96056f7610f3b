"""Existence of finite-dimensional simple modules of the rank-1 algebra.

A simple module of dimension ``alpha`` exists iff ``alpha`` is a positive
root of its (connected) support window, ``lam . alpha = 0``, and ``alpha``
admits no decomposition into two or more positive roots each orthogonal to
``lam``.  On type A the last two conditions collapse to partial-sum tests on
the interval ``[s, r]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .quiver import DimVector, Quiver, _vkey, ringel_form
from .roots import as_weight, enumerate_positive_roots, weight_dot


def p_value(q: Quiver, alpha: Mapping) -> int:
    """``p(alpha) = 1 + sum_a alpha_t(a) alpha_h(a) - sum_i alpha_i^2``."""
    return 1 - ringel_form(q, alpha, alpha)


@dataclass
class SimpleCertificate:
    alpha: DimVector
    window: list
    exists: bool
    reason: str
    decomposition: list[DimVector] = field(default_factory=list)
    edge_scalars: dict | None = None

    def __bool__(self):
        return self.exists

    def to_json(self) -> dict:
        from .scalars import scalar_to_json

        out = {
            "alpha": {str(k): v for k, v in sorted(self.alpha.items(), key=lambda kv: _vkey(kv[0]))},
            "window": list(self.window),
            "exists": self.exists,
            "reason": self.reason,
        }
        if self.decomposition:
            out["decomposition"] = [
                {str(k): v for k, v in sorted(b.items(), key=lambda kv: _vkey(kv[0]))} for b in self.decomposition
            ]
        if self.edge_scalars is not None:
            out["edge_scalars"] = {str(k): scalar_to_json(v) for k, v in sorted(self.edge_scalars.items())}
        return out


def _is_interval(alpha: DimVector) -> tuple[int, int] | None:
    sup = alpha.support
    if not sup or any(alpha[k] != 1 for k in sup):
        return None
    s, r = sup[0], sup[-1]
    if list(sup) != list(range(s, r + 1)):
        return None
    return s, r


def find_decomposition(alpha: DimVector, parts: list[DimVector]) -> list[DimVector] | None:
    """A multiset of two or more vectors from ``parts`` summing to ``alpha``.

    Depth-first search over nondecreasing indices; every part must be
    ``<= alpha`` and different from it.
    """
    cands = [b for b in parts if b != alpha and b.leq(alpha) and not b.is_zero()]
    cands.sort(key=lambda b: (-b.total(), [(_vkey(k), b[k]) for k in b.support]))

    def search(rest: DimVector, start: int, chosen: list):
        if rest.is_zero():
            return list(chosen)
        for idx in range(start, len(cands)):
            b = cands[idx]
            if b.leq(rest):
                chosen.append(b)
                found = search(rest - b, idx, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return search(alpha, 0, [])


def exists_simple(q: Quiver, lam, alpha: Mapping) -> SimpleCertificate:
    lam = as_weight(lam)
    alpha = DimVector(alpha)
    if alpha.is_zero() or not alpha.is_dimension_vector():
        raise ValueError("alpha must be a nonzero dimension vector")
    sup = list(alpha.support)
    window = q.connected_hull(sup)
    if not q.is_connected(sup):
        return SimpleCertificate(alpha, window, False, "not_root")
    roots = enumerate_positive_roots(q, window)
    if alpha not in roots:
        return SimpleCertificate(alpha, window, False, "not_root")
    if weight_dot(lam, alpha) != 0:
        return SimpleCertificate(alpha, window, False, "weight")
    orth = [b for b in roots if weight_dot(lam, b) == 0]
    dec = find_decomposition(alpha, orth)
    if dec is not None:
        return SimpleCertificate(alpha, window, False, "decomposition", dec)
    cert = SimpleCertificate(alpha, window, True, "ok")
    iv = _is_interval(alpha) if q.is_type_a else None
    if iv is not None:
        from .oracle import solve_chain

        sol = solve_chain(q, lam, *iv)
        if sol is None:
            raise ArithmeticError("positive verdict without a chain solution")
        cert.edge_scalars = dict(sol.u)
    return cert


def interval_conditions(q: Quiver, lam, s: int, r: int) -> bool:
    """``sum_{s..r} lam = 0`` and ``sum_{k..r} lam != 0`` for ``s < k <= r``."""
    if not q.is_type_a:
        raise ValueError("interval conditions apply to type-A quivers only")
    if s > r:
        raise ValueError("need s <= r")
    q.check_vertex(s)
    q.check_vertex(r)
    lam = as_weight(lam)
    tail = 0
    for k in range(r, s, -1):
        tail = tail + lam[k]
        if tail == 0:
            return False
    return tail + lam[s] == 0


def enumerate_simples(q: Quiver, lam, window: Iterable) -> list[SimpleCertificate]:
    """Positive certificates for every dimension vector supported in ``window``.

    Only positive roots can host simples, so the candidates are the roots of
    the window.
    """
    window = list(dict.fromkeys(window))
    out = []
    for alpha in enumerate_positive_roots(q, window):
        cert = exists_simple(q, lam, alpha)
        if cert:
            out.append(cert)
    return out
