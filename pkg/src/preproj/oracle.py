"""Constructive ground truth for simples with multiplicity-free dimension vectors.

On a tree with all dimensions 1 and every arrow normalized to ``a = 1``, the
relations say that the scalars ``u_a = a*`` form a flow with net inflow
``lam_i`` at each vertex.  Leaf elimination solves it uniquely; the module is
simple exactly when the total of ``lam`` vanishes and no edge scalar does.
This path does not use any root-system machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .linalg import Mat
from .quiver import Arrow, DimVector, Quiver, _vkey
from .reps import Rep
from .roots import as_weight


@dataclass
class ChainSolution:
    s: int
    r: int
    u: dict  # k -> scalar on the edge k -> k+1
    rep: Rep


def _edge_rep(q: Quiver, support, edges: Mapping[Arrow, object]) -> Rep:
    one = Mat([[Fraction(1)]])
    maps = {}
    for a, u in edges.items():
        maps[a] = one
        maps[a.dual()] = Mat([[u]])
    return Rep(q, {v: 1 for v in support}, maps)


def solve_chain(q: Quiver, lam, s: int, r: int) -> ChainSolution | None:
    """Solve the interval ``[s, r]``: ``u_k = -sum_{i=s..k} lam_i``.

    Returns ``None`` unless the full sum vanishes and every ``u_k`` is nonzero.
    """
    if not q.is_type_a:
        raise ValueError("chains live on A_inf or A_plus_inf")
    if s > r:
        raise ValueError("need s <= r")
    q.check_vertex(s)
    q.check_vertex(r)
    lam = as_weight(lam)
    u = {}
    acc = Fraction(0)
    for k in range(s, r):
        acc = acc + lam[k]
        if acc == 0:
            return None
        u[k] = -acc
    if acc + lam[r] != 0:
        return None
    rep = _edge_rep(q, range(s, r + 1), {Arrow(k, k + 1): u[k] for k in range(s, r)})
    return ChainSolution(s, r, u, rep)


@dataclass
class OracleResult:
    exists: bool
    edge_scalars: dict = field(default_factory=dict)  # Arrow -> scalar
    rep: Rep | None = None

    def __bool__(self):
        return self.exists


def solve_tree_flow(q: Quiver, lam, support) -> dict | None:
    """Edge scalars ``u_a`` with inflow minus outflow ``lam_i`` at each vertex.

    Returns ``None`` when the (unique) solution does not exist, i.e. when the
    total of ``lam`` over the support is nonzero.
    """
    lam = as_weight(lam)
    verts = set(support)
    edges = q.arrows_within(verts)
    if len(edges) != len(verts) - 1 or not q.is_connected(verts):
        raise ValueError("support is not a tree")
    residual = {v: lam[v] for v in verts}
    incident = {v: [] for v in verts}
    for a in edges:
        incident[a.tail].append(a)
        incident[a.head].append(a)
    alive = set(verts)
    u = {}
    leaves = sorted((v for v in alive if len(incident[v]) == 1), key=_vkey)
    while len(alive) > 1:
        v = leaves.pop(0)
        (a,) = [e for e in incident[v] if e not in u]
        # the leaf equation fixes the edge scalar
        val = residual[v] if a.head == v else -residual[v]
        u[a] = val
        w = a.tail if a.head == v else a.head
        residual[w] = residual[w] - (val if a.head == w else -val)
        alive.discard(v)
        if sum(1 for e in incident[w] if e not in u) == 1 and w not in leaves:
            leaves.append(w)
            leaves.sort(key=_vkey)
    (last,) = alive
    if residual[last] != 0:
        return None
    return u


def oracle_exists_simple(q: Quiver, lam, alpha: Mapping) -> OracleResult:
    alpha = DimVector(alpha)
    if any(v >= 2 for v in alpha.values()):
        raise ValueError("oracle handles multiplicity-free dimension vectors only")
    if alpha.is_zero() or not alpha.is_dimension_vector():
        raise ValueError("alpha must be a nonzero dimension vector")
    sup = alpha.support
    if not q.is_connected(sup):
        return OracleResult(False)
    u = solve_tree_flow(q, lam, sup)
    if u is None or any(x == 0 for x in u.values()):
        return OracleResult(False, u or {})
    return OracleResult(True, u, _edge_rep(q, sup, u))
