"""Explicit finite-dimensional modules and their relation checkers.

A rank-1 :class:`Rep` is a representation of the double quiver; a
:class:`WreathRep` of rank ``n`` has one space per vertex tuple, operators
``x_l`` moving position ``l`` along a double-quiver arrow ``x``, and an
``S_n`` action stored on the adjacent transpositions ``s_k`` (positions
``k`` and ``k+1``, 0-indexed).  Everything is exact; a relation holds only
if the residual matrix is identically zero.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .linalg import Mat, block_matrix, kron, sparse_nullspace
from .quiver import Arrow, DimVector, Quiver, _vkey
from .roots import Weight, as_weight
from .scalars import to_scalar
from .young import YoungDiagram, irrep_dimension, permutation_word, symmetric_group_irrep


# -- permutations on tuples -------------------------------------------------


def swap(tup: tuple, k: int) -> tuple:
    """Apply the adjacent transposition ``s_k`` to a vertex tuple."""
    t = list(tup)
    t[k], t[k + 1] = t[k + 1], t[k]
    return tuple(t)


def transpose_positions(tup: tuple, m: int, l: int) -> tuple:
    t = list(tup)
    t[m], t[l] = t[l], t[m]
    return tuple(t)


def act_on_tuple(perm: Sequence[int], tup: tuple) -> tuple:
    """``(perm . tup)[perm[m]] = tup[m]``."""
    out = [None] * len(tup)
    for m, v in enumerate(tup):
        out[perm[m]] = v
    return tuple(out)


def move(tup: tuple, l: int, x: Arrow) -> tuple:
    """``x_l(tup)``: position ``l`` moves from ``x.source`` to ``x.target``."""
    if tup[l] != x.source:
        raise ValueError(f"position {l} of {tup} is not the source of {x.label}")
    t = list(tup)
    t[l] = x.target
    return tuple(t)


def transposition_perm(n: int, m: int, l: int) -> list[int]:
    p = list(range(n))
    p[m], p[l] = l, m
    return p


# -- reports -----------------------------------------------------------------


@dataclass
class Violation:
    relation: str
    location: dict
    residual: Mat

    def describe(self) -> str:
        loc = ", ".join(f"{k}={v}" for k, v in self.location.items())
        nz = sum(1 for r in self.residual.rows for v in r if v != 0)
        return f"{self.relation} at {loc}: {nz} nonzero residual entries"


@dataclass
class CheckReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return "pass"
        return "fail: " + "; ".join(v.describe() for v in self.violations[:5])


# -- rank 1 ------------------------------------------------------------------


class Rep:
    """A finite-dimensional representation of the double quiver.

    ``maps`` sends double-quiver arrows to matrices of shape
    ``dims[target] x dims[source]``; arrows touching a vertex outside the
    support, or simply absent, act by zero.
    """

    def __init__(self, quiver: Quiver, dims: Mapping, maps: Mapping[Arrow, Mat] | None = None):
        self.quiver = quiver
        self.dims = DimVector(dims)
        if not self.dims.is_dimension_vector() and not self.dims.is_zero():
            raise ValueError("dimensions must be nonnegative")
        for v in self.dims:
            quiver.check_vertex(v)
        self.maps: dict[Arrow, Mat] = {}
        for x, m in (maps or {}).items():
            m = m if isinstance(m, Mat) else Mat(m, self.dims[x.source])
            want = (self.dims[x.target], self.dims[x.source])
            if m.shape != want:
                raise ValueError(f"map {x.label} has shape {m.shape}, expected {want}")
            if x.base not in quiver.arrows_at(x.tail):
                raise ValueError(f"{x.label} is not an arrow of the quiver")
            if want[0] and want[1]:
                self.maps[x] = m

    def map(self, x: Arrow) -> Mat:
        m = self.maps.get(x)
        if m is None:
            return Mat.zeros(self.dims[x.target], self.dims[x.source])
        return m

    @property
    def support(self) -> tuple:
        return self.dims.support

    def total_dim(self) -> int:
        return self.dims.total()

    def as_wreath(self) -> "WreathRep":
        comps = {(v,): d for v, d in self.dims.items()}
        arrows = {(0, x, (x.source,)): m for x, m in self.maps.items()}
        return WreathRep(self.quiver, 1, comps, arrows, {})

    def __repr__(self):
        return f"Rep(dims={dict(self.dims)})"


def check_rank1(M: Rep, lam) -> CheckReport:
    """Check ``sum_{h(a)=i} M_a M_a* - sum_{t(a)=i} M_a* M_a = lambda_i Id``."""
    lam = as_weight(lam)
    report = CheckReport()
    q = M.quiver
    for i in M.support:
        d = M.dims[i]
        lhs = Mat.scalar(d, -lam[i])
        for a in q.arrows_at(i):
            astar = a.dual()
            if a.head == i:
                lhs = lhs + M.map(a) @ M.map(astar)
            if a.tail == i:
                lhs = lhs - M.map(astar) @ M.map(a)
        if not lhs.is_zero():
            report.violations.append(Violation("preprojective", {"vertex": i}, lhs))
    return report


# -- rank n ------------------------------------------------------------------


class WreathRep:
    """A module over the rank-``n`` wreath algebra, given by explicit matrices.

    ``components``: tuple -> dimension.  ``arrows``: ``(l, x, tup) -> Mat``
    from ``V_tup`` to ``V_{x_l(tup)}``.  ``sigma``: ``(k, tup) -> Mat`` from
    ``V_tup`` to ``V_{s_k(tup)}``.  Missing arrow entries are zero; sigma
    must be given on every nonzero component (for ``n >= 2``).
    """

    def __init__(
        self,
        quiver: Quiver,
        n: int,
        components: Mapping[tuple, int],
        arrows: Mapping | None = None,
        sigma: Mapping | None = None,
        validate: bool = True,
    ):
        if n < 1:
            raise ValueError("rank n must be positive")
        self.quiver = quiver
        self.n = n
        self.dims: dict[tuple, int] = {}
        for tup, d in components.items():
            tup = tuple(tup)
            if len(tup) != n:
                raise ValueError(f"component {tup} does not have length {n}")
            if d < 0:
                raise ValueError("component dimensions must be nonnegative")
            if d:
                for v in tup:
                    quiver.check_vertex(v)
                self.dims[tup] = int(d)
        self.arrows: dict[tuple, Mat] = {}
        for (l, x, tup), m in (arrows or {}).items():
            tup = tuple(tup)
            want = (self.dim(move(tup, l, x)), self.dim(tup))
            if m.shape != want:
                raise ValueError(f"arrow {x.label} at position {l} on {tup}: shape {m.shape}, expected {want}")
            if want[0] and want[1]:
                self.arrows[(l, x, tup)] = m
        self.sigma: dict[tuple, Mat] = {}
        for (k, tup), m in (sigma or {}).items():
            tup = tuple(tup)
            if not 0 <= k < n - 1:
                raise ValueError(f"no adjacent transposition s_{k} in S_{n}")
            want = (self.dim(swap(tup, k)), self.dim(tup))
            if m.shape != want:
                raise ValueError(f"s_{k} on {tup}: shape {m.shape}, expected {want}")
            if want[1]:
                self.sigma[(k, tup)] = m
        self._perm_cache: dict = {}
        if validate:
            self._validate_symmetric_action()

    def dim(self, tup) -> int:
        return self.dims.get(tuple(tup), 0)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def support(self) -> tuple:
        vs = {v for tup in self.dims for v in tup}
        return tuple(sorted(vs, key=_vkey))

    def tuples(self) -> list[tuple]:
        return sorted(self.dims, key=lambda t: [_vkey(v) for v in t])

    def arrow_map(self, l: int, x: Arrow, tup: tuple) -> Mat:
        m = self.arrows.get((l, x, tup))
        if m is None:
            return Mat.zeros(self.dim(move(tup, l, x)), self.dim(tup))
        return m

    def sigma_map(self, k: int, tup: tuple) -> Mat:
        m = self.sigma.get((k, tup))
        if m is None:
            if self.dim(tup):
                raise KeyError(f"missing s_{k} on {tup}")
            return Mat.zeros(self.dim(swap(tup, k)), 0)
        return m

    def perm_map(self, perm: Sequence[int], tup: tuple) -> Mat:
        """The action of an arbitrary permutation, from ``V_tup``."""
        key = (tuple(perm), tup)
        cached = self._perm_cache.get(key)
        if cached is not None:
            return cached
        out = Mat.identity(self.dim(tup))
        cur = tup
        for k in permutation_word(perm):
            out = self.sigma_map(k, cur) @ out
            cur = swap(cur, k)
        self._perm_cache[key] = out
        return out

    def transposition_map(self, m: int, l: int, tup: tuple) -> Mat:
        return self.perm_map(transposition_perm(self.n, m, l), tup)

    def _validate_symmetric_action(self):
        for tup, d in self.dims.items():
            for k in range(self.n - 1):
                t2 = swap(tup, k)
                if self.dim(t2) != d:
                    raise ValueError(f"s_{k} cannot map {tup} (dim {d}) to {t2} (dim {self.dim(t2)})")
                s = self.sigma_map(k, tup)
                if self.sigma_map(k, t2) @ s != Mat.identity(d):
                    raise ValueError(f"s_{k}^2 != 1 on {tup}")
                for j in range(k + 1, self.n - 1):
                    lhs = self.perm_map_word([k, j, k] if j == k + 1 else [k, j], tup)
                    rhs = self.perm_map_word([j, k, j] if j == k + 1 else [j, k], tup)
                    if lhs != rhs:
                        raise ValueError(f"braid relation between s_{k} and s_{j} fails on {tup}")

    def perm_map_word(self, word: Sequence[int], tup: tuple) -> Mat:
        """Apply ``s_word[0]`` first, then ``s_word[1]``, ..."""
        out = Mat.identity(self.dim(tup))
        cur = tup
        for k in word:
            out = self.sigma_map(k, cur) @ out
            cur = swap(cur, k)
        return out

    def dimension_data(self) -> dict[tuple, int]:
        return dict(self.dims)

    def __repr__(self):
        return f"WreathRep(n={self.n}, dims={self.dims})"


def check_wreath(V: WreathRep, lam, nu) -> CheckReport:
    """Check relations (I), (II) and S_n-equivariance of the arrow action."""
    lam = as_weight(lam)
    nu = to_scalar(nu)
    q = V.quiver
    n = V.n
    report = CheckReport()
    at: dict = {}
    out_of: dict = {}
    for tup in V.tuples():
        for v in tup:
            if v not in at:
                at[v] = q.arrows_at(v)
                out_of[v] = q.double_arrows_from(v)
        d = V.dim(tup)
        # (I): (R_{i_l} - lambda_{i_l})_l = nu * sum_{m != l, i_m = i_l} sigma_ml
        for l in range(n):
            i = tup[l]
            lhs = Mat.scalar(d, -lam[i])
            for a in at[i]:
                astar = a.dual()
                if a.head == i and (l, astar, tup) in V.arrows:
                    mid = move(tup, l, astar)
                    lhs = lhs + V.arrow_map(l, a, mid) @ V.arrows[(l, astar, tup)]
                if a.tail == i and (l, a, tup) in V.arrows:
                    mid = move(tup, l, a)
                    lhs = lhs - V.arrow_map(l, astar, mid) @ V.arrows[(l, a, tup)]
            rhs = Mat.zeros(d, d)
            for m in range(n):
                if m != l and tup[m] == i:
                    rhs = rhs + V.transposition_map(m, l, tup)
            resid = lhs - rhs.scale(nu)
            if not resid.is_zero():
                report.violations.append(Violation("I", {"tuple": tup, "l": l}, resid))
        # (II): commutators of operators at distinct positions
        for l in range(n):
            for m in range(l + 1, n):
                for x in out_of[tup[l]]:
                    for y in out_of[tup[m]]:
                        mixed = x.base == y.base and x.star != y.star
                        if not mixed and (l, x, tup) not in V.arrows and (m, y, tup) not in V.arrows:
                            continue
                        xt = move(tup, l, x)
                        yt = move(tup, m, y)
                        target = move(xt, m, y)
                        if not V.dim(target):
                            continue
                        d = V.dim(tup)
                        lhs = Mat.zeros(V.dim(target), d)
                        if (m, y, tup) in V.arrows and (l, x, yt) in V.arrows:
                            lhs = lhs + V.arrows[(l, x, yt)] @ V.arrows[(m, y, tup)]
                        if (l, x, tup) in V.arrows and (m, y, xt) in V.arrows:
                            lhs = lhs - V.arrows[(m, y, xt)] @ V.arrows[(l, x, tup)]
                        if mixed:
                            sign = 1 if x.star else -1
                            lhs = lhs - V.transposition_map(l, m, tup).scale(sign * nu)
                        if not lhs.is_zero():
                            report.violations.append(
                                Violation("II", {"tuple": tup, "l": l, "m": m, "a": x.label, "b": y.label}, lhs)
                            )
        # equivariance: s_k x_l = x_{s_k(l)} s_k
        for k in range(n - 1):
            sk = V.sigma_map(k, tup)
            for l in range(n):
                l2 = k + 1 if l == k else k if l == k + 1 else l
                for x in out_of[tup[l]]:
                    if (l, x, tup) not in V.arrows and (l2, x, swap(tup, k)) not in V.arrows:
                        continue
                    xt = move(tup, l, x)
                    if not V.dim(xt):
                        continue
                    lhs = V.sigma_map(k, xt) @ V.arrow_map(l, x, tup)
                    rhs = V.arrow_map(l2, x, swap(tup, k)) @ sk
                    if lhs != rhs:
                        report.violations.append(
                            Violation("equivariance", {"tuple": tup, "k": k, "l": l, "a": x.label}, lhs - rhs)
                        )
    return report


# -- homomorphisms -------------------------------------------------------------


def _operator_list(V: WreathRep, W: WreathRep):
    """Every generator move ``(kind, data, tup)`` out of a tuple of V or W."""
    q = V.quiver
    tuples = sorted(set(V.dims) | set(W.dims), key=lambda t: [_vkey(v) for v in t])
    for tup in tuples:
        for l in range(V.n):
            for x in q.double_arrows_from(tup[l]):
                yield ("arrow", (l, x), tup, move(tup, l, x))
        for k in range(V.n - 1):
            yield ("sigma", k, tup, swap(tup, k))


def _generator(M: WreathRep, kind, data, tup) -> Mat:
    if kind == "arrow":
        l, x = data
        return M.arrow_map(l, x, tup)
    return M.sigma_map(data, tup)


def intertwiner_space(V: WreathRep, W: WreathRep, lam=None, nu=None, check: bool = False) -> list[dict]:
    """Basis of all module maps ``V -> W``.

    Each basis element is a dict ``tuple -> Mat`` (shape ``W_tup x V_tup``)
    over the common support.  With ``check=True`` both modules are first
    relation-checked against ``(lam, nu)``.
    """
    if V.n != W.n or V.quiver != W.quiver:
        raise ValueError("modules live over different algebras")
    if check:
        for M in (V, W):
            rep = check_wreath(M, lam, nu)
            if not rep.passed:
                raise ValueError(f"module fails the relations: {rep.summary()}")
    common = [t for t in sorted(V.dims, key=lambda t: [_vkey(v) for v in t]) if W.dim(t)]
    offset = {}
    nvars = 0
    for t in common:
        offset[t] = nvars
        nvars += W.dim(t) * V.dim(t)
    if nvars == 0:
        return []

    def var(t, r, c):
        return offset[t] + r * V.dim(t) + c

    eqs = []
    for kind, data, src, dst in _operator_list(V, W):
        dv_src, dw_src = V.dim(src), W.dim(src)
        dv_dst, dw_dst = V.dim(dst), W.dim(dst)
        if not dw_dst or not dv_src:
            continue
        gw = _generator(W, kind, data, src) if dw_src else None
        gv = _generator(V, kind, data, src) if dv_dst else None
        # W(g) phi_src - phi_dst V(g) = 0, entry (r, c)
        for r in range(dw_dst):
            for c in range(dv_src):
                eq: dict[int, object] = {}
                if gw is not None and src in offset:
                    for k in range(dw_src):
                        w = gw.rows[r][k]
                        if w != 0:
                            idx = var(src, k, c)
                            eq[idx] = eq.get(idx, 0) + w
                if gv is not None and dst in offset:
                    for k in range(dv_dst):
                        v = gv.rows[k][c]
                        if v != 0:
                            idx = var(dst, r, k)
                            eq[idx] = eq.get(idx, 0) - v
                if eq:
                    eqs.append(eq)
    basis = []
    for vec in sparse_nullspace(eqs, nvars):
        phi = {}
        for t in common:
            dv, dw = V.dim(t), W.dim(t)
            phi[t] = Mat(
                [[vec.get(var(t, r, c), Fraction(0)) for c in range(dv)] for r in range(dw)], dv
            )
        basis.append(phi)
    return basis


@dataclass
class IsoResult:
    isomorphic: bool
    witness: dict | None = None
    inverse: dict | None = None

    def __bool__(self):
        return self.isomorphic


def is_isomorphic(V: WreathRep, W: WreathRep, lam=None, nu=None, seed: int = 0, attempts: int = 6) -> IsoResult:
    """Decide isomorphism by a random exact combination of intertwiners.

    A positive answer comes with an explicit invertible module map and its
    inverse, certified exactly.  Random integer coefficients are drawn from a
    wide range, so a missed invertible element is vanishingly unlikely.
    """
    if V.n != W.n or V.dims != W.dims:
        return IsoResult(False)
    if not V.dims:
        return IsoResult(True, {}, {})
    basis = intertwiner_space(V, W, lam, nu)
    if not basis:
        return IsoResult(False)
    rng = random.Random(seed)
    for _ in range(attempts):
        coeffs = [Fraction(rng.randint(-10**6, 10**6)) for _ in basis]
        phi = {}
        for t in basis[0]:
            acc = Mat.zeros(W.dim(t), V.dim(t))
            for c, b in zip(coeffs, basis):
                acc = acc + b[t].scale(c)
            phi[t] = acc
        if all(m.is_invertible() for m in phi.values()):
            inv = {t: m.inverse() for t, m in phi.items()}
            for t, m in phi.items():
                if inv[t] @ m != Mat.identity(V.dim(t)):
                    raise ArithmeticError("inverse certification failed")
            return IsoResult(True, phi, inv)
    return IsoResult(False)


def is_module_map(V: WreathRep, W: WreathRep, phi: Mapping[tuple, Mat]) -> bool:
    def get(t):
        return phi.get(t, Mat.zeros(W.dim(t), V.dim(t)))

    for kind, data, src, dst in _operator_list(V, W):
        lhs = _generator(W, kind, data, src) @ get(src)
        rhs = get(dst) @ _generator(V, kind, data, src)
        if lhs != rhs:
            return False
    return True


# -- induction -----------------------------------------------------------------


def _as_sn_irrep(x):
    """Return ``(dim, generators)`` for an S_m irreducible."""
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], list):
        return x
    d = YoungDiagram.of(x)
    return irrep_dimension(d), symmetric_group_irrep(d)


def _label_sequences(parts: Sequence[int]):
    labels = [l for l, c in enumerate(parts) for _ in range(c)]
    return sorted(set(itertools.permutations(labels)))


def _coset_rep(parts: Sequence[int], seq: Sequence[int]) -> list[int]:
    """Minimal permutation sending the block positions of label l, in order,
    to the occurrences of l in ``seq``."""
    starts = [0]
    for c in parts:
        starts.append(starts[-1] + c)
    seen = [0] * len(parts)
    g = [0] * len(seq)
    for pos, l in enumerate(seq):
        g[starts[l] + seen[l]] = pos
        seen[l] += 1
    return g


def induce(
    quiver: Quiver,
    parts: Sequence[int],
    X: Sequence,
    Y: Sequence[Rep],
) -> WreathRep:
    """``X (x) Y`` induced from ``S_{n_1} x ... x S_{n_r}`` up to ``S_n``.

    ``X[l]`` is an irreducible of ``S_{n_l}`` (a Young diagram) and the
    tensor factor ``Y[l]`` is repeated ``n_l`` times.  No relation check is
    made; see :func:`outer_tensor_induce`.
    """
    parts = [int(c) for c in parts]
    if len(X) != len(parts) or len(Y) != len(parts):
        raise ValueError("need one irreducible and one rank-1 module per part")
    if any(c <= 0 for c in parts):
        raise ValueError("parts must be positive")
    irreps = [_as_sn_irrep(x) for x in X]
    for (dimx, gens), c in zip(irreps, parts):
        if len(gens) != c - 1:
            raise ValueError("irreducible does not match the part size")
    n = sum(parts)
    block = [l for l, c in enumerate(parts) for _ in range(c)]
    starts = [0]
    for c in parts:
        starts.append(starts[-1] + c)
    xdim = prod(d for d, _ in irreps)
    supports = [list(y.support) for y in Y]

    # base module M = X (x) Y_{block(0)} (x) ... over S_{parts}
    base_tuples = [t for t in itertools.product(*[supports[block[m]] for m in range(n)])]

    def mdim(t):
        return xdim * prod(Y[block[m]].dims[t[m]] for m in range(n))

    # cells of the induced module: (label sequence, base tuple)
    cells = []
    for seq in _label_sequences(parts):
        g = _coset_rep(parts, seq)
        for t in base_tuples:
            cells.append((tuple(seq), t, act_on_tuple(g, t)))
    by_target: dict[tuple, list] = {}
    for seq, t, tgt in cells:
        by_target.setdefault(tgt, []).append((seq, t))
    cell_index = {}
    comp_dims = {}
    for tgt, lst in by_target.items():
        off = 0
        for seq, t in lst:
            cell_index[(seq, t)] = (tgt, off)
            off += mdim(t)
        comp_dims[tgt] = off

    ident = {}

    def eye(d):
        if d not in ident:
            ident[d] = Mat.identity(d)
        return ident[d]

    def tensor(mats):
        out = Mat.identity(1)
        for m in mats:
            out = kron(out, m)
        return out

    arrow_blocks: dict[tuple, dict] = {}
    sigma_blocks: dict[tuple, dict] = {}
    for seq, t, tgt in cells:
        g = _coset_rep(parts, seq)
        ginv = [0] * n
        for a, b in enumerate(g):
            ginv[b] = a
        src_tgt, src_off = cell_index[(seq, t)]
        # arrows at induced position p act on base position ginv[p]
        for p in range(n):
            qpos = ginv[p]
            y = Y[block[qpos]]
            for x in quiver.double_arrows_from(t[qpos]):
                if not y.dims[x.target]:
                    continue
                factor = y.map(x)
                if factor.is_zero():
                    continue
                t2 = list(t)
                t2[qpos] = x.target
                t2 = tuple(t2)
                mats = [eye(xdim)] + [factor if m == qpos else eye(Y[block[m]].dims[t[m]]) for m in range(n)]
                local = tensor(mats)
                dst_tgt, dst_off = cell_index[(seq, t2)]
                key = (p, x, src_tgt)
                arrow_blocks.setdefault(key, {})[(dst_off, src_off)] = local
        # s_k on the induced module
        for k in range(n - 1):
            if seq[k] != seq[k + 1]:
                seq2 = swap(seq, k)
                local = eye(mdim(t))
                dst = cell_index[(seq2, t)]
            else:
                l = seq[k]
                qa = ginv[k]
                # consecutive positions of block l
                jloc = qa - starts[l]
                dimx_l, gens_l = irreps[l]
                xmats = [eye(d) for d, _ in irreps]
                xmats[l] = gens_l[jloc]
                xpart = tensor(xmats)
                t2 = swap(t, qa)
                ypart = _tensor_swap([Y[block[m]].dims[t[m]] for m in range(n)], qa)
                local = kron(xpart, ypart)
                dst = cell_index[(seq, t2)]
            key = (k, src_tgt)
            sigma_blocks.setdefault(key, {})[(dst[1], src_off)] = local

    arrows = {}
    for (p, x, src), blocks in arrow_blocks.items():
        dst = move(src, p, x)
        arrows[(p, x, src)] = _assemble(blocks, comp_dims[dst], comp_dims[src])
    sigma = {}
    for (k, src), blocks in sigma_blocks.items():
        dst = swap(src, k)
        sigma[(k, src)] = _assemble(blocks, comp_dims[dst], comp_dims[src])
    return WreathRep(quiver, n, comp_dims, arrows, sigma)


def _assemble(blocks: dict, nrows: int, ncols: int) -> Mat:
    out = [[Fraction(0)] * ncols for _ in range(nrows)]
    for (r0, c0), m in blocks.items():
        for r in range(m.nrows):
            row = out[r0 + r]
            src = m.rows[r]
            for c in range(m.ncols):
                if src[c] != 0:
                    row[c0 + c] = src[c]
    return Mat(out, ncols)


def _tensor_swap(dims: Sequence[int], k: int) -> Mat:
    """Permutation matrix ``(x) V_m -> (x) V_{s_k m}`` swapping factors k, k+1."""
    n = len(dims)
    dims2 = list(dims)
    dims2[k], dims2[k + 1] = dims2[k + 1], dims2[k]
    total = prod(dims)
    out = [[Fraction(0)] * total for _ in range(total)]
    for idx in itertools.product(*[range(d) for d in dims]):
        src = 0
        for m in range(n):
            src = src * dims[m] + idx[m]
        idx2 = list(idx)
        idx2[k], idx2[k + 1] = idx2[k + 1], idx2[k]
        dst = 0
        for m in range(n):
            dst = dst * dims2[m] + idx2[m]
        out[dst][src] = Fraction(1)
    return Mat(out, total) if total else Mat.zeros(0, 0)


def outer_tensor_induce(parts: Sequence[int], X: Sequence, Y: Sequence[Rep], lam0) -> WreathRep:
    """Induced module ``X (x) Y`` over ``(lam0, nu=0)``; each ``Y[l]`` is checked."""
    lam0 = as_weight(lam0)
    for l, y in enumerate(Y):
        rep = check_rank1(y, lam0)
        if not rep.passed:
            raise ValueError(f"factor Y[{l}] fails the relations: {rep.summary()}")
    if not Y:
        raise ValueError("need at least one factor")
    return induce(Y[0].quiver, parts, X, Y)


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for c in parts:
        out //= factorial(c)
    return out


def point_module(quiver: Quiver, vertex) -> Rep:
    """The one-dimensional module at a single vertex with all arrows zero."""
    return Rep(quiver, {vertex: 1})


def direct_sum(reps: Sequence[Rep]) -> Rep:
    q = reps[0].quiver
    dims = DimVector({})
    for r in reps:
        dims = dims + r.dims
    maps = {}
    arrows = q.arrows_within(dims.support)
    for a in arrows:
        for x in (a, a.dual()):
            blocks = {}
            for k, r in enumerate(reps):
                blocks[(k, k)] = r.map(x)
            maps[x] = block_matrix(blocks, [r.dims[x.target] for r in reps], [r.dims[x.source] for r in reps])
    return Rep(q, dims, maps)
