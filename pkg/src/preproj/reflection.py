"""Reflection functors on explicit rank-n modules.

Internally every arrow at ``i`` is reoriented to point into ``i``.  An arrow
``e`` with ``t(e) = i`` is replaced by ``r = e*`` acting as ``V(e*)`` with
``r*`` acting as ``-V(e)``; this twist preserves all defining relations.
The new module lives on kernels ``V'_j = cap_p Ker pi_{j,p}`` inside
``V(j, D) = (+)_{xi: D -> R} V_{t(j, xi)}``, with the arrow action given by
the usual three cases and the symmetric group acting by relabelling ``xi``.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from dataclasses import dataclass
from typing import Sequence

from .linalg import Mat, nullspace_basis, solve_in_basis
from .quiver import Arrow, Quiver, _vkey
from .reps import WreathRep, check_wreath, swap, transposition_perm
from .roots import Weight, as_weight, dual_reflection
from .scalars import to_scalar

log = logging.getLogger(__name__)


def in_lambda_i(lam, nu, i, n: int) -> bool:
    """``lambda_i +- p nu != 0`` for ``p = 0 .. n-1``."""
    li = as_weight(lam)[i]
    nu = to_scalar(nu)
    return all(li + p * nu != 0 and li - p * nu != 0 for p in range(n))


@dataclass(frozen=True)
class Incoming:
    """An arrow into ``i`` after reorientation.

    ``arrow`` is the original arrow of Q; ``twisted`` says it pointed away
    from ``i`` and has been replaced by its dual.
    """

    arrow: Arrow
    twisted: bool

    @property
    def other(self):
        return self.arrow.tail if not self.twisted else self.arrow.head

    @property
    def forward(self) -> Arrow:
        """Double-quiver arrow realizing ``r: other -> i``."""
        return self.arrow.dual() if self.twisted else self.arrow

    @property
    def backward(self) -> Arrow:
        """Double-quiver arrow realizing ``r*: i -> other`` (up to sign)."""
        return self.arrow if self.twisted else self.arrow.dual()

    @property
    def backward_sign(self) -> int:
        return -1 if self.twisted else 1


class SinkContext:
    """Combinatorics of one reflection: the incoming set and tuple covers."""

    def __init__(self, V: WreathRep, i):
        q = V.quiver
        q.check_vertex(i)
        if q.has_loop(i):
            raise ValueError(f"vertex {i!r} carries a loop")
        self.V = V
        self.i = i
        self.R = [Incoming(a, a.tail == i) for a in q.arrows_at(i)]
        self._kernels: dict = {}
        self._layouts: dict = {}

    def delta(self, tup) -> tuple:
        return tuple(m for m, v in enumerate(tup) if v == self.i)

    def cover_tuple(self, tup, D, xi) -> tuple:
        """``t(tup, xi)``: positions in D move to the sources of ``xi``."""
        t = list(tup)
        for m, r in zip(D, xi):
            t[m] = self.R[r].other
        return tuple(t)

    def layout(self, tup, D) -> tuple[list, dict, int]:
        """Components of ``V(tup, D)``: list of ``(xi, cover, offset, dim)``."""
        key = (tup, D)
        if key in self._layouts:
            return self._layouts[key]
        entries = []
        index = {}
        off = 0
        for xi in itertools.product(range(len(self.R)), repeat=len(D)):
            cov = self.cover_tuple(tup, D, xi)
            d = self.V.dim(cov)
            index[xi] = len(entries)
            entries.append((xi, cov, off, d))
            off += d
        self._layouts[key] = (entries, index, off)
        return entries, index, off

    # maps on the original module, with the reorientation twist

    def r_map(self, l, r: int, tup) -> Mat:
        """``r_l`` from ``V_tup`` (position l at the source of r)."""
        return self.V.arrow_map(l, self.R[r].forward, tup)

    def rstar_map(self, l, r: int, tup) -> Mat:
        """``r*_l`` from ``V_tup`` (position l at i)."""
        inc = self.R[r]
        m = self.V.arrow_map(l, inc.backward, tup)
        return m if inc.backward_sign == 1 else -m

    # block maps between covers

    def pi(self, tup, D, p) -> Mat:
        """``pi_{tup,p}(D): V(tup, D) -> V(tup, D minus p)``."""
        k = D.index(p)
        D2 = D[:k] + D[k + 1 :]
        src, _, ncols = self.layout(tup, D)
        dst, dst_index, nrows = self.layout(tup, D2)
        out = _Blocks(nrows, ncols)
        for xi, cov, off, d in src:
            if not d:
                continue
            eta = xi[:k] + xi[k + 1 :]
            _, cov2, off2, d2 = dst[dst_index[eta]]
            if d2:
                out.put(off2, off, self.r_map(p, xi[k], cov))
        return out.mat()

    def mu(self, tup, D, p) -> Mat:
        """``mu_{tup,p}(D): V(tup, D minus p) -> V(tup, D)``."""
        k = D.index(p)
        D2 = D[:k] + D[k + 1 :]
        dst, _, nrows = self.layout(tup, D)
        src, src_index, ncols = self.layout(tup, D2)
        out = _Blocks(nrows, ncols)
        for xi, cov, off, d in dst:
            if not d:
                continue
            eta = xi[:k] + xi[k + 1 :]
            _, cov2, off2, d2 = src[src_index[eta]]
            if d2:
                out.put(off, off2, self.rstar_map(p, xi[k], cov2))
        return out.mat()

    def sigma_cover(self, tup, D, perm: Sequence[int]) -> Mat:
        """A permutation fixing ``tup`` and ``D`` setwise, acting on ``V(tup, D)``."""
        entries, index, total = self.layout(tup, D)
        pos = {m: k for k, m in enumerate(D)}
        out = _Blocks(total, total)
        for xi, cov, off, d in entries:
            if not d:
                continue
            xi2 = [None] * len(D)
            for m, r in zip(D, xi):
                xi2[pos[perm[m]]] = r
            _, cov2, off2, d2 = entries[index[tuple(xi2)]]
            out.put(off2, off, self.V.perm_map(perm, cov))
        return out.mat()

    def kernel(self, tup) -> Mat:
        """Basis (columns) of ``V'_tup`` inside ``V(tup, Delta(tup))``."""
        cache = self._kernels
        if tup not in cache:
            D = self.delta(tup)
            _, _, total = self.layout(tup, D)
            if not D:
                cache[tup] = Mat.identity(total)
            else:
                rows = []
                for p in D:
                    rows.extend(list(r) for r in self.pi(tup, D, p).rows)
                cache[tup] = nullspace_basis(rows, total)
        return cache[tup]


class _Blocks:
    def __init__(self, nrows, ncols):
        self.nrows, self.ncols = nrows, ncols
        self.blocks = []

    def put(self, r0, c0, m: Mat):
        self.blocks.append((r0, c0, m))

    def mat(self) -> Mat:
        from fractions import Fraction

        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r0, c0, m in self.blocks:
            for r, row in enumerate(m.rows):
                tgt = out[r0 + r]
                for c, v in enumerate(row):
                    if v != 0:
                        tgt[c0 + c] = tgt[c0 + c] + v
        return Mat(out, self.ncols)


def _restrict(K_src: Mat, K_dst: Mat, big: Mat, what: str) -> Mat:
    try:
        return solve_in_basis(K_dst, big @ K_src)
    except ValueError as exc:
        raise ArithmeticError(f"{what}: image leaves the reflected space") from exc


def _candidate_tuples(V: WreathRep, i) -> list[tuple]:
    verts = sorted(set(V.support) | {i}, key=_vkey)
    return list(itertools.product(verts, repeat=V.n))


def reflect(V: WreathRep, i, lam, nu, check: bool = True) -> tuple[WreathRep, Weight]:
    """Apply ``F_i``; returns the new module and its weight ``r_i lam``.

    With ``check=True`` the input is relation-checked first and a failure
    raises ``ValueError``.
    """
    lam = as_weight(lam)
    nu = to_scalar(nu)
    if check:
        report = check_wreath(V, lam, nu)
        if not report.passed:
            raise ValueError(f"input module fails the relations: {report.summary()}")
    ctx = SinkContext(V, i)
    n = V.n
    li = lam[i]

    kernels = {}
    for tup in _candidate_tuples(V, i):
        D = ctx.delta(tup)
        _, _, total = ctx.layout(tup, D)
        if not total:
            continue
        K = ctx.kernel(tup)
        if K.ncols:
            kernels[tup] = K
    dims = {t: K.ncols for t, K in kernels.items()}
    log.debug("reflect at %r: %d components", i, len(dims))

    arrows = {}
    q = V.quiver
    for tup, K in kernels.items():
        D = ctx.delta(tup)
        entries, _, total = ctx.layout(tup, D)
        for l in range(n):
            for x in q.double_arrows_from(tup[l]):
                if x.source == i or x.target == i:
                    continue
                tgt = list(tup)
                tgt[l] = x.target
                tgt = tuple(tgt)
                if tgt not in kernels:
                    continue
                t_entries, t_index, t_total = ctx.layout(tgt, D)
                big = _Blocks(t_total, total)
                for xi, cov, off, d in entries:
                    _, cov2, off2, d2 = t_entries[t_index[xi]]
                    if d and d2:
                        big.put(off2, off, V.arrow_map(l, x, cov))
                arrows[(l, x, tup)] = _restrict(K, kernels[tgt], big.mat(), f"{x.label} at {l}")
        # Case II: r*_l for l in Delta, a projection
        for l in D:
            k = D.index(l)
            D2 = D[:k] + D[k + 1 :]
            for r, inc in enumerate(ctx.R):
                tgt = list(tup)
                tgt[l] = inc.other
                tgt = tuple(tgt)
                if tgt not in kernels:
                    continue
                t_entries, t_index, t_total = ctx.layout(tgt, D2)
                big = _Blocks(t_total, total)
                for xi, cov, off, d in entries:
                    if xi[k] != r or not d:
                        continue
                    eta = xi[:k] + xi[k + 1 :]
                    _, cov2, off2, d2 = t_entries[t_index[eta]]
                    big.put(off2, off, Mat.identity(d))
                m = _restrict(K, kernels[tgt], big.mat(), "projection")
                if inc.backward_sign == -1:
                    m = -m
                arrows[(l, inc.backward, tup)] = m
        # Case III: r_l for l outside Delta with tup[l] the source of r
        for l in range(n):
            if l in D:
                continue
            for r, inc in enumerate(ctx.R):
                if tup[l] != inc.other:
                    continue
                tgt = list(tup)
                tgt[l] = i
                tgt = tuple(tgt)
                if tgt not in kernels:
                    continue
                D3 = ctx.delta(tgt)
                k3 = D3.index(l)
                t_entries, t_index, t_total = ctx.layout(tgt, D3)
                incl = _Blocks(t_total, total)
                for xi, cov, off, d in entries:
                    if not d:
                        continue
                    xi3 = xi[:k3] + (r,) + xi[k3:]
                    _, cov3, off3, d3 = t_entries[t_index[xi3]]
                    incl.put(off3, off, Mat.identity(d))
                op = Mat.scalar(t_total, -li) + ctx.mu(tgt, D3, l) @ ctx.pi(tgt, D3, l)
                for m in D:
                    op = op + ctx.sigma_cover(tgt, D3, transposition_perm(n, m, l)).scale(nu)
                big = op @ incl.mat()
                arrows[(l, inc.forward, tup)] = _restrict(K, kernels[tgt], big, "theta")

    sigma = {}
    for tup, K in kernels.items():
        D = ctx.delta(tup)
        entries, _, total = ctx.layout(tup, D)
        for k in range(n - 1):
            tgt = swap(tup, k)
            perm = list(range(n))
            perm[k], perm[k + 1] = k + 1, k
            D2 = ctx.delta(tgt)
            pos2 = {m: j for j, m in enumerate(D2)}
            t_entries, t_index, t_total = ctx.layout(tgt, D2)
            big = _Blocks(t_total, total)
            for xi, cov, off, d in entries:
                if not d:
                    continue
                xi2 = [None] * len(D)
                for m, r in zip(D, xi):
                    xi2[pos2[perm[m]]] = r
                _, cov2, off2, d2 = t_entries[t_index[tuple(xi2)]]
                big.put(off2, off, V.sigma_map(k, cov))
            sigma[(k, tup)] = _restrict(K, kernels[tgt], big.mat(), f"s_{k}")

    W = WreathRep(q, n, dims, arrows, sigma)
    return W, dual_reflection(q, i, lam)


def reflect_word(V: WreathRep, word: Sequence, lam, nu, check: bool = True) -> tuple[WreathRep, Weight]:
    """Apply ``F_{word[0]} ... F_{word[-1]}``, rightmost first.

    This matches :func:`dominate`, so the word it returns can be fed in
    directly.  Warns when some intermediate parameter leaves ``Lambda_j`` for the vertex
    about to be reflected, since the result is then not guaranteed to be
    invertible by reflecting back.
    """
    lam = as_weight(lam)
    for j in reversed(list(word)):
        if not in_lambda_i(lam, nu, j, V.n):
            warnings.warn(f"parameter outside Lambda_{j}; reflection need not be invertible", stacklevel=2)
        V, lam = reflect(V, j, lam, nu, check=check)
    return V, lam
