"""Dense exact matrices over Q(i) and sparse exact null spaces.

Entries are ``Fraction`` or :class:`~preproj.scalars.Gaussian`.  All
routines are exact; there is no tolerance anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import to_scalar

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Mat:
    """An immutable ``nrows x ncols`` exact matrix.

    Shape is stored explicitly so that ``0 x k`` and ``k x 0`` matrices are
    representable (they occur constantly for empty vertex spaces).
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(to_scalar(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, nrows, ncols):
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = nrows
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        return cls._raw(tuple((_ZERO,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def scalar(cls, n: int, c) -> "Mat":
        c = to_scalar(c)
        return cls._raw(
            tuple(tuple(c if i == j else _ZERO for j in range(n)) for i in range(n)), n, n
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols}: [{body}])"

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __neg__(self) -> "Mat":
        return Mat._raw(tuple(tuple(-a for a in r) for r in self.rows), self.nrows, self.ncols)

    def scale(self, c) -> "Mat":
        c = to_scalar(c)
        if c == 0:
            return Mat.zeros(self.nrows, self.ncols)
        if c == 1:
            return self
        return Mat._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.nrows, self.ncols)

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            row = []
            for c in cols:
                s = _ZERO
                for k, a in nz:
                    b = c[k]
                    if b != 0:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Mat._raw(tuple(out), self.nrows, other.ncols)

    def T(self) -> "Mat":
        if self.nrows == 0:
            return Mat.zeros(self.ncols, 0)
        return Mat._raw(tuple(zip(*self.rows)), self.ncols, self.nrows)

    def take_rows(self, idx: Sequence[int]) -> "Mat":
        return Mat._raw(tuple(self.rows[i] for i in idx), len(idx), self.ncols)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Mat":
        return Mat._raw(tuple(r[c0:c1] for r in self.rows[r0:r1]), r1 - r0, c1 - c0)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def rank(self) -> int:
        return len(rref(self.to_lists(), self.ncols)[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        n = self.nrows
        aug = [list(r) + [_ONE if i == j else _ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = rref(aug, 2 * n, max_pivot_col=n)
        if len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return Mat._raw(tuple(tuple(r[n:]) for r in red[:n]), n, n)

    def nullspace(self) -> "Mat":
        """Columns form a basis of the kernel; see :func:`nullspace_basis`."""
        return nullspace_basis(self.to_lists(), self.ncols)


def block_matrix(blocks: dict[tuple[int, int], Mat], row_sizes: Sequence[int], col_sizes: Sequence[int]) -> Mat:
    """Assemble a block matrix; missing blocks are zero."""
    roff = [0]
    for s in row_sizes:
        roff.append(roff[-1] + s)
    coff = [0]
    for s in col_sizes:
        coff.append(coff[-1] + s)
    out = [[_ZERO] * coff[-1] for _ in range(roff[-1])]
    for (bi, bj), m in blocks.items():
        if m.shape != (row_sizes[bi], col_sizes[bj]):
            raise ValueError(f"block ({bi},{bj}) has shape {m.shape}")
        for r in range(m.nrows):
            row = out[roff[bi] + r]
            src = m.rows[r]
            for c in range(m.ncols):
                row[coff[bj] + c] = src[c]
    return Mat._raw(tuple(tuple(r) for r in out), roff[-1], coff[-1])


def vstack(mats: Sequence[Mat], ncols: int) -> Mat:
    rows = []
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("vstack column mismatch")
        rows.extend(m.rows)
    return Mat._raw(tuple(rows), len(rows), ncols)


def kron(a: Mat, b: Mat) -> Mat:
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Mat._raw(tuple(rows), a.nrows * b.nrows, a.ncols * b.ncols)


def rref(rows: list[list], ncols: int, max_pivot_col: int | None = None):
    """Reduced row echelon form, in place on a list of lists.

    Pivots are taken left to right, choosing the first nonzero entry at or
    below the current row.  Returns ``(rows, pivot_columns)``.
    """
    limit = ncols if max_pivot_col is None else max_pivot_col
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r >= nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [v * inv if v != 0 else v for v in rows[r]]
        prow = rows[r]
        nz = [(j, v) for j, v in enumerate(prow) if v != 0]
        for k in range(nrows):
            if k != r:
                f = rows[k][c]
                if f != 0:
                    rk = rows[k]
                    for j, v in nz:
                        rk[j] = rk[j] - f * v
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace_basis(rows: list[list], ncols: int) -> Mat:
    """Kernel basis as the columns of an ``ncols x k`` matrix.

    Each basis vector has a 1 in its own free column and 0 in the other free
    columns, so the rows at the free columns form an identity block.  This
    makes coordinates with respect to the basis trivial to read off.
    """
    red, pivots = rref([list(r) for r in rows], ncols)
    return _basis_from_rref(red, pivots, ncols)


def _basis_from_rref(red, pivots, ncols) -> Mat:
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    cols = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for r, pc in enumerate(pivots):
            a = red[r][f]
            if a != 0:
                v[pc] = -a
        cols.append(v)
    if not cols:
        return Mat.zeros(ncols, 0)
    return Mat._raw(tuple(zip(*cols)), ncols, len(cols))


def free_rows(basis: Mat) -> list[int]:
    """Row indices at which a :func:`nullspace_basis` result is the identity."""
    out = []
    for j in range(basis.ncols):
        for i in range(basis.nrows):
            if basis.rows[i][j] == 1 and all(
                basis.rows[i][k] == 0 for k in range(basis.ncols) if k != j
            ):
                out.append(i)
                break
        else:
            raise ValueError("basis is not in reduced nullspace form")
    return out


def sparse_nullspace(equations: Iterable[dict[int, object]], nvars: int) -> list[dict[int, object]]:
    """Null space of a sparse exact linear system.

    ``equations`` are dicts ``{variable: coefficient}`` meaning
    ``sum coeff*x[var] = 0``.  Gauss-Jordan elimination keeps rows sparse;
    the basis is returned as sparse dicts with the same free-column
    normalization as :func:`nullspace_basis`.
    """
    pivot_rows: dict[int, dict[int, object]] = {}
    for eq in equations:
        row = {k: v for k, v in eq.items() if v != 0}
        for pc, prow in pivot_rows.items():
            f = row.get(pc)
            if f is not None:
                for j, v in prow.items():
                    nv = row.get(j, _ZERO) - f * v
                    if nv == 0:
                        row.pop(j, None)
                    else:
                        row[j] = nv
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {j: v * inv for j, v in row.items()}
        for prow in pivot_rows.values():
            f = prow.get(pc)
            if f is not None:
                for j, v in row.items():
                    nv = prow.get(j, _ZERO) - f * v
                    if nv == 0:
                        prow.pop(j, None)
                    else:
                        prow[j] = nv
        pivot_rows[pc] = row
    basis = []
    for f in range(nvars):
        if f in pivot_rows:
            continue
        v = {f: _ONE}
        for pc, prow in pivot_rows.items():
            a = prow.get(f)
            if a is not None:
                v[pc] = -a
        basis.append(v)
    return basis


def solve_in_basis(basis: Mat, target: Mat) -> Mat:
    """Coordinates ``X`` with ``basis @ X == target``.

    ``basis`` must come from :func:`nullspace_basis`.  Raises ``ValueError``
    when some column of ``target`` lies outside the span.
    """
    if basis.ncols == 0:
        if not target.is_zero():
            raise ValueError("target is not in the span of an empty basis")
        return Mat.zeros(0, target.ncols)
    coords = target.take_rows(free_rows(basis))
    if basis @ coords != target:
        raise ValueError("target is not in the span of the basis")
    return coords
