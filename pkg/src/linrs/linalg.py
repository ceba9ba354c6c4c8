"""Exact linear algebra over GF(p**m) or its subfield GF(p**e).

Matrices are small and dense, so rows are plain Python lists of element
indices and every operation goes through the :class:`FieldCtx` tables.
The ``*_rows`` functions are the raw kernels used on hot paths; the
:class:`FFMatrix` wrappers add shape and field bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, InvalidParameters
from .field import FieldCtx


@dataclass(frozen=True)
class FFMatrix:
    """Dense matrix with entries in ``ctx``'s big field or, if ``subfield``, in GF(p**e)."""

    ctx: FieldCtx
    rows: tuple[tuple[int, ...], ...]
    ncols: int
    subfield: bool = False

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise InvalidParameters("ragged matrix rows")
            for x in r:
                if not 0 <= x < self.ctx.q:
                    raise InvalidParameters(f"entry {x} outside GF({self.ctx.q})")
                if self.subfield and not self.ctx.in_subfield(x):
                    raise InvalidParameters(f"entry {x} not in GF({self.ctx.sub_q})")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows, ncols: int | None = None, subfield: bool = False):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ctx, rows, ncols, subfield)

    @classmethod
    def identity(cls, ctx: FieldCtx, size: int, subfield: bool = False):
        return cls.from_rows(ctx, [[int(i == j) for j in range(size)] for i in range(size)], size, subfield)

    @classmethod
    def zeros(cls, ctx: FieldCtx, nrows: int, ncols: int, subfield: bool = False):
        return cls.from_rows(ctx, [[0] * ncols for _ in range(nrows)], ncols, subfield)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def transpose(self) -> FFMatrix:
        cols = [tuple(r[j] for r in self.rows) for j in range(self.ncols)]
        return FFMatrix(self.ctx, tuple(cols), self.nrows, self.subfield)

    def __matmul__(self, other):
        if isinstance(other, FFMatrix):
            _check_same_field(self, other)
            if self.ncols != other.nrows:
                raise InvalidParameters(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.transpose().rows
            out = [[dot(self.ctx, r, c) for c in cols] for r in self.rows]
            return FFMatrix(self.ctx, tuple(map(tuple, out)), other.ncols, self.subfield)
        return matvec(self, other)


def _check_same_field(a: FFMatrix, b: FFMatrix):
    if a.ctx is not b.ctx and a.ctx.params != b.ctx.params:
        raise FieldMismatch("matrices over different field contexts")
    if a.ctx.pi != b.ctx.pi or a.subfield != b.subfield:
        raise FieldMismatch("mixed-field matrix operation")


def dot(ctx: FieldCtx, u, v) -> int:
    acc = 0
    mul, add = ctx.mul, ctx.add
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def matvec(M: FFMatrix, v) -> list[int]:
    if len(v) != M.ncols:
        raise InvalidParameters("vector length does not match column count")
    return [dot(M.ctx, r, v) for r in M.rows]


def rref_rows(ctx: FieldCtx, rows) -> tuple[list[list[int]], list[int]]:
    """Reduce ``rows`` to RREF in place order; returns (rows, pivot columns).

    Pivot search scans each column top to bottom from the current row.
    """
    R = [list(r) for r in rows]
    if not R:
        return R, []
    mul, add, neg, inv = ctx.mul, ctx.add, ctx.neg, ctx.inv
    nrows, ncols = len(R), len(R[0])
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if R[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            R[rank], R[piv] = R[piv], R[rank]
        prow = R[rank]
        if prow[c] != 1:
            s = inv(prow[c])
            prow = R[rank] = [mul(s, x) for x in prow]
        for i in range(nrows):
            f = R[i][c]
            if i != rank and f:
                nf = neg(f)
                R[i] = [add(a, mul(nf, b)) if b else a for a, b in zip(R[i], prow)]
        pivots.append(c)
        rank += 1
    return R, pivots


def rank_rows(ctx: FieldCtx, rows) -> int:
    """Rank via forward elimination only (no back substitution)."""
    R = [list(r) for r in rows if any(r)]
    if not R:
        return 0
    mul, add, neg, inv = ctx.mul, ctx.add, ctx.neg, ctx.inv
    ncols = len(R[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[rank], R[piv] = R[piv], R[rank]
        prow = R[rank]
        s = neg(inv(prow[c]))
        for i in range(rank + 1, len(R)):
            f = R[i][c]
            if f:
                g = mul(f, s)
                R[i] = [add(a, mul(g, b)) if b else a for a, b in zip(R[i], prow)]
        rank += 1
        if rank == len(R):
            break
    return rank


def kernel_rows(ctx: FieldCtx, rows, ncols: int) -> list[list[int]]:
    """Basis of the right kernel of the matrix with the given rows."""
    R, pivots = rref_rows(ctx, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = ctx.neg(R[r][fc])
        basis.append(v)
    return basis


def rref(M: FFMatrix) -> tuple[FFMatrix, int, list[int]]:
    """Reduced row echelon form of ``M``.

    Returns ``(R, rank, pivot_cols)``; ``R`` keeps the shape of ``M`` with
    zero rows at the bottom.
    """
    R, pivots = rref_rows(M.ctx, M.rows)
    return FFMatrix(M.ctx, tuple(map(tuple, R)), M.ncols, M.subfield), len(pivots), pivots


def rank(M: FFMatrix) -> int:
    return rank_rows(M.ctx, M.rows)


def kernel_basis(M: FFMatrix) -> list[list[int]]:
    """Vectors spanning ``{v : M v = 0}``, one per non-pivot column."""
    return kernel_rows(M.ctx, M.rows, M.ncols)


def vstack(*mats: FFMatrix) -> FFMatrix:
    first = mats[0]
    for M in mats[1:]:
        _check_same_field(first, M)
        if M.ncols != first.ncols:
            raise InvalidParameters("column counts differ")
    rows = tuple(r for M in mats for r in M.rows)
    return FFMatrix(first.ctx, rows, first.ncols, first.subfield)


def endomorphism_rows(ctx: FieldCtx, images) -> list[list[int]]:
    """Row form of :func:`endomorphism_matrix`; column j holds coords(images[j])."""
    cols = [ctx.coords_over_subfield(y) for y in images]
    return [list(r) for r in zip(*cols)]


def endomorphism_matrix(ctx: FieldCtx, images) -> FFMatrix:
    """Matrix over GF(p**e) of the GF(p**e)-linear map sending ``subfield_basis[j]`` to ``images[j]``.

    Acting on coordinate columns, ``M @ coords(x) == coords(map(x))``.
    """
    if len(images) != ctx.ext_degree:
        raise InvalidParameters(f"need {ctx.ext_degree} images, got {len(images)}")
    return FFMatrix.from_rows(ctx, endomorphism_rows(ctx, images), ctx.ext_degree, subfield=True)
