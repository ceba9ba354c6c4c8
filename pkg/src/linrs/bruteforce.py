"""Exhaustive higher weight distribution by walking every subspace.

Subspaces of the message space ``GF(p**m)**k`` are listed once each through
their reduced row echelon bases, grouped by pivot columns (Schubert cells).
Each subspace's weight is obtained from the dimension of its common zero
locus; :func:`subspace_weight_direct` recomputes it from the codewords as a
cross-check.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .code import _encode_direct, frobenius_exponents, lin_vandermonde
from .errors import BadR, DependentU, EnumerationTooLarge
from .field import FieldCtx
from .linalg import FFMatrix, kernel_rows, rank_rows
from .qcomb import gauss_binomial

DEFAULT_ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical RREF basis of an ``r``-dimensional subspace of ``GF(q)**k``."""

    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def matrix(self, ctx: FieldCtx) -> FFMatrix:
        return FFMatrix.from_rows(ctx, self.rows, len(self.rows[0]))


def pivot_sets(k: int, r: int):
    return list(combinations(range(k), r))


def rref_cell(alphabet: Sequence[int], k: int, pivots: Sequence[int]) -> Iterator[SubspaceBasis]:
    """All RREF bases with the given pivot columns and entries from ``alphabet``.

    ``alphabet`` must list the field's elements with 0 and 1 at whatever
    positions; only the free cells (right of a row's pivot, outside pivot
    columns) range over it.
    """
    pivots = tuple(pivots)
    pset = set(pivots)
    free = [(s, c) for s, pc in enumerate(pivots) for c in range(pc + 1, k) if c not in pset]
    template = [[0] * k for _ in pivots]
    for s, pc in enumerate(pivots):
        template[s][pc] = 1
    for values in product(alphabet, repeat=len(free)):
        rows = [list(t) for t in template]
        for (s, c), v in zip(free, values):
            rows[s][c] = v
        yield SubspaceBasis(tuple(map(tuple, rows)), pivots)


def enumerate_rref(alphabet: Sequence[int], k: int, r: int) -> Iterator[SubspaceBasis]:
    for piv in pivot_sets(k, r):
        yield from rref_cell(alphabet, k, piv)


def _check_r(k: int, r: int):
    if not 1 <= r <= k:
        raise BadR(f"r must satisfy 1 <= r <= k (got r={r}, k={k})")


def check_enumeration(ctx: FieldCtx, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of ``r``-dimensional subspaces; raises if above ``cap``."""
    k = ctx.params.k
    _check_r(k, r)
    count = gauss_binomial(k, r, ctx.q)
    if count > cap:
        raise EnumerationTooLarge(count, cap)
    return count


def enumerate_subspaces(ctx: FieldCtx, k: int, r: int,
                        cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[SubspaceBasis]:
    """Every ``r``-dimensional subspace of ``GF(p**m)**k``, exactly once.

    The size check happens eagerly, before the first item is requested.
    """
    _check_r(k, r)
    count = gauss_binomial(k, r, ctx.q)
    if count > cap:
        raise EnumerationTooLarge(count, cap)
    return enumerate_rref(range(ctx.q), k, r)


@lru_cache(maxsize=32)
def _basis_frobenius_logs(ctx: FieldCtx) -> list[list[int]]:
    # entry [j][l] = log(b_j ** (p**(l*d)))
    n = ctx.n
    return [[ctx.log[b] * pj % n for pj in frobenius_exponents(ctx)] for b in ctx.subfield_basis]


def _endomorphism_rows_fast(ctx: FieldCtx, a, blogs) -> list[list[int]]:
    log, exp2, add = ctx.log, ctx._exp2, ctx.add
    terms = [(l, log[x]) for l, x in enumerate(a) if x]
    cols = []
    for row in blogs:
        acc = 0
        for l, la in terms:
            acc = add(acc, exp2[la + row[l]])
        cols.append(ctx.coords_over_subfield(acc))
    return [list(r) for r in zip(*cols)]


def stacked_endomorphism_rows(ctx: FieldCtx, H: SubspaceBasis) -> list[list[int]]:
    """Rows of the ``r*(m/e) x (m/e)`` subfield matrix whose kernel is Z(H) in coordinates."""
    blogs = _basis_frobenius_logs(ctx)
    out = []
    for a in H.rows:
        out.extend(_endomorphism_rows_fast(ctx, a, blogs))
    return out


def zero_locus_dim(ctx: FieldCtx, H: SubspaceBasis) -> int:
    """Dimension over GF(p**e) of the common zeros of all ``f_a``, ``a`` in H."""
    return ctx.ext_degree - rank_rows(ctx, stacked_endomorphism_rows(ctx, H))


def zero_locus_basis(ctx: FieldCtx, H: SubspaceBasis) -> list[int]:
    """A GF(p**e)-basis of Z(H) as field elements."""
    ker = kernel_rows(ctx, stacked_endomorphism_rows(ctx, H), ctx.ext_degree)
    return [ctx.from_coords(v) for v in ker]


def subspace_weight(ctx: FieldCtx, H: SubspaceBasis) -> int:
    """Support size of the code subspace, ``p**m - p**(e * dim Z(H))``."""
    return ctx.q - ctx.sub_q ** zero_locus_dim(ctx, H)


def subspace_weight_direct(ctx: FieldCtx, H: SubspaceBasis) -> int:
    """Support size computed from the definition: encode every basis row."""
    support = [False] * ctx.n
    for a in H.rows:
        for t, c in enumerate(_encode_direct(ctx, a)):
            if c:
                support[t] = True
    return sum(support)


def _tally_cell(ctx: FieldCtx, pivots) -> Counter:
    tally: Counter = Counter()
    k = ctx.params.k
    for H in rref_cell(range(ctx.q), k, pivots):
        tally[subspace_weight(ctx, H)] += 1
    return tally


def brute_distribution(ctx: FieldCtx, r: int, cap: int = DEFAULT_ENUMERATION_CAP,
                       workers: int = 1) -> dict[int, int]:
    """Map weight -> number of ``r``-dimensional subspaces of that weight.

    With ``workers > 1`` the pivot-column cells are tallied in separate
    processes and merged; the result does not depend on ``workers``.
    """
    check_enumeration(ctx, r, cap)
    cells = pivot_sets(ctx.params.k, r)
    total: Counter = Counter()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_cell, [ctx] * len(cells), cells):
                total.update(part)
    else:
        for piv in cells:
            total.update(_tally_cell(ctx, piv))
    return dict(sorted(total.items(), reverse=True))


def subfield_rank(ctx: FieldCtx, elems) -> int:
    """Rank over GF(p**e) of a list of field elements."""
    return rank_rows(ctx, [ctx.coords_over_subfield(x) for x in elems])


def annihilator(ctx: FieldCtx, U_basis) -> list[list[int]]:
    """Basis of ``{a : f_a vanishes on U}``, the kernel of the linearized Vandermonde on U."""
    M = lin_vandermonde(ctx, U_basis)
    return kernel_rows(ctx, M.rows, ctx.params.k)


def count_C_rU(ctx: FieldCtx, U_basis, r: int) -> int:
    """Number of ``r``-dimensional H with ``Z(H)`` containing the span of ``U_basis``."""
    k = ctx.params.k
    _check_r(k, r)
    U_basis = list(U_basis)
    i = len(U_basis)
    if i and subfield_rank(ctx, U_basis) != i:
        raise DependentU("U basis is not independent over the subfield")
    if i > k - r:
        return 0
    return gauss_binomial(len(annihilator(ctx, U_basis)), r, ctx.q)
