"""Linearized Reed-Solomon codes: evaluation, encoding, weights, zeros.

A message ``a = (a_0, ..., a_{k-1})`` defines the linearized polynomial
``f_a(x) = sum_j a_j x**(p**(j*d))`` and the codeword
``(f_a(1), f_a(pi), ..., f_a(pi**(n-1)))``.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameters, LengthMismatch, TooManyRows
from .field import FieldCtx
from .linalg import FFMatrix, endomorphism_rows, rank_rows

ENCODE_MATRIX_CUTOFF = 4096


def frobenius_exponents(ctx: FieldCtx) -> list[int]:
    """``p**(j*d) mod n`` for ``j < k``: the exponent multipliers of f_a on logs."""
    n = ctx.n
    d, k = ctx.params.d, ctx.params.k
    return [pow(ctx.p, j * d, n) if n > 1 else 0 for j in range(k)]


def check_message(ctx: FieldCtx, a) -> list[int]:
    a = [int(x) for x in a]
    if len(a) != ctx.params.k:
        raise LengthMismatch(f"message has length {len(a)}, expected k={ctx.params.k}")
    for x in a:
        if not 0 <= x < ctx.q:
            raise InvalidParameters(f"symbol {x} outside [0, {ctx.q})")
    return a


def linearized_eval(ctx: FieldCtx, a, x: int) -> int:
    """Evaluate ``f_a`` at ``x``."""
    if x == 0:
        return 0
    n, log, exp2, add = ctx.n, ctx.log, ctx._exp2, ctx.add
    lx = log[x]
    acc = 0
    for aj, pj in zip(a, frobenius_exponents(ctx)):
        if aj:
            acc = add(acc, exp2[log[aj] + lx * pj % n])
    return acc


def linearized_images(ctx: FieldCtx, a) -> list[int]:
    """Images of ``ctx.subfield_basis`` under ``f_a``."""
    return [linearized_eval(ctx, a, b) for b in ctx.subfield_basis]


def _encode_direct(ctx: FieldCtx, a) -> list[int]:
    n, log, exp2, add = ctx.n, ctx.log, ctx._exp2, ctx.add
    terms = [(log[aj], pj) for aj, pj in zip(a, frobenius_exponents(ctx)) if aj]
    out = []
    for t in range(n):
        acc = 0
        for la, pj in terms:
            acc = add(acc, exp2[la + t * pj % n])
        out.append(acc)
    return out


def _encode_matrix(ctx: FieldCtx, a) -> list[int]:
    # f_a is GF(p)-linear; build its m x m matrix on digit vectors once
    p, m = ctx.p, ctx.m
    place = np.asarray(ctx._place, dtype=np.int64)
    cols = [ctx.digits(linearized_eval(ctx, a, int(b))) for b in place]
    mat = np.array(cols, dtype=np.int64).T
    pts = np.asarray(ctx.antilog, dtype=np.int64)
    dig = (pts[:, None] // place) % p
    return ((dig @ mat.T % p) @ place).tolist()


def encode(ctx: FieldCtx, a, method: str = "auto") -> list[int]:
    """Codeword of message ``a``; coordinate ``t`` is ``f_a(pi**t)``.

    ``method`` is ``"direct"``, ``"matrix"`` or ``"auto"`` (matrix once
    ``n`` exceeds :data:`ENCODE_MATRIX_CUTOFF`).  Both give identical output.
    """
    a = check_message(ctx, a)
    if method == "auto":
        method = "matrix" if ctx.n > ENCODE_MATRIX_CUTOFF else "direct"
    if method == "direct":
        return _encode_direct(ctx, a)
    if method == "matrix":
        return _encode_matrix(ctx, a)
    raise ValueError(f"unknown encode method {method!r}")


def codeword_weight(c) -> int:
    return sum(1 for x in c if x)


def null_space_dim(ctx: FieldCtx, a) -> int:
    """Dimension over GF(p**e) of the zero set of ``f_a`` in GF(p**m)."""
    rows = endomorphism_rows(ctx, linearized_images(ctx, a))
    return ctx.ext_degree - rank_rows(ctx, rows)


def shift_message(ctx: FieldCtx, a) -> list[int]:
    """Message whose codeword is the left cyclic shift of ``encode(a)``."""
    return [ctx.mul(aj, ctx.frobenius_power(ctx.pi, j * ctx.params.d)) for j, aj in enumerate(a)]


def lin_vandermonde(ctx: FieldCtx, xs) -> FFMatrix:
    """The ``len(xs) x k`` matrix with entry ``(s, j) = xs[s]**(p**(j*d))``."""
    k, d = ctx.params.k, ctx.params.d
    if len(xs) > k:
        raise TooManyRows(f"{len(xs)} rows requested but k={k}")
    rows = [[ctx.frobenius_power(x, j * d) for j in range(k)] for x in xs]
    return FFMatrix.from_rows(ctx, rows, k)


def vandermonde_full_rank(ctx: FieldCtx, xs) -> bool:
    M = lin_vandermonde(ctx, xs)
    return rank_rows(ctx, M.rows) == len(xs)
