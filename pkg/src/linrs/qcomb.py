"""Gaussian binomials and Moebius inversion on the subspace lattice."""

from __future__ import annotations

from functools import lru_cache

from .errors import LengthMismatch


@lru_cache(maxsize=None)
def gauss_binomial(n: int, i: int, q: int) -> int:
    """Number of ``i``-dimensional subspaces of ``GF(q)**n``.

    Each partial product is itself a Gaussian binomial, so the integer
    division at every step is exact.
    """
    if i < 0 or n < 0 or i > n:
        return 0
    i = min(i, n - i)
    result = 1
    for t in range(i):
        result = result * (q ** (n - t) - 1) // (q ** (t + 1) - 1)
    return result


def mobius_coefficient(j: int, q: int) -> int:
    """``(-1)**j * q**(j*(j-1)/2)``: the Moebius function between subspaces ``j`` dimensions apart."""
    return (-1) ** j * q ** (j * (j - 1) // 2)


def _check_length(seq, ambient_dim):
    if len(seq) != ambient_dim + 1:
        raise LengthMismatch(f"expected {ambient_dim + 1} entries, got {len(seq)}")


def forward_sum(s, ambient_dim: int, q: int) -> list[int]:
    """Superspace sum ``g(i) = sum_j binom(ambient-i, j)_q * s(i+j)``.

    ``s`` and ``g`` are indexed by subspace dimension and stand for any
    lattice function that depends on the dimension only.
    """
    _check_length(s, ambient_dim)
    return [sum(gauss_binomial(ambient_dim - i, j, q) * s[i + j]
                for j in range(ambient_dim - i + 1))
            for i in range(ambient_dim + 1)]


def mobius_invert(g, ambient_dim: int, q: int) -> list[int]:
    """Invert :func:`forward_sum`.

    ``s(i) = sum_j mobius_coefficient(j, q) * binom(ambient-i, j)_q * g(i+j)``.
    The caller guarantees that ``g`` depends on dimension only; over
    ``GF(q)**ambient_dim`` a subspace of dimension ``i`` has exactly
    ``binom(ambient-i, j)_q`` superspaces of dimension ``i+j``.
    """
    _check_length(g, ambient_dim)
    return [sum(mobius_coefficient(j, q) * gauss_binomial(ambient_dim - i, j, q) * g[i + j]
                for j in range(ambient_dim - i + 1))
            for i in range(ambient_dim + 1)]
