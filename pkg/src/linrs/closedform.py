"""Closed-form higher weight distribution and weight hierarchy.

Nothing here touches field tables: counts depend only on ``(p, m, e, k)``
and are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadIndex, BadR, InternalInconsistency
from .params import CodeParams
from .qcomb import gauss_binomial, mobius_coefficient


@dataclass(frozen=True)
class DistributionRow:
    r: int
    i: int
    weight: int
    count: int


@dataclass(frozen=True)
class DistributionReport:
    params: CodeParams
    rows: tuple[DistributionRow, ...]
    hierarchy: tuple[int, ...]

    def by_r(self) -> dict[int, dict[int, int]]:
        """``{r: {weight: count}}`` in the same layout as the brute-force tally."""
        out: dict[int, dict[int, int]] = {}
        for row in self.rows:
            out.setdefault(row.r, {})[row.weight] = row.count
        return out

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "hierarchy": list(self.hierarchy),
            "rows": [{"r": x.r, "i": x.i, "weight": x.weight, "count": str(x.count)} for x in self.rows],
        }

    @classmethod
    def from_dict(cls, data: dict) -> DistributionReport:
        pd = data["params"]
        params = CodeParams(pd["p"], pd["m"], pd["d"], pd["k"])
        rows = tuple(DistributionRow(x["r"], x["i"], x["weight"], int(x["count"])) for x in data["rows"])
        return cls(params, rows, tuple(data["hierarchy"]))


def _check_r(params: CodeParams, r: int):
    if not 1 <= r <= params.k:
        raise BadR(f"r must satisfy 1 <= r <= k (got r={r}, k={params.k})")


def weight_value_set(params: CodeParams, r: int) -> set[int]:
    """Possible weights of an ``r``-dimensional subcode: ``p**m - p**(e*i)``, ``0 <= i <= k-r``."""
    _check_r(params, r)
    return {params.q - params.sub_q**i for i in range(params.k - r + 1)}


def higher_weight_count(params: CodeParams, r: int, i: int) -> int:
    """Number of ``r``-dimensional subcodes of weight ``p**m - p**(e*i)``.

    Sums over the dimension gap ``j`` between the exact zero locus and
    its superspaces, weighting the superspace count binom(k-j-i, r)_{p^m}
    by the subspace-lattice Moebius function over GF(p**e).
    """
    if not 1 <= r <= params.k:
        raise BadIndex(f"r={r} outside 1..{params.k}")
    if not 0 <= i <= params.k - r:
        raise BadIndex(f"i={i} outside 0..{params.k - r}")
    q, qe, ext, k = params.q, params.sub_q, params.ext_degree, params.k
    total = 0
    for j in range(k - r - i + 1):
        total += mobius_coefficient(j, qe) * gauss_binomial(k - j - i, r, q) * gauss_binomial(ext - i, j, qe)
    total *= gauss_binomial(ext, i, qe)
    if total < 0:
        raise InternalInconsistency(f"negative count {total} at params={params.as_tuple()}, r={r}, i={i}")
    return total


def weight_hierarchy(params: CodeParams) -> tuple[int, ...]:
    """Minimum weights ``d_r = p**m - p**(e*(k-r))`` for ``r = 1..k``."""
    return tuple(params.q - params.sub_q ** (params.k - r) for r in range(1, params.k + 1))


def full_distribution(params: CodeParams) -> DistributionReport:
    rows = []
    for r in range(1, params.k + 1):
        for i in range(params.k - r + 1):
            rows.append(DistributionRow(r, i, params.q - params.sub_q**i, higher_weight_count(params, r, i)))
    return DistributionReport(params, tuple(rows), weight_hierarchy(params))
