"""Table-driven arithmetic in GF(p**m) and its subfield GF(p**e).

Elements are plain ints in ``[0, p**m)``: the base-``p`` digits of the index
are the coefficients of the residue polynomial, constant term first.  Index
0 is zero and index 1 is one.  Multiplication goes through log/antilog
tables built from a primitive element; addition is XOR for ``p == 2`` and a
Zech-logarithm lookup otherwise.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

import numpy as np

from .errors import FieldTooLargeForTables, InvalidParameters
from .params import CodeParams, prime_factors

DEFAULT_TABLE_CAP = 2**20
_COORD_TABLE_CAP = 2**16


# -- polynomials over GF(p), coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p).

    ``f`` lists coefficients from the constant term up, leading 1 included.
    """
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    # cheap pre-filter: a root in GF(p) means a linear factor
    if f[0] == 0:
        return False
    for x in range(1, p):
        if sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0:
            return False
    X = [0, 1]
    if _poly_sub(_poly_powmod(X, p**m, f, p), X, p):
        return False
    for ell in prime_factors(m):
        h = _poly_sub(_poly_powmod(X, p ** (m // ell), f, p), X, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``m`` over GF(p).

    Coefficients are compared starting from the constant term.  The return
    value has length ``m + 1`` with a trailing 1.
    """
    for low in product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


# -- GF(p) helpers on digit vectors ------------------------------------------

def _fp_rank(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _fp_inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i, c] % p)
        aug[[c, piv]] = aug[[piv, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), p - 2, p) % p
        for i in range(n):
            if i != c and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[c]) % p
    return aug[:, n:]


class FieldCtx:
    """A concrete realisation of ``GF(p**m)`` with subfield ``GF(p**e)``.

    Build through :func:`build_field`.  Treated as immutable after
    construction; all methods are pure.

    Attributes
    ----------
    params : CodeParams
    modulus : tuple of int
        Monic irreducible polynomial, constant term first.
    pi : int
        Primitive element used as log base.
    antilog : list of int
        ``antilog[t] == pi**t`` for ``0 <= t < n``.
    log : list of int
        Inverse of ``antilog``; ``log[0] == -1``.
    subfield_basis : tuple of int
        ``m/e`` elements forming a basis of ``GF(p**m)`` over ``GF(p**e)``.
    """

    def __init__(self, params: CodeParams, modulus: tuple[int, ...], pi: int,
                 antilog: list[int], log: list[int]):
        self.params = params
        self.p = params.p
        self.m = params.m
        self.e = params.e
        self.q = params.q
        self.n = params.n
        self.sub_q = params.sub_q
        self.ext_degree = params.ext_degree
        self.modulus = modulus
        self.pi = pi
        self.antilog = antilog
        self.log = log
        self._exp2 = antilog + antilog  # avoids a modulo in mul
        self._zech = self._build_zech() if self.p != 2 else None
        # -1 == pi**(n/2) for odd p
        self._neg_shift = self.n // 2 if self.p != 2 else 0
        self._place = [self.p**i for i in range(self.m)]
        self._setup_subfield()

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.m}), e={self.e}, pi={self.pi})"

    def __reduce__(self):
        return (build_field, (self.params, self.pi))

    # -- digit conversion -------------------------------------------------
    def digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            x, r = divmod(x, p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        return sum(int(c) * w for c, w in zip(ds, self._place))

    def _build_zech(self) -> list[int]:
        p = self.p
        a = np.asarray(self.antilog, dtype=np.int64)
        low = a % p
        plus_one = a - low + (low + 1) % p
        log = np.asarray(self.log, dtype=np.int64)
        return log[plus_one].tolist()

    # -- arithmetic -------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if x == 0:
            return y
        if y == 0:
            return x
        lx = self.log[x]
        z = self._zech[(self.log[y] - lx) % self.n]
        if z < 0:
            return 0
        return self._exp2[lx + z]

    def neg(self, x: int) -> int:
        if x == 0 or self.p == 2:
            return x
        return self._exp2[self.log[x] + self._neg_shift]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp2[self.log[x] + self.log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.antilog[-self.log[x] % self.n]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def power(self, x: int, t: int) -> int:
        if x == 0:
            if t == 0:
                return 1
            if t < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.antilog[self.log[x] * t % self.n]

    def frobenius_power(self, x: int, t: int) -> int:
        """Return ``x**(p**t)``."""
        if x == 0:
            return 0
        return self.antilog[self.log[x] * pow(self.p, t, self.n) % self.n]

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        from math import gcd
        return self.n // gcd(self.log[x], self.n)

    def primitive_elements(self) -> list[int]:
        """All primitive elements, in ascending index order."""
        from math import gcd
        return sorted(self.antilog[t] for t in range(self.n) if gcd(t, self.n) == 1)

    # -- subfield ---------------------------------------------------------
    def _setup_subfield(self):
        p, e, m = self.p, self.e, self.m
        step = self.n // (self.sub_q - 1)
        self.omega = self.antilog[step % self.n] if self.n else 1
        self._subfield = sorted([0] + [self.antilog[step * t % self.n] for t in range(self.sub_q - 1)])
        self._subfield_set = frozenset(self._subfield)
        omega_pows = [self.power(self.omega, t) for t in range(e)]

        def fp_rows(elems):
            return [self.digits(self.mul(w, b)) for b in elems for w in omega_pows]

        basis: list[int] = []
        # greedy over 1, pi, pi**2, ... then an index scan as fallback
        candidates = [self.antilog[t] for t in range(self.n)] + list(range(1, self.q))
        for c in candidates:
            if len(basis) == self.ext_degree:
                break
            trial = basis + [c]
            if _fp_rank(fp_rows(trial), p) == e * len(trial):
                basis = trial
        self.subfield_basis = tuple(basis)

        # column j*e + t holds digits of omega**t * basis[j]
        a = np.array(fp_rows(basis), dtype=np.int64).T
        self._coord_inv = _fp_inverse(a, p)
        # element of GF(p**e) with F_p coordinates (c_0..c_{e-1}) in 1, omega, ...
        combos = []
        for code in range(self.sub_q):
            cs = [(code // p**t) % p for t in range(e)]
            combos.append(self.sum(self.mul(c, w) for c, w in zip(cs, omega_pows)))
        self._combo = combos
        self._sub_place = [p**t for t in range(e)]

    def subfield_elements(self) -> list[int]:
        """The ``p**e`` elements fixed by ``x -> x**(p**e)``, ascending."""
        return list(self._subfield)

    def in_subfield(self, x: int) -> bool:
        return x in self._subfield_set

    @cached_property
    def _coord_table(self):
        if self.q > _COORD_TABLE_CAP:
            return None
        allx = np.arange(self.q, dtype=np.int64)
        dig = (allx[:, None] // np.asarray(self._place, dtype=np.int64)) % self.p
        c = dig @ self._coord_inv.T % self.p
        codes = c.reshape(self.q, self.ext_degree, self.e) @ np.asarray(self._sub_place, dtype=np.int64)
        return np.asarray(self._combo, dtype=np.int64)[codes].tolist()

    def coords_over_subfield(self, x: int) -> list[int]:
        """Coordinates of ``x`` in :attr:`subfield_basis` (subfield elements)."""
        table = self._coord_table
        if table is not None:
            return list(table[x])
        c = (self._coord_inv @ np.asarray(self.digits(x), dtype=np.int64)) % self.p
        e = self.e
        return [self._combo[sum(int(c[j * e + t]) * self._sub_place[t] for t in range(e))]
                for j in range(self.ext_degree)]

    def from_coords(self, coords) -> int:
        """Inverse of :meth:`coords_over_subfield`."""
        return self.sum(self.mul(c, b) for c, b in zip(coords, self.subfield_basis))


def _mul_by_const_matrix(c: int, modulus: list[int], p: int, m: int) -> np.ndarray:
    """F_p matrix of ``y -> c*y`` acting on digit column vectors."""
    cpoly = [(c // p**i) % p for i in range(m)]
    cols = []
    for j in range(m):
        xj = [0] * j + [1]
        prod = _poly_mulmod(cpoly, xj, modulus, p)
        cols.append(prod + [0] * (m - len(prod)))
    return np.array(cols, dtype=np.int64).T


def _index_pow(g: int, t: int, modulus: list[int], p: int, m: int) -> int:
    gp = _trim([(g // p**i) % p for i in range(m)])
    r = _poly_powmod(gp, t, modulus, p)
    return sum(c * p**i for i, c in enumerate(r))


def _is_primitive_raw(g: int, modulus: list[int], p: int, m: int) -> bool:
    n = p**m - 1
    if g <= 0 or g >= p**m:
        return False
    if _index_pow(g, n, modulus, p, m) != 1:
        return False
    return all(_index_pow(g, n // ell, modulus, p, m) != 1 for ell in prime_factors(n))


def build_field(params: CodeParams, pi: int | None = None,
                table_cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """Construct the deterministic field realisation for ``params``.

    The modulus is the smallest monic irreducible (constant term compared
    first).  ``pi`` defaults to the smallest primitive index; passing an
    explicit primitive element gives an alternative log base over the same
    modulus.
    """
    p, m = params.p, params.m
    q = p**m
    if q > table_cap:
        raise FieldTooLargeForTables(f"p^m = {q} exceeds table cap {table_cap}")
    modulus = smallest_irreducible(p, m)
    mod = list(modulus)
    if pi is None:
        pi = next(g for g in range(1, q) if _is_primitive_raw(g, mod, p, m))
    elif not _is_primitive_raw(pi, mod, p, m):
        raise InvalidParameters(f"{pi} is not a primitive element of GF({p}^{m})")

    n = q - 1
    place = p ** np.arange(m, dtype=np.int64)
    # doubling: powers 0..L-1 known, multiply the block by pi**L
    powers = np.array([1], dtype=np.int64)
    while len(powers) < n:
        block = _index_pow(pi, len(powers), mod, p, m)
        mat = _mul_by_const_matrix(block, mod, p, m)
        dig = (powers[:, None] // place) % p
        nxt = (dig @ mat.T % p) @ place
        powers = np.concatenate([powers, nxt])
    antilog = powers[:n]
    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(n, dtype=np.int64)
    return FieldCtx(params, modulus, pi, antilog.tolist(), log.tolist())
