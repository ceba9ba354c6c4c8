"""Code parameters (p, m, d, k) and their standing constraints."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import InvalidParameters, KTooLarge, NonPrimeP


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine for n < 2**40)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class CodeParams:
    """Parameters of a linearized Reed-Solomon code over ``GF(p**m)``.

    ``e = gcd(m, d)`` and the length ``n = p**m - 1`` are derived. The
    constructor rejects anything outside ``k <= m/e``.
    """

    p: int
    m: int
    d: int
    k: int
    e: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        for name in ("p", "m", "d", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidParameters(f"{name} must be an integer, got {v!r}")
        if not is_prime(self.p):
            raise NonPrimeP(f"p must be prime (got p={self.p})")
        for name in ("m", "d", "k"):
            if getattr(self, name) < 1:
                raise InvalidParameters(f"{name} must be >= 1 (got {name}={getattr(self, name)})")
        e = gcd(self.m, self.d)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "n", self.p**self.m - 1)
        if self.k > self.m // e:
            raise KTooLarge(f"k > m/e (k={self.k}, m/e={self.m // e})")

    @property
    def q(self) -> int:
        """Size of the big field, ``p**m``."""
        return self.p**self.m

    @property
    def sub_q(self) -> int:
        """Size of the subfield, ``p**e``."""
        return self.p**self.e

    @property
    def ext_degree(self) -> int:
        """``m/e``, the dimension of ``GF(p**m)`` over ``GF(p**e)``."""
        return self.m // self.e

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.m, self.d, self.k)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "d": self.d, "e": self.e, "k": self.k, "n": self.n}
