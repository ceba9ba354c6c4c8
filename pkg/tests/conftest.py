from __future__ import annotations

from itertools import product

import pytest

from linrs.field import build_field
from linrs.params import CodeParams

GRID = [
    (2, 2, 1, 2), (2, 3, 1, 2), (2, 3, 1, 3), (2, 4, 1, 2), (2, 4, 1, 3), (2, 4, 1, 4),
    (2, 4, 2, 2), (2, 6, 2, 2), (2, 6, 2, 3), (3, 2, 1, 2), (3, 3, 1, 3), (5, 2, 1, 2),
]

SMALL_FIELDS = [(2, 1, 1, 1), (2, 2, 1, 2), (2, 3, 1, 3), (2, 4, 2, 2), (3, 2, 1, 2),
                (2, 6, 2, 3), (2, 6, 3, 2), (3, 3, 1, 3), (5, 2, 1, 2), (7, 2, 1, 1)]

_CTX_CACHE: dict = {}


def field_for(p, m, d, k, pi=None):
    key = (p, m, d, k, pi)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = build_field(CodeParams(p, m, d, k), pi=pi)
    return _CTX_CACHE[key]


@pytest.fixture
def f4():
    """GF(4) with d=1, k=2: modulus x^2+x+1, pi = x (index 2), pi^2 = x+1 (index 3)."""
    return field_for(2, 2, 1, 2)


# -- independent oracles: no log tables involved ---------------------------------

def poly_mul_index(a: int, b: int, p: int, modulus) -> int:
    """Schoolbook product of two residues given by base-p index, reduced mod modulus."""
    m = len(modulus) - 1
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    prod = [0] * (2 * m)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(2 * m - 1, m - 1, -1):
        c = prod[top]
        if c:
            for i, f in enumerate(modulus):
                prod[top - m + i] = (prod[top - m + i] - c * f) % p
    return sum(prod[i] * p**i for i in range(m))


def poly_add_index(a: int, b: int, p: int, m: int) -> int:
    return sum((((a // p**i) + (b // p**i)) % p) * p**i for i in range(m))


def span_set(ctx, vectors, scalars):
    """All linear combinations of ``vectors`` with coefficients from ``scalars``."""
    out = set()
    width = len(vectors[0]) if vectors else 0
    for coeffs in product(scalars, repeat=len(vectors)):
        acc = [0] * width
        for c, v in zip(coeffs, vectors):
            acc = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(acc, v)]
        out.add(tuple(acc))
    return frozenset(out)


def element_span(ctx, elems):
    """GF(p**e)-span of field elements, as a frozenset."""
    return frozenset(v[0] for v in span_set(ctx, [[x] for x in elems], ctx.subfield_elements())) \
        if elems else frozenset({0})


# -- acceptance reporting -----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
