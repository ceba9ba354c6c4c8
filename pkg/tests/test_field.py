import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrs.errors import FieldTooLargeForTables, InvalidParameters, KTooLarge, NonPrimeP
from linrs.field import build_field, is_irreducible, smallest_irreducible
from linrs.params import CodeParams

from conftest import SMALL_FIELDS, field_for, poly_add_index, poly_mul_index


def _has_factor_up_to(f, p, maxdeg):
    """Trial division by every monic polynomial of degree 1..maxdeg."""
    m = len(f) - 1
    for deg in range(1, maxdeg + 1):
        for low in product(range(p), repeat=deg):
            g = list(low) + [1]
            r = list(f)
            for top in range(m, deg - 1, -1):
                c = r[top]
                if c:
                    for i, gi in enumerate(g):
                        r[top - deg + i] = (r[top - deg + i] - c * gi) % p
            if not any(r[:deg]):
                return True
    return False


def _order_by_powering(x, p, modulus):
    y, t = x, 1
    while y != 1:
        y = poly_mul_index(y, x, p, modulus)
        t += 1
    return t


def test_prime_field_gf2():
    ctx = field_for(2, 1, 1, 1)
    assert ctx.q == 2 and ctx.pi == 1 and ctx.n == 1
    assert ctx.antilog == [1]


def test_gf4_modulus_is_the_only_irreducible_quadratic():
    irreducible = [(c0, c1) for c0, c1 in product(range(2), repeat=2)
                   if all((c0 + c1 * x + x * x) % 2 for x in range(2))]
    assert irreducible == [(1, 1)]
    ctx = field_for(2, 2, 1, 2)
    assert ctx.modulus == (1, 1, 1)
    assert _order_by_powering(ctx.pi, 2, ctx.modulus) == 3


def test_gf9_pi_order():
    ctx = field_for(3, 2, 1, 2)
    assert _order_by_powering(ctx.pi, 3, ctx.modulus) == 8


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_modulus_is_smallest_irreducible(p, m):
    f = smallest_irreducible(p, m)
    assert not _has_factor_up_to(list(f), p, m // 2)
    for low in product(range(p), repeat=m):
        if tuple(low) == f[:-1]:
            break
        assert _has_factor_up_to(list(low) + [1], p, m // 2)


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3), (2, 6)])
def test_rabin_agrees_with_trial_division(p, m):
    for low in product(range(p), repeat=m):
        f = list(low) + [1]
        assert is_irreducible(f, p) == (not _has_factor_up_to(f, p, m // 2))


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_tables_match_schoolbook_arithmetic(pm):
    ctx = field_for(*pm)
    rng = random.Random(1)
    for _ in range(1000):
        x, y = rng.randrange(ctx.q), rng.randrange(ctx.q)
        assert ctx.mul(x, y) == poly_mul_index(x, y, ctx.p, ctx.modulus)
        assert ctx.add(x, y) == poly_add_index(x, y, ctx.p, ctx.m)


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_field_axioms(pm):
    ctx = field_for(*pm)
    rng = random.Random(2)
    for _ in range(1000):
        x, y, z = (rng.randrange(ctx.q) for _ in range(3))
        assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))
        assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
        assert ctx.add(x, ctx.neg(x)) == 0
        if x:
            assert ctx.mul(x, ctx.inv(x)) == 1


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_log_antilog_bijection(pm):
    ctx = field_for(*pm)
    assert sorted(ctx.antilog) == list(range(1, ctx.q))
    assert all(ctx.log[ctx.antilog[t]] == t for t in range(ctx.n))
    assert ctx.power(ctx.pi, ctx.n) == 1
    assert ctx.order(ctx.pi) == ctx.n


def test_deterministic_construction():
    a = build_field(CodeParams(3, 3, 1, 3))
    b = build_field(CodeParams(3, 3, 1, 3))
    assert (a.modulus, a.pi, a.antilog, a.subfield_basis) == (b.modulus, b.pi, b.antilog, b.subfield_basis)


def test_explicit_primitive_element():
    base = field_for(2, 4, 1, 3)
    alts = base.primitive_elements()
    assert len(alts) == 8 and base.pi == alts[0]
    other = build_field(base.params, pi=alts[3])
    assert other.modulus == base.modulus and other.pi == alts[3]
    for x in range(16):
        for y in range(16):
            assert other.mul(x, y) == base.mul(x, y)
    with pytest.raises(InvalidParameters):
        build_field(base.params, pi=1)


def test_frobenius_examples(f4):
    assert f4.frobenius_power(0, 5) == 0
    for x in range(4):
        assert f4.frobenius_power(x, 2) == x
    # pi^2 by direct squaring is x^2 = x + 1
    assert f4.frobenius_power(f4.pi, 1) == poly_mul_index(2, 2, 2, f4.modulus) == 3


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_frobenius_fixes_everything_at_t_equal_m(pm):
    ctx = field_for(*pm)
    assert all(ctx.frobenius_power(x, ctx.m) == x for x in range(ctx.q))


def test_subfield_examples():
    assert field_for(2, 2, 1, 2).subfield_elements() == [0, 1]
    assert field_for(3, 2, 1, 2).subfield_elements() == [0, 1, 2]
    ctx = field_for(2, 4, 2, 2)
    expected = [x for x in range(16) if ctx.power(x, 4) == x]
    sub = ctx.subfield_elements()
    assert sub == expected and len(sub) == 4
    for x in sub:
        for y in sub:
            assert ctx.add(x, y) in sub and ctx.mul(x, y) in sub


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_subfield_is_fixed_set(pm):
    ctx = field_for(*pm)
    fixed = [x for x in range(ctx.q) if ctx.frobenius_power(x, ctx.e) == x]
    assert ctx.subfield_elements() == fixed
    assert len(fixed) == ctx.sub_q and 0 in fixed and 1 in fixed
    for c in fixed:
        for j in range(4):
            assert ctx.frobenius_power(c, ctx.params.d * j) == c


def test_coords_examples(f4):
    assert f4.subfield_basis == (1, f4.pi)
    assert f4.coords_over_subfield(0) == [0, 0]
    assert f4.coords_over_subfield(3) == [1, 1]
    for j, b in enumerate(f4.subfield_basis):
        assert f4.coords_over_subfield(b) == [int(i == j) for i in range(2)]


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_coords_roundtrip_and_basis(pm):
    ctx = field_for(*pm)
    seen = set()
    for x in range(ctx.q):
        c = ctx.coords_over_subfield(x)
        assert len(c) == ctx.ext_degree and all(ctx.in_subfield(v) for v in c)
        assert ctx.from_coords(c) == x
        seen.add(tuple(c))
    assert len(seen) == ctx.q


def test_coords_without_table():
    ctx = build_field(CodeParams(2, 17, 1, 1))
    assert ctx._coord_table is None
    rng = random.Random(3)
    for _ in range(50):
        x = rng.randrange(ctx.q)
        assert ctx.from_coords(ctx.coords_over_subfield(x)) == x


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_coords_are_subfield_linear(pm, xs, ys, cs):
    ctx = field_for(*pm)
    x, y = xs % ctx.q, ys % ctx.q
    sub = ctx.subfield_elements()
    c = sub[cs % len(sub)]
    lhs = ctx.coords_over_subfield(ctx.add(x, ctx.mul(c, y)))
    cx, cy = ctx.coords_over_subfield(x), ctx.coords_over_subfield(y)
    assert lhs == [ctx.add(a, ctx.mul(c, b)) for a, b in zip(cx, cy)]


def test_parameter_errors():
    with pytest.raises(NonPrimeP, match="p must be prime"):
        CodeParams(4, 2, 1, 1)
    with pytest.raises(KTooLarge, match="k > m/e"):
        CodeParams(2, 4, 2, 3)
    with pytest.raises(InvalidParameters):
        CodeParams(2, 0, 1, 1)
    with pytest.raises(FieldTooLargeForTables):
        build_field(CodeParams(2, 10, 1, 1), table_cap=2**9)
