"""
Building GF(p^m) and its subfield
=================================

Fields are realised with log/antilog tables over the smallest irreducible
modulus. Here we look at GF(16) with d = 2, so the subfield is GF(4).
"""

from linrs import CodeParams, build_field

ctx = build_field(CodeParams(p=2, m=4, d=2, k=2))
print(ctx)
print("modulus (constant term first):", ctx.modulus)
print("primitive element index:", ctx.pi)

# the subfield is the fixed set of x -> x^(p^e)
sub = ctx.subfield_elements()
print("GF(4) inside GF(16):", sub)
assert all(ctx.frobenius_power(x, ctx.e) == x for x in sub)

# coordinates over the subfield round-trip exactly
x = ctx.add(ctx.pi, ctx.power(ctx.pi, 7))
c = ctx.coords_over_subfield(x)
print(f"x = {x}, coordinates in basis {ctx.subfield_basis}: {c}")
assert ctx.from_coords(c) == x
