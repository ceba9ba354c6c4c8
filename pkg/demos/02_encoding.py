"""
Encoding and codeword weights
=============================

A message a gives the linearized polynomial f_a(x) = sum a_j x^(p^(jd)),
and the codeword lists f_a at 1, pi, pi^2, ...  The weight is fixed by how
many zeros f_a has.
"""

from collections import Counter
from itertools import product

from linrs import CodeParams, build_field, codeword_weight, encode, null_space_dim

ctx = build_field(CodeParams(p=2, m=3, d=1, k=2))

a = [1, 1]
c = encode(ctx, a)
print("message", a, "-> codeword", c, "weight", codeword_weight(c))

# every nonzero message: weight = p^m - p^(e * dim ker f_a)
tally = Counter()
for a in product(range(ctx.q), repeat=ctx.params.k):
    if any(a):
        w = codeword_weight(encode(ctx, a))
        assert w == ctx.q - ctx.sub_q ** null_space_dim(ctx, a)
        tally[w] += 1
print("classical weight distribution:", dict(tally))
