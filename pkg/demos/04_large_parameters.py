"""
Closed form far beyond enumeration
==================================

The counts need only integers, so parameters with astronomically many
subspaces are immediate.
"""

from linrs import CodeParams, full_distribution, gauss_binomial

params = CodeParams(p=3, m=30, d=5, k=6)
report = full_distribution(params)
for row in report.rows:
    if row.r == 2:
        print(f"r=2 i={row.i} weight={row.weight} count has {len(str(row.count))} digits")

# the counts at fixed r account for every subspace
for r in range(1, params.k + 1):
    assert sum(x.count for x in report.rows if x.r == r) == gauss_binomial(params.k, r, params.q)
print("hierarchy:", report.hierarchy)
