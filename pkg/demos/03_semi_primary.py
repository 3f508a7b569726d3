"""
Quasi-primary splitting
=======================

Away from weight one, each graded piece splits as ker L(1) plus the image
of L(-1).  Iterating gives v = sum_n L(-1)^n u^n with every u^n
semi-primary.
"""

from heisenberg_voa import format_state, lemma33_decompose, make_algebra, operator_matrix, parse_state
from heisenberg_voa.graded import recompose, semi_primary_decompose
from heisenberg_voa.modes import virasoro

alg = make_algebra(2)

# the matrix of L(1) L(-1) on weight 2 is invertible
M = operator_matrix(alg, lambda x: virasoro(alg, 1, virasoro(alg, -1, x)), 2, 2)
print(M.shape)
for row in M.rows():
    print([str(x) for x in row])

# h(-3)|0> = q + L(-1)u with q quasi-primary
v = parse_state("h1(-3)|0> + h1(-2)h2(-1)|0>", alg)
q, u = lemma33_decompose(alg, v)
print("q =", format_state(q))
print("u =", format_state(u))

# the full decomposition and its recomposition
v = parse_state("h1(-4)|0> + 2*h1(-2)h2(-2)|0> - h2(-1)|0> + |0>", alg)
parts = semi_primary_decompose(alg, v)
for n, part in enumerate(parts):
    print(n, format_state(part))
print(recompose(alg, parts) == v)
