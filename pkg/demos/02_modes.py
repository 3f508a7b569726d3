"""
Vertex operator modes
=====================

v_n w for arbitrary states, the Virasoro modes L(n) = omega_{n+1}, zero
modes o(v), and a check of the commutator formula.
"""

from heisenberg_voa import check_commutator, format_state, make_algebra, parse_state, vertex_mode, virasoro, zero_mode

alg = make_algebra(1)
h = parse_state("h1(-1)|0>", alg)
vac = parse_state("|0>", alg)

# L(0) measures weight, L(-1) translates, L(1) lowers
print(format_state(virasoro(alg, 0, h)))
print(format_state(virasoro(alg, -1, h)))
print(format_state(virasoro(alg, 1, parse_state("h1(-2)|0>", alg))))

# the creation property: v_{-1}|0> = v
v = parse_state("h1(-3)h1(-1)|0>", alg)
print(vertex_mode(alg, v, -1, vac) == v)

# (L(-1)v)_n = -n v_{n-1}
hh = parse_state("h1(-1)h1(-1)|0>", alg)
lv = virasoro(alg, -1, h)
print(vertex_mode(alg, lv, 2, hh) == -2 * vertex_mode(alg, h, 1, hh))

# the zero mode of omega is L(0); the zero mode of h is h_0 = 0 on M(1)
print(format_state(zero_mode(alg, alg.omega, hh)))
print(format_state(zero_mode(alg, h, hh)))

# central charge: [L(2), L(-2)]|0> = c/2 |0>
print(format_state(virasoro(alg, 2, virasoro(alg, -2, vac))))

# the commutator formula for omega with itself, on all states up to weight 4
print(check_commutator(alg, alg.omega, alg.omega, 0, 2, 4).line())
