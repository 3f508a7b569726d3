"""
The radical and the degree
==========================

A state lies in the radical when its zero mode vanishes.  For M(1) the
radical is V_1 + (L(0)+L(-1))V, so membership is a finite linear solve.
The degree of a state is the first nonnegative mode that does not vanish.
"""

from heisenberg_voa import degree, format_state, make_algebra, parse_state, radical_decompose, radical_member
from heisenberg_voa.radical import filtration_member

alg = make_algebra(1)

# h(-2)|0> = -h(-1)|0> + (L(0)+L(-1)) h(-1)|0>
cert = radical_member(alg, parse_state("h1(-2)|0>", alg))
print(cert.member, format_state(cert.j1), format_state(cert.w))

# omega is not in the radical: its zero mode is L(0)
cert = radical_member(alg, alg.omega)
weight, u, ou = cert.witness
print(cert.member, weight, format_state(u), format_state(ou))

# the constructive decomposition, by induction on the semi-primary length
v = parse_state("3*h1(-1)|0> + h1(-1)h1(-1)|0> + h1(-2)h1(-1)|0> + h1(-4)|0>", alg)
print(radical_member(alg, v).member)
j1, w = radical_decompose(alg, v)
print(format_state(j1), "|", format_state(w))

# degrees: omega has degree 0, h has degree 1, each L(-1) adds one
for text in ["1/2*h1(-1)h1(-1)|0>", "h1(-1)|0>", "h1(-2)|0>", "h1(-3)|0>"]:
    res = degree(alg, parse_state(text, alg))
    n, u = res.mode_witness
    print(text, res.degree, f"mode {n} is nonzero on {format_state(u)}")

# the filtration
print(filtration_member(alg, parse_state("h1(-2)|0>", alg), 2))
print(filtration_member(alg, parse_state("h1(-2)|0>", alg), 3))
