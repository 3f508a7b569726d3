"""
The Fock space M(1)
===================

States of the rank-r Heisenberg algebra are sparse sums of creation
monomials with rational coefficients.  The weight-n piece has a basis
indexed by r-colored partitions of n.
"""

from fractions import Fraction

from heisenberg_voa import State, basis, colored_partition_count, format_state, make_algebra, parse_state

# one boson with <h, h> = 1
alg = make_algebra(1)

# basis of weight 4: the five partitions of 4
for mono in basis(alg, 4):
    print(mono)

# graded dimensions for one and two bosons
print([colored_partition_count(n, 1) for n in range(8)])
print([colored_partition_count(n, 2) for n in range(8)])

# states can be written in text and printed back
v = parse_state("1/2*h1(-1)h1(-1)|0> + h1(-2)|0>", alg)
print(format_state(v), v.weights())

# arithmetic is exact; coefficients cancel and merge
w = Fraction(1, 3) * v - v
print(format_state(w))
print(format_state(v - v))

# a non-diagonal form: the hyperbolic plane
hyp = make_algebra(2, [[0, 1], [1, 0]])
print(format_state(hyp.omega))
print(State.vacuum() == parse_state("|0>", hyp))
