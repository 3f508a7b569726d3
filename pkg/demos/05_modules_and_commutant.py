"""
Momentum modules and the commutant
==================================

On the momentum module M(1, lambda) the zero mode h_0 acts by <h, lambda>,
which separates V_1 from (L(0)+L(-1))V.  The commutant of a sub-Heisenberg
algebra is its tensor complement.
"""

from fractions import Fraction

from heisenberg_voa import ModuleState, format_state, make_algebra, parse_state
from heisenberg_voa.radical import (
    commutant_basis,
    l0_plus_l_minus_one,
    module_zero_mode_matrix,
    oinfinity_member,
    tensor_factor_dim_check,
)

alg = make_algebra(2)
lam = (Fraction(1, 2), Fraction(-3))

# o(h_1) on the module vacuum is the scalar <h_1, lambda>
M = module_zero_mode_matrix(alg, parse_state("h1(-1)|0>", alg), lam, 0)
print([[str(x) for x in row] for row in M.rows()])

# (L(0)+L(-1))w has vanishing zero mode on every module
w = parse_state("h1(-2)h2(-1)|0> + h2(-1)|0>", alg)
v = l0_plus_l_minus_one(alg, w)
print(all(module_zero_mode_matrix(alg, v, lam, k).is_zero() for k in range(5)))

# membership in (L(0)+L(-1))V, with a module witness when it fails
cert = oinfinity_member(alg, parse_state("h1(-2)|0>", alg))
print(cert.member, [str(x) for x in cert.momentum], cert.vacuum_eigenvalue)
print(ModuleState.vacuum(cert.momentum))

# the commutant of the first boson is the Fock space of the second
for n in range(4):
    print(n, [format_state(s) for s in commutant_basis(alg, [[1, 0]], n)])
print(tensor_factor_dim_check(alg, [[1, 0]], 6).line())
