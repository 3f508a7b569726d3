from fractions import Fraction

import pytest

from heisenberg_voa.expr import format_state
from heisenberg_voa.fock import ModuleState, State, basis, make_algebra
from heisenberg_voa.modes import l_minus_one_power, vertex_mode, zero_mode
from heisenberg_voa.radical import (
    NotInRadicalError,
    canonical_form_matrix,
    commutant_basis,
    degree,
    degree_witness,
    filtration_member,
    j1_basis,
    l0_plus_l_minus_one,
    mode_witness,
    module_zero_mode_matrix,
    oinfinity_member,
    radical_decompose,
    radical_member,
    tensor_factor_dim_check,
    witness_momentum,
)
from heisenberg_voa.sampling import random_homogeneous, random_state, stream

from conftest import h
from oracles import partition_numbers, two_colored_counts

VAC = State.vacuum()
H = h((1, 1))


# --- J_1 ------------------------------------------------------------------------------


def test_j1_rank1(rank1):
    assert j1_basis(rank1) == [H]


def test_j1_rank3(rank3):
    assert j1_basis(rank3) == [h((i, 1)) for i in range(1, 4)]


# --- radical membership ---------------------------------------------------------------------


def test_radical_member_weight_one(rank1):
    cert = radical_member(rank1, H)
    assert cert.member and cert.j1 == H and cert.w == State()


def test_radical_member_h_minus_two(rank1):
    cert = radical_member(rank1, h((1, 2)))
    assert cert.member
    assert cert.j1 == -H
    assert cert.w == H


def test_radical_non_member_omega(rank1):
    cert = radical_member(rank1, rank1.omega)
    assert not cert.member
    assert cert.witness == (1, H, H)


def test_radical_non_member_vacuum(rank2):
    cert = radical_member(rank2, VAC)
    assert not cert.member
    assert cert.witness == (0, VAC, VAC)


def test_radical_zero_state(rank1):
    assert radical_member(rank1, State()).member


@pytest.mark.parametrize("rank", [1, 2])
def test_image_of_l0_plus_l_minus_one_is_member(rank):
    alg = make_algebra(rank)
    rng = stream(11, "radical image")
    for _ in range(20):
        w = random_state(alg, rng, range(0, 5))
        v = l0_plus_l_minus_one(alg, w)
        cert = radical_member(alg, v)
        assert cert.member
        assert cert.j1 + l0_plus_l_minus_one(alg, cert.w) == v
        for m in range(0, 5):
            for x in [State.from_monomial(b) for b in basis(alg, m)]:
                assert zero_mode(alg, v, x).is_zero()


def test_certificate_dict(rank1):
    d = radical_member(rank1, rank1.omega).to_dict(format_state)
    assert d == {"member": False, "witness": {"weight": 1, "u": "h1(-1)|0>", "o(v)u": "h1(-1)|0>"}}


# --- constructive decomposition -------------------------------------------------------------


def test_radical_decompose_examples(rank1):
    assert radical_decompose(rank1, H) == (H, State())
    assert radical_decompose(rank1, h((1, 2))) == (-H, H)
    w = h((1, 1), (1, 1))
    j1, w2 = radical_decompose(rank1, l0_plus_l_minus_one(rank1, w))
    assert j1 + l0_plus_l_minus_one(rank1, w2) == l0_plus_l_minus_one(rank1, w)
    assert (j1, w2) == (State(), w)


def test_radical_decompose_rejects_non_member(rank1):
    with pytest.raises(NotInRadicalError, match="input not in radical"):
        radical_decompose(rank1, rank1.omega)


@pytest.mark.parametrize("rank", [1, 2])
def test_radical_decompose_agrees_with_solve(rank):
    alg = make_algebra(rank)
    rng = stream(5, "decompose")
    for _ in range(20):
        j = random_homogeneous(alg, rng, 1)
        w = random_state(alg, rng, range(1, 5))
        v = j + l0_plus_l_minus_one(alg, w)
        assert radical_decompose(alg, v) == (j, w)


def test_radical_is_not_graded(rank1):
    v = l0_plus_l_minus_one(rank1, h((1, 1), (1, 1)))
    assert radical_member(rank1, v).member
    # o(L(-1)x) = -wt(x) o(x), so neither graded piece is a member on its own
    members = {k: radical_member(rank1, v.component(k)).member for k in v.weights()}
    assert members == {2: False, 3: False}


# --- degree ---------------------------------------------------------------------------------


def test_degree_examples(rank1):
    assert degree(rank1, rank1.omega).degree == 0
    res = degree(rank1, H)
    assert res.degree == 1
    assert res.structural_witness == (H, State())
    for k in range(0, 4):
        assert degree(rank1, l_minus_one_power(rank1, H, k)).degree == k + 1


def test_degree_of_h_minus_three(rank1):
    # h(-3)|0> = 1/2 L(-1)^2 h(-1)|0>, so the degree is 1 + 2
    v = h((1, 3))
    assert l_minus_one_power(rank1, H, 2) == 2 * v
    res = degree(rank1, v)
    assert res.degree == 3
    assert res.structural_witness == (Fraction(1, 2) * H, State())
    assert res.mode_witness == (3, H)
    assert degree_witness(rank1, v, 3) == 3
    assert [vertex_mode(rank1, v, n, H).is_zero() for n in range(4)] == [True, True, True, False]


def test_degree_witness_examples(rank1):
    assert degree_witness(rank1, rank1.omega, 3) == 0
    assert degree_witness(rank1, H, 2) == 1
    assert mode_witness(rank1, rank1.omega, 0, 3) == H


def test_degree_witness_bound_too_small(rank1):
    with pytest.raises(ArithmeticError, match="witness bound too small"):
        degree_witness(rank1, h((1, 3)), 0)


def test_degree_of_vacuum_and_mixed(rank1):
    assert degree(rank1, VAC).degree == -1
    res = degree(rank1, VAC + rank1.omega)
    assert res.degree == 0 and res.ignored_vacuum_part
    assert degree(rank1, H + rank1.omega).degree == 0
    assert degree(rank1, H + h((1, 3))).component_degrees == {1: 1, 3: 3}


def test_degree_witness_rejects_bad_input(rank1):
    with pytest.raises(ValueError):
        degree_witness(rank1, H + rank1.omega)
    with pytest.raises(ValueError):
        degree_witness(rank1, VAC)


@pytest.mark.parametrize("rank", [1, 2])
def test_degree_up_set(rank):
    alg = make_algebra(rank)
    rng = stream(2, "up-set")
    for _ in range(15):
        k = int(rng.integers(1, 5))
        v = random_homogeneous(alg, rng, k)
        d = degree(alg, v).degree
        nonzero = [n for n in range(k + 1) if mode_witness(alg, v, n, 6) is not None]
        assert nonzero == list(range(d, k + 1))


# --- filtration ------------------------------------------------------------------------------------


def test_filtration_examples(rank1):
    assert filtration_member(rank1, h((1, 2)), 2)
    assert not filtration_member(rank1, h((1, 2)), 3)
    assert not filtration_member(rank1, rank1.omega, 1)
    assert not filtration_member(rank1, VAC, 1)


def test_filtration_requires_positive_d(rank1):
    with pytest.raises(ValueError):
        filtration_member(rank1, H, 0)


def test_filtration_inside_high_weights(rank2):
    rng = stream(4, "filtration")
    for _ in range(20):
        v = random_state(rank2, rng, range(1, 6))
        for d in range(1, 7):
            if filtration_member(rank2, v, d):
                assert min(v.weights()) >= d
                if d >= 2:
                    assert filtration_member(rank2, v, d - 1)


# --- O_infinity and modules --------------------------------------------------------------------


def test_oinfinity_weight_one(rank1):
    cert = oinfinity_member(rank1, H)
    assert not cert.member
    assert cert.momentum == (Fraction(1),)
    assert cert.vacuum_eigenvalue == 1


def test_oinfinity_image_member(rank1):
    w = h((1, 1), (1, 1))
    cert = oinfinity_member(rank1, l0_plus_l_minus_one(rank1, w))
    assert cert.member and cert.w == w


def test_oinfinity_h_minus_two(rank1):
    cert = oinfinity_member(rank1, h((1, 2)))
    assert not cert.member
    assert cert.radical.member and cert.radical.j1 == -H
    assert cert.vacuum_eigenvalue != 0
    image = zero_mode(rank1, h((1, 2)), ModuleState.vacuum(cert.momentum))
    assert image == cert.vacuum_eigenvalue * ModuleState.vacuum(cert.momentum)


def test_witness_momentum_isotropic():
    alg = make_algebra(2, [[0, 1], [1, 0]])
    j1 = h((1, 1))  # <h1, h1> = 0
    lam = witness_momentum(alg, j1)
    assert alg.pairing(1, lam) == 1
    cert = oinfinity_member(alg, j1)
    assert not cert.member and cert.vacuum_eigenvalue == 1


def test_module_zero_mode_matrix_examples():
    alg = make_algebra(2, [[2, 1], [1, 3]])
    lam = (Fraction(1, 2), Fraction(-1))
    M = module_zero_mode_matrix(alg, h((1, 1)), lam, 0)
    assert M.rows() == [[alg.pairing(1, lam)]]
    w = h((1, 2)) + h((2, 1), (1, 1))
    v = l0_plus_l_minus_one(alg, w)
    for k in range(0, 5):
        assert module_zero_mode_matrix(alg, v, lam, k).is_zero()
        assert module_zero_mode_matrix(alg, h((1, 2)), (0, 0), k).is_zero()


# --- canonical form and commutant ---------------------------------------------------------------


@pytest.mark.parametrize("gram", [[[1]], [[2, 1], [1, 3]], [[0, 1], [1, 0]]])
def test_canonical_form_is_gram(gram):
    alg = make_algebra(len(gram), gram)
    assert canonical_form_matrix(alg) == [list(r) for r in alg.gram]


def test_commutant_examples(rank2):
    assert commutant_basis(rank2, [[1, 0]], 2) == [h((2, 2)), h((2, 1), (2, 1))]
    assert commutant_basis(rank2, [[1, 0], [0, 1]], 3) == []
    assert commutant_basis(rank2, [[1, 0]], 0) == [VAC]


def test_commutant_dims_are_partition_numbers(rank2):
    p = partition_numbers(6)
    assert [len(commutant_basis(rank2, [[1, 0]], n)) for n in range(7)] == p
    assert two_colored_counts(6) == [1, 2, 5, 10, 20, 36, 65]


def test_commutant_nonorthogonal():
    alg = make_algebra(2, [[2, 1], [1, 3]])
    # the complement of h1 is spanned by h1 - 2 h2
    basis2 = commutant_basis(alg, [[1, 0]], 1)
    assert len(basis2) == 1
    (s,) = basis2
    assert vertex_mode(alg, h((1, 1)), 1, s).is_zero()


def test_commutant_rejects_degenerate_subspace():
    alg = make_algebra(2, [[0, 1], [1, 0]])
    with pytest.raises(ValueError, match="degenerate"):
        commutant_basis(alg, [[1, 0]], 1)


def test_tensor_factor_examples(rank1, rank2, rank3):
    rep = tensor_factor_dim_check(rank2, [[1, 0]], 6)
    assert rep.passed and rep.details["commutant_dims"] == partition_numbers(6)
    rep = tensor_factor_dim_check(rank1, [[1]], 6)
    assert rep.passed and rep.details["commutant_dims"] == [1, 0, 0, 0, 0, 0, 0]
    rep = tensor_factor_dim_check(rank3, [[1, 0, 0], [0, 1, 0]], 4)
    assert rep.passed and rep.details["commutant_dims"] == partition_numbers(4)
