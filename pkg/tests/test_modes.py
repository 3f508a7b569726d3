from fractions import Fraction
from math import factorial

import pytest

from heisenberg_voa.fock import ModuleState, State, basis, make_algebra
from heisenberg_voa.modes import (
    binom,
    boson_mode,
    check_commutator,
    l_minus_one_power,
    p_mode,
    vertex_mode,
    virasoro,
    zero_mode,
)

from conftest import h
from oracles import normal_ordered_mode

VAC = State.vacuum()


def all_states(alg, top):
    return [State.from_monomial(m) for n in range(top + 1) for m in basis(alg, n)]


# --- boson modes --------------------------------------------------------------


def test_annihilation_pairs_with_gram():
    alg = make_algebra(2, [[2, 1], [1, 3]])
    # h_1(1) k(-1)|0> = <h_1, h_2>|0>
    assert boson_mode(alg, 1, 1, h((2, 1))) == VAC
    assert boson_mode(alg, 2, 1, h((2, 1))) == 3 * VAC


@pytest.mark.parametrize("m", range(0, 5))
def test_nonnegative_modes_kill_vacuum(rank2, m):
    assert boson_mode(rank2, 1, m, VAC).is_zero()


def test_creation_is_multiplication(rank2):
    assert boson_mode(rank2, 1, -2, h((2, 1))) == h((1, 2), (2, 1))


def test_zero_mode_on_module_is_momentum_pairing():
    alg = make_algebra(2, [[0, 1], [1, 0]])
    w = ModuleState([Fraction(3), Fraction(5)], {next(iter(h((1, 2)))): 1})
    out = boson_mode(alg, 1, 0, w)
    assert out == 5 * w


def test_multiplicity_in_annihilation(rank1):
    # h(1) h(-1)^3 |0> = 3 h(-1)^2 |0>
    assert boson_mode(rank1, 1, 1, h((1, 1), (1, 1), (1, 1))) == 3 * h((1, 1), (1, 1))


# --- vertex modes: examples ---------------------------------------------------------


@pytest.mark.parametrize("n", range(-4, 5))
def test_weight_one_vertex_mode_is_boson_mode(rank2, n):
    hv = h((1, 1))
    for w in all_states(rank2, 4):
        assert vertex_mode(rank2, hv, n, w) == boson_mode(rank2, 1, n, w)


def test_minus_one_mode_on_vacuum_is_identity(rank2):
    for v in all_states(rank2, 4):
        assert vertex_mode(rank2, v, -1, VAC) == v


@pytest.mark.parametrize("n", range(-4, 5))
def test_h_minus_two_mode(rank1, n):
    v = h((1, 2))
    for w in all_states(rank1, 5):
        assert vertex_mode(rank1, v, n, w) == -n * boson_mode(rank1, 1, n - 1, w)


def test_virasoro_examples(rank1):
    assert virasoro(rank1, 0, h((1, 1))) == h((1, 1))
    assert virasoro(rank1, -1, h((1, 1))) == h((1, 2))
    assert virasoro(rank1, 1, h((1, 2))) == 2 * h((1, 1))


def test_l0_is_weight(rank2):
    for n in range(6):
        for m in basis(rank2, n):
            v = State.from_monomial(m)
            assert virasoro(rank2, 0, v) == n * v


def test_zero_mode_examples(rank1):
    for w in all_states(rank1, 5):
        assert zero_mode(rank1, h((1, 1)), w).is_zero()
        assert zero_mode(rank1, h((1, 2)), w).is_zero()
    w = h((1, 1), (1, 1))
    assert zero_mode(rank1, rank1.omega, w) == 2 * w


def test_zero_mode_preserves_weight(rank2):
    v = rank2.omega + h((1, 3), (2, 1))
    for w in all_states(rank2, 4):
        out = zero_mode(rank2, v, w)
        assert out.weights() in ([], w.weights())


def test_p_mode_examples(rank1):
    assert p_mode(rank1, h((1, 1)), VAC) == h((1, 1))
    assert p_mode(rank1, rank1.omega, VAC).is_zero()
    assert p_mode(rank1, h((1, 2)), VAC).is_zero()


def test_omega_is_quasi_primary(rank2):
    om = rank2.omega
    assert virasoro(rank2, 1, om).is_zero()
    assert virasoro(rank2, 0, om) == 2 * om


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_virasoro_central_charge(rank):
    alg = make_algebra(rank)
    out = virasoro(alg, 2, virasoro(alg, -2, VAC))
    assert out == Fraction(rank, 2) * VAC


def test_nonorthonormal_omega_central_charge():
    alg = make_algebra(2, [[0, 1], [1, 0]])
    assert virasoro(alg, 2, virasoro(alg, -2, VAC)) == VAC
    assert virasoro(alg, 1, alg.omega).is_zero()
    for m in basis(alg, 3):
        v = State.from_monomial(m)
        assert virasoro(alg, 0, v) == 3 * v


def test_binom_generalized():
    assert binom(-3, 2) == 6
    assert binom(4, 2) == 6
    assert binom(2, 3) == 0
    assert binom(-1, 5) == -1


# --- dual route: normal-ordered product oracle ----------------------------------------


@pytest.mark.parametrize(
    "gram", [[[1]], [[1, 0], [0, 1]], [[2, 1], [1, 1]], [[0, 1], [1, 0]]], ids=["r1", "r2", "r2b", "hyp"]
)
def test_vertex_mode_matches_normal_ordered_oracle(gram):
    alg = make_algebra(len(gram), gram)
    g = [[Fraction(x) for x in row] for row in gram]
    vs = [m for n in range(0, 4) for m in basis(alg, n)]
    ws = [m for n in range(0, 4) for m in basis(alg, n)]
    for v in vs:
        for n in range(-3, v.weight + 3):
            for w in ws:
                got = vertex_mode(alg, State.from_monomial(v), n, State.from_monomial(w))
                expected = normal_ordered_mode(g, list(v), n, list(w))
                assert got == State({type(v)(sorted(k, key=lambda f: (-f[1], f[0]))): c for k, c in expected.items()})


def test_module_vertex_mode_matches_oracle():
    alg = make_algebra(2, [[1, 0], [0, 2]])
    lam = (Fraction(1, 2), Fraction(-3))
    g = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
    for v in [m for n in range(1, 4) for m in basis(alg, n)]:
        for w in [m for n in range(0, 3) for m in basis(alg, n)]:
            for n in range(-2, v.weight + 2):
                got = vertex_mode(alg, State.from_monomial(v), n, ModuleState(lam, {w: 1}))
                expected = normal_ordered_mode(g, list(v), n, list(w), lam)
                want = ModuleState(lam, {type(v)(sorted(k, key=lambda f: (-f[1], f[0]))): c for k, c in expected.items()})
                assert got == want


# --- invariants ---------------------------------------------------------------------------


def test_translation_covariance(rank2):
    for v in all_states(rank2, 3):
        lv = virasoro(rank2, -1, v)
        for n in range(-3, 5):
            for w in all_states(rank2, 4):
                assert vertex_mode(rank2, lv, n, w) == -n * vertex_mode(rank2, v, n - 1, w)


def test_creation_property(rank2):
    for v in all_states(rank2, 5):
        for k in range(5):
            expected = Fraction(1, factorial(k)) * l_minus_one_power(rank2, v, k)
            assert vertex_mode(rank2, v, -k - 1, VAC) == expected


def test_graded_shift(rank2):
    for v in all_states(rank2, 3):
        k = v.weight
        for n in range(-2, k + 2):
            for w in all_states(rank2, 3):
                out = vertex_mode(rank2, v, n, w)
                assert out.weights() in ([], [w.weight + k - n - 1])


def test_quasi_primary_commutator_omega(rank1):
    om = rank1.omega
    for t in range(-2, 5):
        coeff = 2 * (2 - Fraction(t, 2) - 1)
        for w in all_states(rank1, 5):
            lhs = virasoro(rank1, 1, vertex_mode(rank1, om, t, w)) - vertex_mode(rank1, om, t, virasoro(rank1, 1, w))
            assert lhs == coeff * vertex_mode(rank1, om, t + 1, w)


def test_weight_one_commutator(rank2):
    u = h((1, 1)) + 3 * h((2, 1))
    for w in all_states(rank2, 5):
        lhs = virasoro(rank2, 1, vertex_mode(rank2, u, 0, w)) - vertex_mode(rank2, u, 0, virasoro(rank2, 1, w))
        assert lhs.is_zero()


def test_vacuum_commutes_with_translation(rank1):
    for n in range(-3, 3):
        for w in all_states(rank1, 4):
            a = virasoro(rank1, -1, vertex_mode(rank1, VAC, n, w))
            b = vertex_mode(rank1, VAC, n, virasoro(rank1, -1, w))
            assert a == b


def test_weight_one_generator_fails_to_commute_with_translation(rank1):
    hv = h((1, 1))
    w = h((1, 1))
    # [L(-1), h_2] = -2 h_1, nonzero on h(-1)|0>
    a = virasoro(rank1, -1, vertex_mode(rank1, hv, 2, w))
    b = vertex_mode(rank1, hv, 2, virasoro(rank1, -1, w))
    assert a - b == -2 * vertex_mode(rank1, hv, 1, w) == -2 * VAC


# --- commutator checker ----------------------------------------------------------------------


def test_check_commutator_virasoro(rank1):
    om = rank1.omega
    assert check_commutator(rank1, om, om, 0, 2, 4).passed


@pytest.mark.parametrize("m,n", [(1, -1), (2, -2), (3, 1), (-2, 2), (0, 0)])
def test_check_commutator_heisenberg(m, n):
    alg = make_algebra(2, [[2, 1], [1, 3]])
    rep = check_commutator(alg, h((1, 1)), h((2, 1)), m, n, 4)
    assert rep.passed and rep.checked > 0
    # the commutator is the scalar m<h,k> delta
    w = h((1, 2), (2, 1))
    lhs = vertex_mode(alg, h((1, 1)), m, vertex_mode(alg, h((2, 1)), n, w)) - vertex_mode(
        alg, h((2, 1)), n, vertex_mode(alg, h((1, 1)), m, w)
    )
    assert lhs == (m * 1 if m + n == 0 else 0) * w


@pytest.mark.parametrize("m", range(0, 4))
def test_check_commutator_with_vacuum(rank1, m):
    rep = check_commutator(rank1, h((1, 1)), VAC, m, 2, 4)
    assert rep.passed


def test_check_commutator_rejects_inhomogeneous(rank1):
    with pytest.raises(ValueError):
        check_commutator(rank1, h((1, 1)) + h((1, 2)), VAC, 0, 0, 2)
