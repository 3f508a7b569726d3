from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisenberg_voa.fock import (
    DegenerateFormError,
    ModuleState,
    Monomial,
    State,
    basis,
    canonicalize,
    colored_partition_count,
    graded_components,
    make_algebra,
    sum_states,
)

from oracles import brute_force_colored_partitions, partition_numbers


def test_make_algebra_identity():
    alg = make_algebra(1, [[1]])
    assert alg.gram_inverse == ((Fraction(1),),)


def test_make_algebra_hyperbolic_inverse():
    alg = make_algebra(2, [[0, 1], [1, 0]])
    # inverse of the swap matrix is itself
    assert alg.gram_inverse == ((0, 1), (1, 0))


def test_make_algebra_rejects_degenerate():
    with pytest.raises(DegenerateFormError, match="degenerate form"):
        make_algebra(2, [[1, 1], [1, 1]])


def test_make_algebra_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        make_algebra(2, [[1, 2], [0, 1]])


def test_make_algebra_rational_gram():
    alg = make_algebra(2, [["1/2", "1/3"], ["1/3", "2"]])
    g = [list(r) for r in alg.gram]
    gi = [list(r) for r in alg.gram_inverse]
    prod = [[sum(g[i][k] * gi[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_basis_vacuum():
    assert basis(1, 0) == [Monomial()]


def test_basis_rank1_weight4_order():
    got = [list(m) for m in basis(1, 4)]
    assert got == [
        [(1, 4)],
        [(1, 3), (1, 1)],
        [(1, 2), (1, 2)],
        [(1, 2), (1, 1), (1, 1)],
        [(1, 1)] * 4,
    ]


def test_basis_rank2_weight2():
    assert len(basis(2, 2)) == 5


@pytest.mark.parametrize("rank", [1, 2, 3])
@pytest.mark.parametrize("n", range(0, 7))
def test_basis_matches_brute_force(rank, n):
    got = basis(rank, n)
    assert len(set(got)) == len(got)
    assert all(m.weight == n for m in got)
    expected = brute_force_colored_partitions(n, rank)
    as_sets = {tuple(sorted((i - 1, lev) for i, lev in m)) for m in got}
    assert as_sets == expected
    assert colored_partition_count(n, rank) == len(expected)


def test_rank1_partition_numbers():
    assert [len(basis(1, n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert [len(basis(1, n)) for n in range(13)] == partition_numbers(12)


def test_basis_is_sorted_deterministically():
    b = basis(2, 5)
    assert b == sorted(b, key=Monomial.sort_key)


def test_canonicalize_factor_order():
    a = canonicalize({((1, 1), (2, 2)): 1})
    b = canonicalize({((2, 2), (1, 1)): 1})
    assert a == b
    (mono,) = list(a)
    assert list(mono) == [(2, 2), (1, 1)]


def test_cancellation_and_merge():
    v = State.from_factors([(1, 2), (1, 1)])
    assert (v + (-1) * v).is_zero()
    assert Fraction(1, 2) * v + Fraction(1, 2) * v == v
    merged = canonicalize({((1, 1), (2, 1)): Fraction(1, 2), ((2, 1), (1, 1)): Fraction(1, 2)})
    assert merged == State.from_factors([(1, 1), (2, 1)])


def test_graded_components_examples():
    h1 = State.from_factors([(1, 1)])
    h2 = State.from_factors([(1, 2)])
    assert graded_components(h1 + h2) == {1: h1, 2: h2}
    assert graded_components(State.vacuum()) == {0: State.vacuum()}
    assert graded_components(State()) == {}


def test_module_states_do_not_mix():
    a = ModuleState.vacuum([1])
    b = ModuleState.vacuum([2])
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(TypeError):
        a + State.vacuum()


def test_omega_rank1():
    alg = make_algebra(1)
    assert alg.omega == Fraction(1, 2) * State.from_factors([(1, 1), (1, 1)])


# --- properties -------------------------------------------------------------

factors = st.lists(st.tuples(st.integers(1, 2), st.integers(1, 4)), max_size=4)
coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=12)
states = st.lists(st.tuples(factors, coeffs), max_size=6).map(
    lambda items: sum_states(State.from_factors(f, c) for f, c in items)
)


@settings(max_examples=200, deadline=None)
@given(states, states, states)
def test_addition_associative_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == State()


@settings(max_examples=200, deadline=None)
@given(states)
def test_canonicalize_idempotent(s):
    once = canonicalize(s)
    assert canonicalize(once) == once == s
    assert all(c != 0 for _, c in once.items())


@settings(max_examples=200, deadline=None)
@given(states)
def test_graded_components_sum_back(s):
    comps = graded_components(s)
    assert sum_states(comps.values()) == s
    for k, c in comps.items():
        assert c.weights() == [k]
