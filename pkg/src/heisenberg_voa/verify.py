"""Randomized and exhaustive checks of the operator identities and structure
theorems, evaluated exactly on truncated graded pieces.

Every check has the signature ``check(algebra, seed, trials, bound)`` and
returns a :class:`VerificationReport`.  Identities stated "as operators" are
tested as matrices on every piece of weight <= bound.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from . import exact
from .fock import BosonAlgebra, ModuleState, State, basis, colored_partition_count, dim, make_algebra
from .graded import (
    is_quasi_primary,
    kernel_basis,
    lemma33_decompose,
    operator_matrix,
    recompose,
    semi_primary_decompose,
)
from .modes import (
    act_terms,
    add_terms,
    boson_mode,
    integral_terms,
    check_commutator_grid,
    l_minus_one_power,
    states_up_to,
    vertex_mode,
    virasoro,
    zero_mode,
)
from .radical import (
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
from .report import VerificationReport
from .sampling import random_homogeneous, random_state, random_scalar, stream

Check = Callable[[BosonAlgebra, int, int, int], VerificationReport]


def _fail(name: str, checked: int, **example) -> VerificationReport:
    return VerificationReport(name, False, checked, {k: repr(v) for k, v in example.items()})


def _commutator(algebra, op1, op2, w):
    return op1(op2(w)) - op2(op1(w))


# ---------------------------------------------------------------------------
# mode identities


def check_heisenberg_bracket(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """[h_i(m), h_j(n)] = m <h_i,h_j> delta_{m+n,0}, and (h_i(-1)|0>)_n = h_i(n)."""
    name = "heisenberg bracket"
    checked = 0
    r = algebra.rank
    modes = range(-bound, bound + 1)
    for _, w in states_up_to(algebra, bound):
        for i in range(1, r + 1):
            hv = State.from_factors([(i, 1)])
            for m in modes:
                hm = boson_mode(algebra, i, m, w)
                if vertex_mode(algebra, hv, m, w) != hm:
                    return _fail(name, checked, i=i, n=m, w=w)
                for j in range(1, r + 1):
                    for n in modes:
                        lhs = boson_mode(algebra, i, m, boson_mode(algebra, j, n, w)) - boson_mode(
                            algebra, j, n, hm
                        )
                        expect = (m * algebra.gram[i - 1][j - 1]) * w if m + n == 0 else State()
                        checked += 1
                        if lhs != expect:
                            return _fail(name, checked, i=i, j=j, m=m, n=n, w=w, lhs=lhs)
    return VerificationReport(name, True, checked)


def check_creation_property(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """v_{-k-1}|0> = L(-1)^k v / k! for every basis v of weight <= bound, k <= 4."""
    name = "creation property"
    vac = State.vacuum()
    checked = 0
    for _, v in states_up_to(algebra, bound):
        power = v
        for k in range(5):
            if k:
                power = virasoro(algebra, -1, power)
            lhs = vertex_mode(algebra, v, -k - 1, vac)
            checked += 1
            if lhs != Fraction(1, factorial(k)) * power:
                return _fail(name, checked, v=v, k=k, lhs=lhs)
    return VerificationReport(name, True, checked)


def check_translation_covariance(
    algebra: BosonAlgebra, seed: int, trials: int, bound: int, basis_weight: Optional[int] = None
) -> VerificationReport:
    """(L(-1)v)_n = -n v_{n-1} on pieces <= bound, for every basis v of weight
    <= basis_weight (default min(3, bound)) and n in [-3, 5], then for random
    v of weight <= 4 with a random n each."""
    name = "translation covariance"
    rng = stream(seed, name)
    top = min(3, bound) if basis_weight is None else basis_weight
    ws = [w for _, w in states_up_to(algebra, bound)]
    w_terms = [{next(iter(w)): 1} for w in ws]
    checked = 0
    for _, v in states_up_to(algebra, top):
        v_terms = {next(iter(v)): 1}
        lv_terms = dict(virasoro(algebra, -1, v).items())
        for n in range(-3, 6):
            for w, wt in zip(ws, w_terms):
                diff = act_terms(algebra, lv_terms, n, wt)
                add_terms(diff, act_terms(algebra, v_terms, n - 1, wt), n)
                checked += 1
                if diff:
                    return _fail(name, checked, v=v, n=n, w=w)
    for _ in range(trials):
        v = random_state(algebra, rng, range(0, 5))
        n = int(rng.integers(-3, 6))
        lv = virasoro(algebra, -1, v)
        for w in ws:
            checked += 1
            if vertex_mode(algebra, lv, n, w) != -n * vertex_mode(algebra, v, n - 1, w):
                return _fail(name, checked, v=v, n=n, w=w)
    return VerificationReport(name, True, checked)


def check_commutator_identity(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Commutator formula for random homogeneous a, b of weight <= 3 and every
    (m, n) in [-3, 4]^2, on pieces <= min(bound, 4)."""
    name = "commutator formula"
    rng = stream(seed, name)
    wbound = min(bound, 4)
    modes = range(-3, 5)
    checked = 0
    for _ in range(trials):
        a = random_homogeneous(algebra, rng, int(rng.integers(0, 4)))
        b = random_homogeneous(algebra, rng, int(rng.integers(0, 4)))
        rep = check_commutator_grid(algebra, a, b, modes, modes, wbound)
        checked += rep.checked
        if not rep:
            return VerificationReport(name, False, checked, {"a": repr(a), "b": repr(b), **rep.counterexample})
    return VerificationReport(name, True, checked)


def _random_quasi_primary(algebra: BosonAlgebra, rng, weight: int) -> State:
    while True:
        q, _ = lemma33_decompose(algebra, random_homogeneous(algebra, rng, weight))
        if q:
            return q


def check_quasi_primary_commutators(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """[L(1), u_t] = 2(wt u - t/2 - 1) u_{t+1} for quasi-primary u of weight <= 4
    and every t in [-3, 2 wt u], and [L(1), u_0] = 0 for weight-one u, as
    matrices on pieces <= bound."""
    name = "quasi-primary commutators"
    rng = stream(seed, name)
    w_terms = [{next(iter(w)): 1} for _, w in states_up_to(algebra, bound)]
    omega = dict(algebra.omega.items())

    def l1(terms):
        return act_terms(algebra, omega, 2, terms)

    checked = 0
    for _ in range(trials):
        k = int(rng.integers(0, 5))
        if k == 1:
            u = random_homogeneous(algebra, rng, 1)
            ts = [0]
        else:
            u = _random_quasi_primary(algebra, rng, k)
            ts = list(range(-3, 2 * k + 1))
        u_terms = integral_terms(u)
        for t in ts:
            coeff = 2 * (Fraction(k) - Fraction(t, 2) - 1) if k != 1 else 0
            for wt in w_terms:
                diff = l1(act_terms(algebra, u_terms, t, wt))
                add_terms(diff, act_terms(algebra, u_terms, t, l1(wt)), -1)
                if coeff:
                    add_terms(diff, act_terms(algebra, u_terms, t + 1, wt), -coeff)
                checked += 1
                if diff:
                    return _fail(name, checked, u=u, t=t, w=State(wt))
    return VerificationReport(name, True, checked)


def check_graded_shift(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """v_n maps weight m into weight m + wt v - n - 1."""
    name = "graded shift"
    rng = stream(seed, name)
    checked = 0
    for _ in range(trials):
        k = int(rng.integers(0, 5))
        v = random_homogeneous(algebra, rng, k)
        n = int(rng.integers(-3, k + 2))
        m = int(rng.integers(0, bound + 1))
        for mono in basis(algebra, m):
            out = vertex_mode(algebra, v, n, State.from_monomial(mono))
            checked += 1
            if any(x != m + k - n - 1 for x in out.weights()):
                return _fail(name, checked, v=v, n=n, w=mono)
    return VerificationReport(name, True, checked)


def check_translation_commutant(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Homogeneous v has [L(-1), v_n] = 0 for all n exactly when v is in V_0."""
    name = "L(-1)-commuting modes"
    checked = 0
    lm1 = lambda x: virasoro(algebra, -1, x)  # noqa: E731
    ws = [w for _, w in states_up_to(algebra, bound)]
    for k, v in states_up_to(algebra, min(bound, 4)):
        found = False
        for n in range(-k - 2, k + 2):
            op = lambda x: vertex_mode(algebra, v, n, x)  # noqa: E731
            if any(_commutator(algebra, lm1, op, w) for w in ws):
                found = True
                break
        checked += 1
        if found != (k != 0):
            return _fail(name, checked, v=v)
    return VerificationReport(name, True, checked)


def check_virasoro_central(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """[L(2), L(-2)]|0> = (c/2)|0> with c = rank; omega is quasi-primary of weight 2."""
    name = "virasoro central term"
    vac = State.vacuum()
    lhs = virasoro(algebra, 2, virasoro(algebra, -2, vac)) - virasoro(algebra, -2, virasoro(algebra, 2, vac))
    om = algebra.omega
    ok = lhs == (algebra.central_charge / 2) * vac
    ok = ok and virasoro(algebra, 1, om).is_zero() and virasoro(algebra, 0, om) == 2 * om
    return VerificationReport(name, ok, 3, None if ok else {"lhs": repr(lhs)})


# ---------------------------------------------------------------------------
# graded linear algebra and the structure theorems


def check_direct_sum(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """V_n = ker L(1) (+) im L(-1) for n != 1: dimensions add up and the sum is direct."""
    name = "quasi-primary direct sum"
    for n in range(bound + 1):
        if n == 1:
            continue
        ker = kernel_basis(operator_matrix(algebra, lambda x: virasoro(algebra, 1, x), n, n - 1))
        if n == 0:
            img_cols: list[list[Fraction]] = []
        else:
            L = operator_matrix(algebra, lambda x: virasoro(algebra, -1, x), n - 1, n)
            img_cols = exact.transpose(L.rows()) if L.source_basis else []
        img_rank = exact.rank(img_cols) if img_cols else 0
        total = exact.rank(ker + img_cols) if (ker or img_cols) else 0
        d = dim(algebra, n)
        if len(ker) + img_rank != d or total != d:
            return VerificationReport(
                name, False, n, {"n": n, "dim ker": len(ker), "dim im": img_rank, "dim V_n": d, "rank of sum": total}
            )
    return VerificationReport(name, True, bound)


def check_semi_primary_roundtrip(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    name = "semi-primary decomposition"
    rng = stream(seed, name)
    for t in range(trials):
        v = random_state(algebra, rng, range(0, min(bound, 6) + 1))
        parts = semi_primary_decompose(algebra, v)
        if recompose(algebra, parts) != v:
            return _fail(name, t + 1, v=v, parts=parts)
        for u in parts:
            if not is_quasi_primary(algebra, u - u.component(1)):
                return _fail(name, t + 1, v=v, part=u)
        for k in v.weights():
            c = v.component(k)
            if k == 1:
                continue
            q, u = lemma33_decompose(algebra, c)
            if lemma33_decompose(algebra, q + virasoro(algebra, -1, u)) != (q, u):
                return _fail(name, t + 1, v=c)
    return VerificationReport(name, True, trials)


def _zero_mode_vanishes(algebra: BosonAlgebra, v: State, bound: int, momentum=None) -> bool:
    for m in range(bound + 1):
        for mono in basis(algebra, m):
            w = State.from_monomial(mono) if momentum is None else ModuleState(momentum, {mono: 1})
            if zero_mode(algebra, v, w):
                return False
    return True


def check_radical_roundtrip(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """v = j1 + (L(0)+L(-1))w is a member, decomposes back exactly, and o(v) = 0."""
    name = "radical round trip"
    rng = stream(seed, name)
    v1 = basis(algebra, 1)
    for t in range(trials):
        j1 = State({m: random_scalar(rng) for m in v1 if rng.random() < 0.7})
        w = random_state(algebra, rng, range(1, min(bound, 5)))
        v = j1 + l0_plus_l_minus_one(algebra, w)
        cert = radical_member(algebra, v, bound)
        if not cert.member or cert.j1 + l0_plus_l_minus_one(algebra, cert.w) != v:
            return _fail(name, t + 1, v=v, certificate=cert)
        dj, dw = radical_decompose(algebra, v)
        if dj + l0_plus_l_minus_one(algebra, dw) != v or dj.weights() not in ([], [1]):
            return _fail(name, t + 1, v=v, j1=dj, w=dw)
        if (dj, dw) != (cert.j1, cert.w):
            return _fail(name, t + 1, v=v, solve=(cert.j1, cert.w), induction=(dj, dw))
        if not _zero_mode_vanishes(algebra, v, bound):
            return _fail(name, t + 1, v=v)
        # O_infinity is contained in J
        if oinfinity_member(algebra, v - j1, bound).member is not True:
            return _fail(name, t + 1, v=v - j1)
    return VerificationReport(name, True, trials)


def check_radical_witnesses(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Random non-members get a nonzero zero-mode witness at weight <= bound."""
    name = "radical non-member witnesses"
    rng = stream(seed, name)
    found = 0
    attempts = 0
    while found < trials:
        attempts += 1
        v = random_state(algebra, rng, range(0, min(bound, 5)))
        cert = radical_member(algebra, v, bound)
        if cert.member:
            continue
        found += 1
        if cert.witness is None:
            return _fail(name, found, v=v, note=cert.note)
        m, u, ou = cert.witness
        if m > bound or zero_mode(algebra, v, u) != ou or not ou:
            return _fail(name, found, v=v, witness=cert.witness)
    return VerificationReport(name, True, trials, details={"attempts": attempts})


def check_degree_consistency(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Structural degree = mode-scan degree, the nonzero nonnegative modes are
    exactly [deg, wt], and deg L(-1)^k v = deg v + k for k <= 3."""
    name = "degree consistency"
    rng = stream(seed, name)
    for t in range(trials):
        k = int(rng.integers(1, min(bound, 6)))
        v = random_homogeneous(algebra, rng, k)
        d = degree(algebra, v, bound).degree
        if not 0 <= d <= k or d != degree_witness(algebra, v, bound):
            return _fail(name, t + 1, v=v, degree=d)
        nonzero = [n for n in range(k + 1) if mode_witness(algebra, v, n, bound) is not None]
        if nonzero != list(range(d, k + 1)):
            return _fail(name, t + 1, v=v, degree=d, nonzero_modes=nonzero)
        if (d >= 1 and not filtration_member(algebra, v, d)) or filtration_member(algebra, v, d + 1):
            return _fail(name, t + 1, v=v, degree=d)
        for j in range(1, 4):
            lv = l_minus_one_power(algebra, v, j)
            if degree(algebra, lv, bound).degree != d + j:
                return _fail(name, t + 1, v=v, k=j)
    return VerificationReport(name, True, trials)


def _flattened_mode_columns(algebra: BosonAlgebra, states: list[State], shift: Callable[[int], int], bound: int):
    cols = []
    for s in states:
        n = shift(s.weight)
        col: list[Fraction] = []
        for m in range(bound + 1):
            for mono in basis(algebra, m):
                out = vertex_mode(algebra, s, n, State.from_monomial(mono))
                col.extend(out.coordinates(basis(algebra, m + s.weight - n - 1)))
        cols.append(col)
    return cols


def check_vanishing_theorems(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Exact kernel computations on pieces <= bound, for weights 1..4:

    * v homogeneous with v_{wt v} = 0 forces v = 0;
    * semi-primary v with o(v) = 0 lies in V_1;
    * quasi-primary v of weight >= 2 with v_0 = 0 is zero.
    """
    name = "vanishing theorems"
    top = min(4, bound)
    for k in range(1, top + 1):
        monos = [State.from_monomial(m) for m in basis(algebra, k)]
        cols = _flattened_mode_columns(algebra, monos, lambda wt: wt, bound)
        ker = exact.kernel(exact.transpose(cols), ncols=len(cols))
        if ker:
            return VerificationReport(name, False, k, {"statement": "v_wt v = 0", "weight": k, "kernel_dim": len(ker)})
    # semi-primary space: V_0, V_1 and ker L(1) on V_k
    semi: list[State] = [State.vacuum()] + [State.from_monomial(m) for m in basis(algebra, 1)]
    for k in range(2, top + 1):
        M = operator_matrix(algebra, lambda x: virasoro(algebra, 1, x), k, k - 1)
        qs = [State.from_coordinates(M.source_basis, c) for c in kernel_basis(M)]
        semi += qs
        cols = _flattened_mode_columns(algebra, qs, lambda wt: 0, bound)
        if qs and exact.kernel(exact.transpose(cols), ncols=len(cols)):
            return VerificationReport(name, False, k, {"statement": "quasi-primary with v_0 = 0", "weight": k})
    cols = _flattened_mode_columns(algebra, semi, lambda wt: wt - 1, bound)
    for vec in exact.kernel(exact.transpose(cols), ncols=len(cols)):
        s = State()
        for c, st in zip(vec, semi):
            s = s + c * st
        if s.weights() != [1]:
            return VerificationReport(name, False, top, {"statement": "semi-primary radical in V_1", "v": repr(s)})
    return VerificationReport(name, True, 3 * top)


def check_filtration(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Nesting of V^d and V^d living in weights >= d."""
    name = "filtration nesting"
    rng = stream(seed, name)
    for t in range(trials):
        v = random_state(algebra, rng, range(1, min(bound, 6)))
        for d in range(2, v.top_weight + 2):
            if filtration_member(algebra, v, d) and not filtration_member(algebra, v, d - 1):
                return _fail(name, t + 1, v=v, d=d)
            if filtration_member(algebra, v, d) and min(v.weights()) < d:
                return _fail(name, t + 1, v=v, d=d)
    return VerificationReport(name, True, trials)


def check_non_graded_radical(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Some members of J(V) have homogeneous components outside J(V)."""
    name = "radical is not graded"
    w = State.from_factors([(1, 1), (1, 1)])
    v = l0_plus_l_minus_one(algebra, w)
    member = radical_member(algebra, v, bound).member
    comps = [radical_member(algebra, v.component(k), bound).member for k in v.weights()]
    ok = member and not all(comps)
    return VerificationReport(name, ok, 1 + len(comps), None if ok else {"v": repr(v)})


def check_canonical_form(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    name = "canonical form on V_1"
    M = canonical_form_matrix(algebra)
    ok = M == [list(r) for r in algebra.gram]
    return VerificationReport(name, ok, algebra.rank**2, None if ok else {"matrix": repr(M)})


def check_commutant(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Commutant of one boson in a rank-2 orthonormal algebra has dims p(n), and
    dim V_n factors as a convolution."""
    name = "commutant factorization"
    alg2 = make_algebra(2)
    hp = [[1, 0]]
    dims = [len(commutant_basis(alg2, hp, n)) for n in range(bound + 1)]
    if dims != [colored_partition_count(n, 1) for n in range(bound + 1)]:
        return VerificationReport(name, False, bound + 1, {"commutant_dims": dims})
    rep = tensor_factor_dim_check(alg2, hp, bound)
    if not rep:
        return VerificationReport(name, False, bound + 1, rep.counterexample)
    full = tensor_factor_dim_check(algebra, [[int(i == j) for j in range(algebra.rank)] for i in range(algebra.rank)], min(bound, 4))
    return VerificationReport(name, full.passed, 2 * (bound + 1), full.counterexample, {"commutant_dims": dims})


def check_oinfinity(algebra: BosonAlgebra, seed: int, trials: int, bound: int) -> VerificationReport:
    """Each J_1 basis vector has a momentum module with nonzero vacuum zero mode;
    o((L(0)+L(-1))w) vanishes on module pieces for three momenta including 0."""
    name = "O_infinity separation"
    rng = stream(seed, name)
    for h in j1_basis(algebra, min(bound, 4)):
        lam = witness_momentum(algebra, h)
        if module_zero_mode_matrix(algebra, h, lam, 0).is_zero():
            return _fail(name, 0, h=h, momentum=lam)
        cert = oinfinity_member(algebra, h, bound)
        if cert.member or not cert.vacuum_eigenvalue:
            return _fail(name, 0, h=h)
    momenta = [tuple([Fraction(0)] * algebra.rank)]
    momenta.append(tuple(Fraction(1 + i) for i in range(algebra.rank)))
    momenta.append(tuple(Fraction(-1, 2) * (i % 2 * 2 - 1) for i in range(algebra.rank)))
    for t in range(trials):
        w = random_state(algebra, rng, range(1, 4))
        v = l0_plus_l_minus_one(algebra, w)
        for lam in momenta:
            if not _zero_mode_vanishes(algebra, v, bound, lam):
                return _fail(name, t + 1, w=w, momentum=lam)
    return VerificationReport(name, True, trials)


MODES_CHECKS: list[Check] = [
    check_heisenberg_bracket,
    check_creation_property,
    check_translation_covariance,
    check_commutator_identity,
    check_quasi_primary_commutators,
    check_graded_shift,
    check_translation_commutant,
    check_virasoro_central,
]

RADICAL_CHECKS: list[Check] = [
    check_direct_sum,
    check_semi_primary_roundtrip,
    check_radical_roundtrip,
    check_radical_witnesses,
    check_degree_consistency,
    check_vanishing_theorems,
    check_filtration,
    check_non_graded_radical,
    check_canonical_form,
    check_commutant,
    check_oinfinity,
]

SUITES: dict[str, list[Check]] = {
    "modes": MODES_CHECKS,
    "radical": RADICAL_CHECKS,
    "all": MODES_CHECKS + RADICAL_CHECKS,
}


def run_suite(
    suite: str, algebra: BosonAlgebra, max_weight: int, seed: int, trials: int = 20
) -> list[VerificationReport]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return [check(algebra, seed, trials, max_weight) for check in SUITES[suite]]
