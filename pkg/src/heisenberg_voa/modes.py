"""Vertex-operator modes on M(1) and on its momentum modules.

Every v_n is reduced to Heisenberg modes by peeling the leading creation
factor a(-k) off the monomial v = a(-k)u with the iterate formula

    (a_{-k} u)_n = sum_{i>=0} C(k+i-1, i) [ a_{-k-i} u_{n+i} - (-1)^k u_{n-k-i} a_i ],

and the vacuum case 1_n = delta_{n,-1}.  Both sums are finite on a state of
bounded weight.  Results on pairs of monomials are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm
from typing import Callable, Optional, Sequence

from .fock import BosonAlgebra, ModuleState, Monomial, State, basis
from .report import VerificationReport

Terms = dict  # Monomial -> int | Fraction, read-only once returned from a cache


def _exact(c):
    """Integral Fractions become ints so cached tables stay in fast int arithmetic."""
    return c.numerator if type(c) is Fraction and c.denominator == 1 else c


def binom(m: int, t: int) -> int:
    """Generalized binomial coefficient m choose t for any integer m, t >= 0."""
    if t < 0:
        return 0
    num = 1
    for j in range(t):
        num *= m - j
    return num // factorial(t)


def add_terms(out: dict, terms: Terms, scale) -> None:
    for m, c in terms.items():
        s = out.get(m, 0) + scale * c
        if s:
            out[m] = s
        else:
            out.pop(m, None)


@lru_cache(maxsize=None)
def _boson_on_monomial(
    algebra: BosonAlgebra, i: int, m: int, w: Monomial, momentum: Optional[tuple]
) -> Terms:
    if m < 0:
        return {w.insert(i, -m): 1}
    if m == 0:
        if momentum is None:
            return {}
        c = algebra.pairing(i, momentum)
        return {w: _exact(c)} if c else {}
    out: dict = {}
    row = algebra.gram[i - 1]
    for pos, (j, lev) in enumerate(w):
        if lev == m and row[j - 1]:
            r = w.remove_at(pos)
            out[r] = out.get(r, 0) + m * row[j - 1]
    return {k: _exact(v) for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _mode_on_monomial(
    algebra: BosonAlgebra, v: Monomial, n: int, w: Monomial, momentum: Optional[tuple]
) -> Terms:
    if not v:
        return {w: 1} if n == -1 else {}
    a, k = v[0]
    u = Monomial(v[1:])
    wt_w = w.weight
    out: dict = {}
    # a_{-k-i} u_{n+i} w, nonzero only while u_{n+i} w has weight >= 0
    for i in range(0, wt_w + u.weight - n):
        inner = _mode_on_monomial(algebra, u, n + i, w, momentum)
        if not inner:
            continue
        coeff = comb(k + i - 1, i)
        for x, c in inner.items():
            add_terms(out, _boson_on_monomial(algebra, a, -k - i, x, momentum), coeff * c)
    # -(-1)^k u_{n-k-i} a_i w, with a_i w = 0 once i > wt w
    sign = -1 if k % 2 == 0 else 1
    for i in range(0, wt_w + 1):
        lowered = _boson_on_monomial(algebra, a, i, w, momentum)
        if not lowered:
            continue
        coeff = sign * comb(k + i - 1, i)
        for x, c in lowered.items():
            add_terms(out, _mode_on_monomial(algebra, u, n - k - i, x, momentum), coeff * c)
    return {x: _exact(c) for x, c in out.items()}


def _momentum_of(w: State) -> Optional[tuple]:
    if isinstance(w, ModuleState):
        return w.momentum if any(w.momentum) else None
    return None


def _wrap(w: State, terms: dict) -> State:
    if isinstance(w, ModuleState):
        return ModuleState(w.momentum, terms)
    return State(terms)


def boson_mode(algebra: BosonAlgebra, i: int, m: int, w: State) -> State:
    """Action of h_i(m) = h_i (x) t^m on a state or module state."""
    if not 1 <= i <= algebra.rank:
        raise ValueError(f"boson index {i} outside 1..{algebra.rank}")
    momentum = _momentum_of(w)
    out: dict = {}
    for x, c in w.items():
        add_terms(out, _boson_on_monomial(algebra, i, m, x, momentum), c)
    return _wrap(w, out)


def vector_mode(algebra: BosonAlgebra, coords, m: int, w: State) -> State:
    """Mode m of the boson sum_i coords[i] h_i."""
    out = _wrap(w, {})
    for i, c in enumerate(coords):
        if c:
            out = out + Fraction(c) * boson_mode(algebra, i + 1, m, w)
    return out


def vertex_mode(algebra: BosonAlgebra, v: State, n: int, w: State) -> State:
    """v_n w, exact and bilinear in v and w."""
    if isinstance(v, ModuleState):
        raise TypeError("the vertex operator argument must be an element of M(1)")
    momentum = _momentum_of(w)
    out: dict = {}
    for vm, vc in v.items():
        for wm, wc in w.items():
            terms = _mode_on_monomial(algebra, vm, n, wm, momentum)
            if terms:
                add_terms(out, terms, vc * wc)
    return _wrap(w, out)


def virasoro(algebra: BosonAlgebra, n: int, w: State) -> State:
    """L(n) w, computed as omega_{n+1} w."""
    return vertex_mode(algebra, algebra.omega, n + 1, w)


def l_minus_one_power(algebra: BosonAlgebra, v: State, k: int) -> State:
    for _ in range(k):
        v = virasoro(algebra, -1, v)
    return v


def _shifted_mode(algebra: BosonAlgebra, v: State, shift: int, w: State) -> State:
    out = _wrap(w, {})
    for k in v.weights():
        out = out + vertex_mode(algebra, v.component(k), k - shift, w)
    return out


def zero_mode(algebra: BosonAlgebra, v: State, w: State) -> State:
    """o(v) w: the sum over homogeneous components v^k of v^k_{k-1} w."""
    return _shifted_mode(algebra, v, 1, w)


def p_mode(algebra: BosonAlgebra, v: State, w: State) -> State:
    """p(v) w: the sum over homogeneous components v^k of v^k_{k-2} w."""
    return _shifted_mode(algebra, v, 2, w)


def mode_operator(algebra: BosonAlgebra, v: State, n: int) -> Callable[[State], State]:
    return lambda w: vertex_mode(algebra, v, n, w)


def zero_mode_operator(algebra: BosonAlgebra, v: State) -> Callable[[State], State]:
    return lambda w: zero_mode(algebra, v, w)


def virasoro_operator(algebra: BosonAlgebra, n: int) -> Callable[[State], State]:
    return lambda w: virasoro(algebra, n, w)


@dataclass(frozen=True)
class ConformalVector:
    omega: State
    central_charge: Fraction


def conformal_vector(algebra: BosonAlgebra) -> ConformalVector:
    return ConformalVector(algebra.omega, algebra.central_charge)


def states_up_to(algebra: BosonAlgebra, bound: int):
    """(weight, basis state) pairs for every basis monomial of weight <= bound."""
    for m in range(bound + 1):
        for mono in basis(algebra, m):
            yield m, State.from_monomial(mono)


def check_commutator(
    algebra: BosonAlgebra, a: State, b: State, m: int, n: int, test_weight_bound: int
) -> VerificationReport:
    """Check [a_m, b_n] = sum_t C(m,t) (a_t b)_{m+n-t} on all basis states up to a weight."""
    return check_commutator_grid(algebra, a, b, [m], [n], test_weight_bound)


def check_commutator_grid(
    algebra: BosonAlgebra,
    a: State,
    b: State,
    ms: Sequence[int],
    ns: Sequence[int],
    test_weight_bound: int,
) -> VerificationReport:
    """The commutator formula for every (m, n) in ms x ns.

    Images b_n w, a_m w and (a_t b)_s w are computed once per basis w and
    shared between pairs.  A counterexample reports both sides for a and b
    rescaled to integer coefficients.
    """
    if not (a.is_homogeneous() and b.is_homogeneous()):
        raise ValueError("check_commutator needs homogeneous a and b")
    name = "commutator" if len(ms) * len(ns) > 1 else f"commutator m={ms[0]} n={ns[0]}"
    if a.is_zero() or b.is_zero():
        return VerificationReport(name, True, 0)
    # the identity is bilinear in (a, b): clear denominators so the sweep runs in ints
    a_terms = integral_terms(a)
    b_terms = integral_terms(b)
    t_max = a.weight + b.weight - 1
    products = [act_terms(algebra, a_terms, t, b_terms) for t in range(t_max + 1)]
    checked = 0
    for _, w in states_up_to(algebra, test_weight_bound):
        w_terms = {next(iter(w)): 1}
        b_w = {n: act_terms(algebra, b_terms, n, w_terms) for n in ns}
        a_w = {m: act_terms(algebra, a_terms, m, w_terms) for m in ms}
        prod_w: dict = {}
        for m in ms:
            for n in ns:
                diff = act_terms(algebra, a_terms, m, b_w[n])
                add_terms(diff, act_terms(algebra, b_terms, n, a_w[m]), -1)
                for t, atb in enumerate(products):
                    c = binom(m, t)
                    if c and atb:
                        key = (t, m + n - t)
                        if key not in prod_w:
                            prod_w[key] = act_terms(algebra, atb, m + n - t, w_terms)
                        add_terms(diff, prod_w[key], -c)
                checked += 1
                if diff:
                    lhs = State(act_terms(algebra, a_terms, m, b_w[n])) - State(act_terms(algebra, b_terms, n, a_w[m]))
                    return VerificationReport(
                        name, False, checked, {"m": m, "n": n, "w": repr(w), "lhs": repr(lhs), "rhs": repr(lhs - State(diff))}
                    )
    return VerificationReport(name, True, checked)


def integral_terms(v: State) -> dict:
    """Coefficients of v times the lcm of their denominators, as a raw dict."""
    scale = 1
    for _, c in v.items():
        scale = lcm(scale, c.denominator)
    return {m: _exact(c * scale) for m, c in v.items()}


def act_terms(algebra: BosonAlgebra, v_terms: dict, n: int, w_terms: dict) -> dict:
    """v_n w on raw coefficient dicts over M(1)."""
    out: dict = {}
    for vm, vc in v_terms.items():
        for wm, wc in w_terms.items():
            terms = _mode_on_monomial(algebra, vm, n, wm, None)
            if terms:
                add_terms(out, terms, vc * wc)
    return out
