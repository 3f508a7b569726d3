"""Radical J(V) = J_1(V) + (L(0)+L(-1))V, the degree filtration, O_infinity
and the commutant of a Heisenberg sub-VOA, all for M(1).

Membership questions become finite linear systems: if v has top weight K, a
preimage w under L(0)+L(-1) can only live in weights 1..K-1, because L(-1) is
injective away from weight 0 and both L(0) and L(-1) kill the vacuum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import exact
from .fock import BosonAlgebra, ModuleState, Monomial, State, basis, colored_partition_count, dim
from .graded import GradedMatrix, operator_matrix, semi_primary_decompose
from .modes import (
    l_minus_one_power,
    vector_mode,
    vertex_mode,
    virasoro,
    zero_mode,
    zero_mode_operator,
)
from .report import VerificationReport


class NotInRadicalError(ValueError):
    pass


def default_bound(algebra: BosonAlgebra) -> int:
    """Truncation weight for oracle matrices and witness scans."""
    return 6 if algebra.rank <= 2 else 4


def l0_plus_l_minus_one(algebra: BosonAlgebra, x: State) -> State:
    return virasoro(algebra, 0, x) + virasoro(algebra, -1, x)


def _solve_blocks(
    target: State,
    blocks: Sequence[tuple[Sequence[Monomial], Callable[[State], State]]],
    row_weights: Sequence[int],
    algebra: BosonAlgebra,
) -> Optional[list[State]]:
    """Find states x_b (one per block, in the span of the block's basis) with
    sum_b op_b(x_b) = target.  Returns None if there is no solution."""
    rows = [m for k in row_weights for m in basis(algebra, k)]
    index = {m: r for r, m in enumerate(rows)}
    cols: list[list[Fraction]] = []
    for monos, op in blocks:
        for mono in monos:
            col = [Fraction(0)] * len(rows)
            for x, c in op(State.from_monomial(mono)).items():
                col[index[x]] = c
            cols.append(col)
    rhs = [Fraction(0)] * len(rows)
    for x, c in target.items():
        if x not in index:
            return None
        rhs[index[x]] = c
    matrix = exact.transpose(cols) if cols else [[] for _ in rows]
    sol = exact.solve(matrix, rhs, ncols=len(cols))
    if sol is None:
        return None
    out = []
    pos = 0
    for monos, _ in blocks:
        out.append(State.from_coordinates(monos, sol[pos : pos + len(monos)]))
        pos += len(monos)
    return out


# ---------------------------------------------------------------------------
# J_1 and the radical


def j1_basis(algebra: BosonAlgebra, bound: Optional[int] = None) -> list[State]:
    """Basis of the weight-one part of the radical, from zero-mode matrices up to `bound`."""
    bound = default_bound(algebra) if bound is None else bound
    v1 = basis(algebra, 1)
    cols = []
    for mono in v1:
        op = zero_mode_operator(algebra, State.from_monomial(mono))
        col: list[Fraction] = []
        for m in range(bound + 1):
            for row in operator_matrix(algebra, op, m, m).entries:
                col.extend(row)
        cols.append(col)
    ker = exact.kernel(exact.transpose(cols), ncols=len(v1))
    states = [State.from_coordinates(v1, k) for k in ker]
    # o(h) = h_0 vanishes on M(1), so J_1 is all of V_1
    assert len(states) == len(v1), "J_1(M(1)) must equal V_1"
    return states


@dataclass
class RadicalCertificate:
    member: bool
    j1: Optional[State] = None
    w: Optional[State] = None
    witness: Optional[tuple[int, State, State]] = None
    note: str = ""

    def to_dict(self, fmt: Callable[[State], str] = repr) -> dict:
        out: dict = {"member": self.member}
        if self.member:
            out["j1"] = fmt(self.j1)
            out["w"] = fmt(self.w)
        elif self.witness is not None:
            m, u, ou = self.witness
            out["witness"] = {"weight": m, "u": fmt(u), "o(v)u": fmt(ou)}
        if self.note:
            out["note"] = self.note
        return out


def zero_mode_witness(
    algebra: BosonAlgebra, v: State, bound: int
) -> Optional[tuple[int, State, State]]:
    """First (weight, basis u, o(v)u) with o(v)u != 0, scanning weights upward."""
    for m in range(bound + 1):
        for mono in basis(algebra, m):
            u = State.from_monomial(mono)
            ou = zero_mode(algebra, v, u)
            if ou:
                return m, u, ou
    return None


def radical_member(algebra: BosonAlgebra, v: State, bound: Optional[int] = None) -> RadicalCertificate:
    """Decide v in J(V) by solving v = j1 + (L(0)+L(-1))w exactly."""
    if v.is_zero():
        return RadicalCertificate(True, State(), State())
    K = v.top_weight
    blocks = [
        (basis(algebra, 1), lambda x: x),
        ([m for k in range(1, K) for m in basis(algebra, k)], lambda x: l0_plus_l_minus_one(algebra, x)),
    ]
    sol = _solve_blocks(v, blocks, range(0, max(K, 1) + 1), algebra)
    if sol is not None:
        return RadicalCertificate(True, sol[0], sol[1])
    bound = default_bound(algebra) if bound is None else bound
    witness = zero_mode_witness(algebra, v, bound)
    note = "" if witness else f"non-member by linear algebra; no truncated witness found up to {bound}"
    return RadicalCertificate(False, witness=witness, note=note)


def radical_decompose(algebra: BosonAlgebra, v: State) -> tuple[State, State]:
    """(j1, w) with v = j1 + (L(0)+L(-1))w, built by induction on the length
    of the semi-primary expansion v = sum_{n<=m} L(-1)^n u^n.

    Each step sets x = L(-1)^{m-1} u^m, y = v - L(-1)x and recurses on
    y - L(0)x, whose expansion is one term shorter.
    """
    parts = semi_primary_decompose(algebra, v)
    if not parts:
        return State(), State()
    m = len(parts) - 1
    if m == 0:
        if v.weights() != [1]:
            raise NotInRadicalError("input not in radical")
        return v, State()
    x = l_minus_one_power(algebra, parts[m], m - 1)
    y = v - virasoro(algebra, -1, x)
    rest = y - virasoro(algebra, 0, x)
    assert len(semi_primary_decompose(algebra, rest)) <= m
    j1, w = radical_decompose(algebra, rest)
    return j1, w + x


# ---------------------------------------------------------------------------
# degree and filtration


@dataclass
class DegreeResult:
    degree: int
    structural_witness: Optional[tuple[State, State]] = None
    mode_witness: Optional[tuple[int, State]] = None
    ignored_vacuum_part: bool = False
    component_degrees: dict[int, int] = field(default_factory=dict)

    def to_dict(self, fmt: Callable[[State], str] = repr) -> dict:
        out: dict = {"degree": self.degree}
        if self.structural_witness is not None:
            j, u = self.structural_witness
            out["structural_witness"] = {"j": fmt(j), "u": fmt(u)}
        if self.mode_witness is not None:
            n, u = self.mode_witness
            out["mode_witness"] = {"n": n, "u": fmt(u)}
        if self.ignored_vacuum_part:
            out["ignored_vacuum_part"] = True
        out["component_degrees"] = {str(k): d for k, d in sorted(self.component_degrees.items())}
        return out


def _filtration_solve(algebra: BosonAlgebra, v: State, d: int) -> Optional[tuple[State, State]]:
    """(j, u) with v = L(-1)^{d-1} j + L(-1)^d u, j in V_1, or None.

    L(-1) is homogeneous, so the system splits by weight: the weight-k part
    of v must come from u in V_{k-d}, plus j when k = d.  v has no weight-0
    part here.
    """
    j_total, u_total = State(), State()
    for k in v.weights():
        if k < d:
            return None
        blocks = []
        if k == d:
            blocks.append((basis(algebra, 1), lambda x: l_minus_one_power(algebra, x, d - 1)))
        if k - d >= 1:
            blocks.append((basis(algebra, k - d), lambda x: l_minus_one_power(algebra, x, d)))
        if not blocks:
            return None
        sol = _solve_blocks(v.component(k), blocks, [k], algebra)
        if sol is None:
            return None
        if k == d:
            j_total = j_total + sol[0]
        if k - d >= 1:
            u_total = u_total + sol[-1]
    return j_total, u_total


def filtration_member(algebra: BosonAlgebra, v: State, d: int) -> bool:
    """Is v in L(-1)^{d-1} J_1 + L(-1)^d V (equivalently deg v >= d)?"""
    if d < 1:
        raise ValueError("filtration_member needs d >= 1")
    if all(k == 0 for k in v.weights()):
        return False
    return _filtration_solve(algebra, v - v.component(0), d) is not None


def mode_witness(
    algebra: BosonAlgebra, v: State, n: int, bound: int
) -> Optional[State]:
    """First basis state u of weight <= bound with v_n u != 0."""
    for m in range(bound + 1):
        for mono in basis(algebra, m):
            u = State.from_monomial(mono)
            if vertex_mode(algebra, v, n, u):
                return u
    return None


def degree_witness(algebra: BosonAlgebra, v: State, witness_weight_bound: Optional[int] = None) -> int:
    """Least n >= 0 with v_n nonzero on some basis state of weight <= the bound."""
    if not v.is_homogeneous() or v.is_zero():
        raise ValueError("degree_witness needs a nonzero homogeneous state")
    if v.weight < 1:
        raise ValueError("degree_witness needs weight >= 1")
    bound = default_bound(algebra) if witness_weight_bound is None else witness_weight_bound
    for n in range(v.weight + 1):
        if mode_witness(algebra, v, n, bound) is not None:
            return n
    raise ArithmeticError("witness bound too small")


def degree(algebra: BosonAlgebra, v: State, witness_weight_bound: Optional[int] = None) -> DegreeResult:
    """Degree of v from the filtration linear algebra.

    A weight-0 part alongside higher components is ignored and flagged.
    """
    if all(k == 0 for k in v.weights()):
        return DegreeResult(-1)
    vac = v.component(0)
    v = v - vac
    comp_degrees = {}
    for k in v.weights():
        c = v.component(k)
        d = 0
        while d + 1 <= k and _filtration_solve(algebra, c, d + 1) is not None:
            d += 1
        comp_degrees[k] = d
    d = min(comp_degrees.values())
    structural = _filtration_solve(algebra, v, d) if d >= 1 else None
    bound = default_bound(algebra) if witness_weight_bound is None else witness_weight_bound
    k_min = min(k for k, dk in comp_degrees.items() if dk == d)
    u = mode_witness(algebra, v.component(k_min), d, bound)
    return DegreeResult(
        d,
        structural_witness=structural,
        mode_witness=(d, u) if u is not None else None,
        ignored_vacuum_part=not vac.is_zero(),
        component_degrees=comp_degrees,
    )


# ---------------------------------------------------------------------------
# modules and O_infinity


def module_zero_mode_matrix(
    algebra: BosonAlgebra, v: State, momentum: Sequence, module_weight: int
) -> GradedMatrix:
    """Matrix of o(v) on the weight-k piece of the momentum Fock module."""
    return operator_matrix(
        algebra, zero_mode_operator(algebra, v), module_weight, module_weight, momentum=momentum
    )


@dataclass
class OInfinityCertificate:
    member: bool
    w: Optional[State] = None
    momentum: Optional[tuple[Fraction, ...]] = None
    vacuum_eigenvalue: Optional[Fraction] = None
    radical: Optional[RadicalCertificate] = None

    def to_dict(self, fmt: Callable[[State], str] = repr) -> dict:
        out: dict = {"member": self.member}
        if self.member:
            out["w"] = fmt(self.w)
        if self.momentum is not None:
            out["momentum"] = [f"{x.numerator}/{x.denominator}" for x in self.momentum]
            ev = self.vacuum_eigenvalue
            out["vacuum_eigenvalue"] = f"{ev.numerator}/{ev.denominator}"
        if self.radical is not None and not self.member:
            out["radical"] = self.radical.to_dict(fmt)
        return out


def witness_momentum(algebra: BosonAlgebra, j1: State) -> tuple[Fraction, ...]:
    """A momentum lambda with <j1, lambda> != 0 for nonzero j1 in V_1."""
    c = [j1.coefficient(Monomial(((i + 1, 1),))) for i in range(algebra.rank)]
    if algebra.form(c, c):
        return tuple(c)
    gc = [sum((algebra.gram[i][j] * c[j] for j in range(algebra.rank)), Fraction(0)) for i in range(algebra.rank)]
    k = next(i for i, x in enumerate(gc) if x)
    lam = [Fraction(0)] * algebra.rank
    lam[k] = 1 / gc[k]
    return tuple(lam)


def oinfinity_member(algebra: BosonAlgebra, v: State, bound: Optional[int] = None) -> OInfinityCertificate:
    """Decide v in (L(0)+L(-1))V; for radical non-members of it, exhibit a
    momentum module whose vacuum sees o(v) as a nonzero scalar."""
    if v.is_zero():
        return OInfinityCertificate(True, w=State())
    K = v.top_weight
    blocks = [([m for k in range(1, K) for m in basis(algebra, k)], lambda x: l0_plus_l_minus_one(algebra, x))]
    sol = _solve_blocks(v, blocks, range(0, K + 1), algebra)
    if sol is not None:
        return OInfinityCertificate(True, w=sol[0])
    cert = radical_member(algebra, v, bound)
    if not cert.member:
        return OInfinityCertificate(False, radical=cert)
    lam = witness_momentum(algebra, cert.j1)
    image = zero_mode(algebra, v, ModuleState.vacuum(lam))
    ev = image.coefficient(Monomial())
    assert ev and len(image) == 1
    return OInfinityCertificate(False, momentum=lam, vacuum_eigenvalue=ev, radical=cert)


# ---------------------------------------------------------------------------
# canonical form and commutant


def canonical_form_matrix(algebra: BosonAlgebra) -> list[list[Fraction]]:
    """Matrix of <u, v> = u_1 v on V_1 in the h_i(-1)|0> basis."""
    v1 = [State.from_monomial(m) for m in basis(algebra, 1)]
    return [[vertex_mode(algebra, u, 1, v).coefficient(Monomial()) for v in v1] for u in v1]


def _check_subspace(algebra: BosonAlgebra, H_prime: Sequence[Sequence]) -> list[list[Fraction]]:
    vecs = [[Fraction(x) for x in h] for h in H_prime]
    if any(len(h) != algebra.rank for h in vecs):
        raise ValueError(f"boson-space vectors must have length {algebra.rank}")
    restricted = [[algebra.form(a, b) for b in vecs] for a in vecs]
    if exact.rank(restricted) != len(vecs):
        raise ValueError("degenerate form restricted to the chosen subspace")
    return vecs


def commutant_basis(algebra: BosonAlgebra, H_prime: Sequence[Sequence], n: int) -> list[State]:
    """Basis of {v in V_n : h_m v = 0 for h in H_prime, m >= 1}."""
    vecs = _check_subspace(algebra, H_prime)
    src = basis(algebra, n)
    rows: list[list[Fraction]] = []
    for h in vecs:
        for m in range(1, n + 1):
            M = operator_matrix(algebra, lambda x, h=h, m=m: vector_mode(algebra, h, m, x), n, n - m)
            rows.extend(M.rows())
    return [State.from_coordinates(src, k) for k in exact.kernel(rows, ncols=len(src))]


def tensor_factor_dim_check(algebra: BosonAlgebra, H_prime: Sequence[Sequence], N: int) -> VerificationReport:
    """dim V_n = sum_k dim M(1)'_k * dim W_{n-k} for n <= N."""
    _check_subspace(algebra, H_prime)
    r_prime = len(H_prime)
    w_dims = [len(commutant_basis(algebra, H_prime, n)) for n in range(N + 1)]
    for n in range(N + 1):
        conv = sum(colored_partition_count(k, r_prime) * w_dims[n - k] for k in range(n + 1))
        if conv != dim(algebra, n):
            return VerificationReport(
                "tensor factorization dims", False, n + 1,
                {"n": n, "dim V_n": dim(algebra, n), "convolution": conv},
                {"commutant_dims": w_dims},
            )
    return VerificationReport("tensor factorization dims", True, N + 1, details={"commutant_dims": w_dims})

