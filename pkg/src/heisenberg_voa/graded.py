"""Exact matrices of operators between graded pieces, and the splittings
V_n = ker L(1) + im L(-1) (n != 1) and v = sum_n L(-1)^n u^n with every u^n
semi-primary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import exact
from .fock import BosonAlgebra, ModuleState, Monomial, State, basis
from .modes import l_minus_one_power, virasoro


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of an operator from the weight `source_weight` piece to `target_weight`.

    Columns index the source basis and rows the target basis, both in
    canonical monomial order.
    """

    source_weight: int
    target_weight: int
    entries: tuple[tuple[Fraction, ...], ...]
    source_basis: tuple[Monomial, ...]
    target_basis: tuple[Monomial, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.target_basis), len(self.source_basis))

    def rows(self) -> exact.Matrix:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return exact.is_zero_matrix(self.rows())

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if other.target_weight != self.source_weight:
            raise GradingError(
                f"cannot compose: weight {other.target_weight} output into weight {self.source_weight} input"
            )
        if self.source_basis:
            prod = exact.matmul(self.rows(), other.rows())
        else:
            prod = exact.zeros(len(self.target_basis), len(other.source_basis))
        return GradedMatrix(
            other.source_weight,
            self.target_weight,
            tuple(map(tuple, prod)),
            other.source_basis,
            self.target_basis,
        )

    def apply(self, coords: Sequence[Fraction]) -> list[Fraction]:
        if len(coords) != len(self.source_basis):
            raise ValueError("dimension mismatch")
        if not self.source_basis:
            return [Fraction(0)] * len(self.target_basis)
        return exact.matvec(self.rows(), coords)


def operator_matrix(
    algebra: BosonAlgebra,
    op: Callable[[State], State],
    source_weight: int,
    target_weight: int,
    momentum: Optional[Sequence] = None,
) -> GradedMatrix:
    """Matrix of `op` restricted to one graded piece.

    With `momentum` given the operator is evaluated on the momentum Fock
    module M(1, momentum) instead of M(1); the monomial basis is the same.
    """
    src = tuple(basis(algebra, source_weight))
    tgt = tuple(basis(algebra, target_weight))
    index = {m: r for r, m in enumerate(tgt)}
    cols = []
    for mono in src:
        if momentum is None:
            w = State.from_monomial(mono)
        else:
            w = ModuleState.from_monomial(mono, 1, momentum)
        image = op(w)
        col = [Fraction(0)] * len(tgt)
        for x, c in image.items():
            r = index.get(x)
            if r is None:
                raise GradingError(
                    f"operator maps {mono!r} (weight {source_weight}) to {x!r} of weight "
                    f"{x.weight}, outside target weight {target_weight}"
                )
            col[r] = c
        cols.append(col)
    rows = exact.transpose(cols) if cols else [[] for _ in tgt]
    return GradedMatrix(source_weight, target_weight, tuple(map(tuple, rows)), src, tgt)


def kernel_basis(M: GradedMatrix) -> list[list[Fraction]]:
    return exact.kernel(M.rows(), ncols=len(M.source_basis))


def solve(M: GradedMatrix, target: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Some preimage of `target` under M, or None if there is none."""
    if len(target) != len(M.target_basis):
        raise ValueError(
            f"dimension mismatch: target has {len(target)} entries, matrix has {len(M.target_basis)} rows"
        )
    return exact.solve(M.rows(), list(target), ncols=len(M.source_basis))


def kernel_states(M: GradedMatrix) -> list[State]:
    return [State.from_coordinates(M.source_basis, v) for v in kernel_basis(M)]


# ---------------------------------------------------------------------------
# quasi-primary splitting


def is_quasi_primary(algebra: BosonAlgebra, v: State) -> bool:
    return virasoro(algebra, 1, v).is_zero()


def is_semi_primary(algebra: BosonAlgebra, v: State) -> bool:
    return all(k == 1 or is_quasi_primary(algebra, v.component(k)) for k in v.weights())


def lemma33_decompose(algebra: BosonAlgebra, v: State) -> tuple[State, State]:
    """Split a weight-n state (n != 1) as q + L(-1)u with L(1)q = 0.

    u has weight n-1.  The pair is unique; it is found by solving
    L(1)L(-1)u = L(1)v on the weight n-1 piece, which is invertible there.
    """
    if v.is_zero():
        return State(), State()
    if not v.is_homogeneous():
        raise ValueError("lemma33_decompose needs a homogeneous state")
    n = v.weight
    if n == 1:
        raise ValueError("no quasi-primary split in weight n = 1")
    if n == 0:
        return v, State()
    A = operator_matrix(algebra, lambda x: virasoro(algebra, 1, virasoro(algebra, -1, x)), n - 1, n - 1)
    rhs = virasoro(algebra, 1, v).coordinates(A.target_basis)
    coords = solve(A, rhs)
    if coords is None:  # pragma: no cover - excluded by the direct-sum property
        raise ArithmeticError(f"L(1)L(-1) is not invertible on weight {n - 1}")
    u = State.from_coordinates(A.source_basis, coords)
    q = v - virasoro(algebra, -1, u)
    return q, u


def _split_homogeneous(algebra: BosonAlgebra, v: State) -> list[State]:
    k = v.weight
    parts: list[State] = []
    current = v
    steps = 0
    while True:
        if current.is_zero():
            break
        wt = current.weight
        if wt <= 1:
            parts.append(current)
            break
        q, u = lemma33_decompose(algebra, current)
        parts.append(q)
        current = u
        steps += 1
        assert steps <= k, "semi-primary splitting exceeded its weight bound"
    return parts


def semi_primary_decompose(algebra: BosonAlgebra, v: State) -> list[State]:
    """[u^0, ..., u^m] with v = sum_n L(-1)^n u^n and each u^n semi-primary.

    The last entry is nonzero unless v = 0, in which case the list is empty.
    """
    total: list[State] = []
    for k in v.weights():
        parts = _split_homogeneous(algebra, v.component(k))
        while len(total) < len(parts):
            total.append(State())
        for i, p in enumerate(parts):
            total[i] = total[i] + p
    while total and total[-1].is_zero():
        total.pop()
    return total


def recompose(algebra: BosonAlgebra, parts: Sequence[State]) -> State:
    out = State()
    for n, u in enumerate(parts):
        out = out + l_minus_one_power(algebra, u, n)
    return out
