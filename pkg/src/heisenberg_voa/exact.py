"""Dense exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Elimination is
plain Gauss-Jordan with the first nonzero entry (in row order) taken as pivot,
so every output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} columns vs {len(b)} rows")
    ncols = len(b[0]) if b else 0
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                oi = out[i]
                for j in range(ncols):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def matvec(a: Matrix, x: Sequence[Fraction]) -> Vector:
    if a and len(a[0]) != len(x):
        raise ValueError(f"dimension mismatch: {len(a[0])} columns vs vector of length {len(x)}")
    return [sum((r * c for r, c in zip(row, x) if r and c), Fraction(0)) for row in a]


def transpose(a: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of a copy of `a` and its pivot columns."""
    m = [row[:] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(nrows):
            f = m[i][c]
            if i != r and f:
                row = m[i]
                for j in range(c, ncols):
                    if pivot_row[j]:
                        row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel(a: Matrix, ncols: Optional[int] = None) -> list[Vector]:
    """Basis of the right null space, one vector per free column.

    `ncols` is needed only when `a` has no rows.
    """
    n = len(a[0]) if a else (ncols or 0)
    if not a:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, pc in zip(r, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence[Fraction], ncols: Optional[int] = None) -> Optional[Vector]:
    """One solution of ``a x = b`` (free variables set to zero), or None."""
    n = len(a[0]) if a else (ncols or 0)
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} rows vs right-hand side of length {len(b)}")
    if not a:
        return [Fraction(0)] * n
    aug = [list(row) + [Fraction(x)] for row, x in zip(a, b)]
    r, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(r, pivots):
        x[pc] = row[n]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)
