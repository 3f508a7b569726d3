"""Free-boson Fock space M(1) with exact rational coefficients.

A rank-r algebra is fixed by a symmetric nondegenerate Gram matrix g on the
bosons h_1, ..., h_r.  States are finite linear combinations of monomials
h_{i1}(-n1) ... h_{ik}(-nk)|0>, and the weight-n piece has a basis indexed by
r-colored partitions of n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from . import exact


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class BosonAlgebra:
    """Rank and Gram matrix of the abelian Lie algebra H.

    Build instances with :func:`make_algebra`, which validates the form.
    """

    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    gram_inverse: tuple[tuple[Fraction, ...], ...] = field(compare=False, repr=False)

    def __hash__(self) -> int:
        # algebras key every mode cache; hashing the Fraction gram each time dominates
        try:
            return self.__dict__["_hash"]
        except KeyError:
            value = hash((self.rank, self.gram))
            self.__dict__["_hash"] = value
            return value

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        """<x, y> for coordinate vectors in the h_1, ..., h_r basis."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * self.gram[i][j] * yj
        return total

    def pairing(self, i: int, momentum: Sequence[Fraction]) -> Fraction:
        """<h_i, lambda> for a 1-based boson index."""
        row = self.gram[i - 1]
        return sum((row[j] * lam for j, lam in enumerate(momentum) if lam), Fraction(0))

    @cached_property
    def omega(self) -> "State":
        """Conformal vector 1/2 sum_{a,b} g^{ab} h_a(-1) h_b(-1)|0>."""
        terms: dict[Monomial, Fraction] = {}
        for a in range(self.rank):
            for b in range(self.rank):
                c = self.gram_inverse[a][b] / 2
                if c:
                    m = Monomial.of([(a + 1, 1), (b + 1, 1)])
                    terms[m] = terms.get(m, Fraction(0)) + c
        return State(terms)

    @property
    def central_charge(self) -> Fraction:
        return Fraction(self.rank)

    def describe(self) -> dict:
        return {"rank": self.rank, "gram": [[format_scalar(x) for x in row] for row in self.gram]}


def make_algebra(rank: int, gram: Sequence[Sequence] | None = None) -> BosonAlgebra:
    """Validate a Gram matrix and build the algebra (identity form by default)."""
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if gram is None:
        gram = exact.identity(rank)
    g = exact.to_matrix(gram)
    if len(g) != rank or any(len(row) != rank for row in g):
        raise ValueError(f"gram must be {rank}x{rank}")
    for i in range(rank):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise ValueError(f"gram is not symmetric: entry ({i + 1},{j + 1}) != ({j + 1},{i + 1})")
    try:
        ginv = exact.inverse(g)
    except ZeroDivisionError:
        raise DegenerateFormError("degenerate form") from None
    return BosonAlgebra(rank, tuple(map(tuple, g)), tuple(map(tuple, ginv)))


def format_scalar(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# monomials and the colored-partition basis


def _factor_key(f: tuple[int, int]) -> tuple[int, int]:
    return (-f[1], f[0])


class Monomial(tuple):
    """Sorted multiset of (boson_index, level) creation factors."""

    __slots__ = ()

    @classmethod
    def of(cls, factors: Iterable[tuple[int, int]]) -> "Monomial":
        fs = [(int(i), int(n)) for i, n in factors]
        for i, n in fs:
            if n < 1:
                raise ValueError(f"creation level must be positive, got {n}")
            if i < 1:
                raise ValueError(f"boson index must be positive, got {i}")
        return cls(sorted(fs, key=_factor_key))

    @property
    def weight(self) -> int:
        return sum(n for _, n in self)

    def sort_key(self) -> tuple:
        return tuple(_factor_key(f) for f in self)

    def insert(self, i: int, n: int) -> "Monomial":
        fs = list(self)
        fs.append((i, n))
        fs.sort(key=_factor_key)
        return Monomial(fs)

    def remove_at(self, pos: int) -> "Monomial":
        return Monomial(self[:pos] + self[pos + 1 :])

    def __repr__(self) -> str:
        return "".join(f"h{i}(-{n})" for i, n in self) + "|0>"


VACUUM = Monomial()


@lru_cache(maxsize=None)
def _basis(rank: int, n: int) -> tuple[Monomial, ...]:
    # part types in canonical order: (level desc, index asc)
    types = [(i, lev) for lev in range(n, 0, -1) for i in range(1, rank + 1)]
    out: list[Monomial] = []

    def rec(start: int, remaining: int, acc: list) -> None:
        if remaining == 0:
            out.append(Monomial(acc))
            return
        for t in range(start, len(types)):
            i, lev = types[t]
            if lev <= remaining:
                acc.append((i, lev))
                rec(t, remaining - lev, acc)
                acc.pop()

    rec(0, n, [])
    return tuple(out)


def basis(algebra: BosonAlgebra | int, n: int) -> list[Monomial]:
    """Monomials of weight n in canonical order."""
    rank = algebra if isinstance(algebra, int) else algebra.rank
    if n < 0:
        return []
    return list(_basis(rank, n))


@lru_cache(maxsize=None)
def colored_partition_count(n: int, colors: int) -> int:
    """Number of `colors`-colored partitions of n (dimension of the weight-n piece)."""
    if n < 0:
        return 0
    if colors == 0:
        return int(n == 0)
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for _ in range(colors):
            for s in range(part, n + 1):
                counts[s] += counts[s - part]
    return counts[n]


def dim(algebra: BosonAlgebra | int, n: int) -> int:
    rank = algebra if isinstance(algebra, int) else algebra.rank
    return colored_partition_count(n, rank)


# ---------------------------------------------------------------------------
# states


def _clean(terms: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    return {m: c if type(c) is Fraction else Fraction(c) for m, c in terms.items() if c}


class State:
    """Finite sparse linear combination of monomials; treated as immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self._terms = _clean(terms) if terms else {}
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def vacuum(cls) -> "State":
        return State({VACUUM: Fraction(1)})

    @classmethod
    def zero(cls) -> "State":
        return State()

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> "State":
        return State({m: Fraction(coeff)})

    @classmethod
    def from_factors(cls, factors: Iterable[tuple[int, int]], coeff=1) -> "State":
        return State({Monomial.of(factors): Fraction(coeff)})

    @classmethod
    def from_coordinates(cls, monomials: Sequence[Monomial], coords: Sequence[Fraction]) -> "State":
        return State(dict(zip(monomials, coords)))

    def _new(self, terms: dict) -> "State":
        return State(terms)

    # container protocol ---------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic -------------------------------------------------------------

    def _check_compatible(self, other: "State") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other: "State") -> "State":
        self._check_compatible(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._new(out)

    def __neg__(self) -> "State":
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "State") -> "State":
        return self + (-other)

    def __mul__(self, scalar) -> "State":
        if isinstance(scalar, State):
            return NotImplemented
        scalar = Fraction(scalar)
        if not scalar:
            return self._new({})
        return self._new({m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, State):
            return type(self) is type(other) and self._key() == other._key()
        if other == 0:
            return not self._terms
        return NotImplemented

    def _key(self):
        return frozenset(self._terms.items())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # grading ------------------------------------------------------------------

    def weights(self) -> list[int]:
        return sorted({m.weight for m in self._terms})

    @property
    def top_weight(self) -> int:
        """Largest weight present; -1 for the zero state."""
        return max((m.weight for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> int:
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("weight is only defined for nonzero homogeneous states")
        return ws[0]

    def component(self, n: int) -> "State":
        return self._new({m: c for m, c in self._terms.items() if m.weight == n})

    def coordinates(self, monomials: Sequence[Monomial]) -> list[Fraction]:
        return [self._terms.get(m, Fraction(0)) for m in monomials]

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: (mc[0].weight, mc[0].sort_key()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{m!r}" for m, c in self.sorted_items())


class ModuleState(State):
    """Element of the momentum-lambda Fock module M(1, lambda)."""

    __slots__ = ("momentum",)

    def __init__(self, momentum: Sequence, terms: Mapping[Monomial, Fraction] | None = None):
        super().__init__(terms)
        self.momentum = tuple(Fraction(x) for x in momentum)

    @classmethod
    def vacuum(cls, momentum: Sequence) -> "ModuleState":  # type: ignore[override]
        return ModuleState(momentum, {VACUUM: Fraction(1)})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1, momentum: Sequence = ()) -> "ModuleState":  # type: ignore[override]
        return ModuleState(momentum, {m: Fraction(coeff)})

    def _new(self, terms: dict) -> "ModuleState":
        return ModuleState(self.momentum, terms)

    def _check_compatible(self, other: State) -> None:
        super()._check_compatible(other)
        if other.momentum != self.momentum:  # type: ignore[attr-defined]
            raise ValueError("cannot combine module states with different momenta")

    def _key(self):
        return (self.momentum, frozenset(self._terms.items()))

    def __repr__(self) -> str:
        lam = ",".join(str(x) for x in self.momentum)
        return f"[lambda=({lam})] " + super().__repr__()


def canonicalize(state: State | Mapping[Sequence[tuple[int, int]], object]) -> State:
    """Canonical form: sorted factors, merged monomials, zero terms dropped."""
    if isinstance(state, State):
        items = state.items()
    else:
        items = state.items()
    out: dict[Monomial, Fraction] = {}
    for factors, c in items:
        m = factors if isinstance(factors, Monomial) else Monomial.of(factors)
        out[m] = out.get(m, Fraction(0)) + Fraction(c)
    if isinstance(state, ModuleState):
        return ModuleState(state.momentum, out)
    return State(out)


def graded_components(state: State) -> dict[int, State]:
    return {n: state.component(n) for n in state.weights()}


def sum_states(states: Iterable[State], like: State | None = None) -> State:
    out = like._new({}) if like is not None else State()
    for s in states:
        out = out + s
    return out


def boson_vector(algebra: BosonAlgebra, coords: Sequence, level: int = 1) -> State:
    """sum_i coords[i] h_i(-level)|0> for a vector of H."""
    return State({Monomial(((i + 1, level),)): Fraction(c) for i, c in enumerate(coords) if c})
