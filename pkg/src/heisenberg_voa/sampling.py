"""Deterministic random states for the randomized suites.

Generator contract: each named stream is ``numpy.random.default_rng([seed,
crc32(name)])`` (PCG64), so one 64-bit seed splits into independent,
reproducible streams per check.
"""

from __future__ import annotations

import zlib
from fractions import Fraction
from typing import Sequence

import numpy as np

from .fock import BosonAlgebra, State, basis

DEFAULT_SEED = 1


def stream(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(name.encode())])


def random_scalar(rng: np.random.Generator, max_num: int = 5, max_den: int = 4) -> Fraction:
    num = 0
    while num == 0:
        num = int(rng.integers(-max_num, max_num + 1))
    return Fraction(num, int(rng.integers(1, max_den + 1)))


def random_homogeneous(
    algebra: BosonAlgebra, rng: np.random.Generator, weight: int, max_terms: int = 3
) -> State:
    """Nonzero random combination of weight-`weight` basis monomials."""
    monos = basis(algebra, weight)
    k = int(rng.integers(1, min(max_terms, len(monos)) + 1))
    picks = rng.choice(len(monos), size=k, replace=False)
    return State({monos[int(p)]: random_scalar(rng) for p in sorted(picks)})


def random_state(
    algebra: BosonAlgebra,
    rng: np.random.Generator,
    weights: Sequence[int],
    max_terms: int = 3,
) -> State:
    """Random state supported on a nonempty random subset of `weights`."""
    weights = list(weights)
    while True:
        chosen = [w for w in weights if rng.random() < 0.5]
        if not chosen:
            chosen = [weights[int(rng.integers(len(weights)))]]
        out = State()
        for w in chosen:
            out = out + random_homogeneous(algebra, rng, w, max_terms)
        if out:
            return out
