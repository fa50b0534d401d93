"""Torus fixed points of punctual Hilbert and Quot schemes.

Fixed points of Hilb^m(C^n, 0) under the n-torus are monomial ideals of
colength m, stored here by their staircase (the standard monomials of R/I).
Fixed points of the punctual Quot scheme of O^r are direct sums
I_1 + ... + I_r of such ideals with total colength m.

Fixed points are counted by enumerating them, never by formula; the
generating-function identities in the test suite are real cross-checks.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadPunctualSeries, DimensionTooSmall, OutOfRange
from .partitions import NDPartition, integer_partitions, partition_series
from .series import Series, int_pow

__all__ = [
    "MonomialIdeal",
    "QuotFixedPoint",
    "partition_to_ideal",
    "ideal_to_partition",
    "enumerate_monomial_ideals",
    "enumerate_quot_fixed_points",
    "chi_punctual_quot",
    "punctual_quot_series",
    "chi_quot_series",
    "config_space_chi",
    "stratified_chi_quot",
    "stratified_series",
]

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    """A finite-colength monomial ideal of C[z_1..z_nvars], kept as its staircase."""

    nvars: int
    staircase: frozenset[Exponent]

    def __post_init__(self):
        if self.nvars < 1:
            raise DimensionTooSmall(f"need at least one variable, got {self.nvars}")
        st = frozenset(tuple(int(x) for x in e) for e in self.staircase)
        for e in st:
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {self.nvars} variables")
            for t in range(self.nvars):
                if e[t] and _step(e, t, -1) not in st:
                    raise ValueError(f"staircase is not downward closed at {e}")
        object.__setattr__(self, "staircase", st)

    @classmethod
    def unit(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, frozenset())

    @classmethod
    def from_generators(cls, nvars: int, generators) -> MonomialIdeal:
        """Ideal generated by monomials; must have finite colength."""
        gens = [tuple(g) for g in generators]
        pure = [0] * nvars
        for t in range(nvars):
            powers = [g[t] for g in gens if all(g[s] == 0 for s in range(nvars) if s != t)]
            if not powers:
                raise ValueError("ideal does not have finite colength")
            pure[t] = min(powers)
        st = frozenset(
            e
            for e in itertools.product(*(range(p) for p in pure))
            if not any(all(e[s] >= g[s] for s in range(nvars)) for g in gens)
        )
        return cls(nvars, st)

    @property
    def colength(self) -> int:
        return len(self.staircase)

    def contains(self, e: Exponent) -> bool:
        """Whether z^e lies in the ideal."""
        return tuple(e) not in self.staircase

    def minimal_generators(self) -> tuple[Exponent, ...]:
        # minimal exponents outside the staircase: every predecessor is inside
        if not self.staircase:
            return ((0,) * self.nvars,)
        cands = set()
        for e in self.staircase:
            for t in range(self.nvars):
                cands.add(_step(e, t, 1))
        for t in range(self.nvars):
            cands.add(tuple(1 if s == t else 0 for s in range(self.nvars)))
        gens = [
            c
            for c in cands
            if c not in self.staircase
            and all(c[t] == 0 or _step(c, t, -1) in self.staircase for t in range(self.nvars))
        ]
        return tuple(sorted(gens))

    def addable_boxes(self) -> list[Exponent]:
        if not self.staircase:
            return [(0,) * self.nvars]
        return [g for g in self.minimal_generators()]

    def sort_key(self):
        return (self.colength, tuple(sorted(self.staircase)))

    def to_list(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.staircase)]


def _step(e: Exponent, t: int, d: int) -> Exponent:
    return e[:t] + (e[t] + d,) + e[t + 1 :]


@dataclass(frozen=True)
class QuotFixedPoint:
    ideals: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if not self.ideals:
            raise ValueError("rank must be at least 1")
        if len({I.nvars for I in self.ideals}) != 1:
            raise ValueError("all summands must live in the same polynomial ring")

    @property
    def rank(self) -> int:
        return len(self.ideals)

    @property
    def total(self) -> int:
        return sum(I.colength for I in self.ideals)

    @property
    def nvars(self) -> int:
        return self.ideals[0].nvars


def partition_to_ideal(p: NDPartition) -> MonomialIdeal:
    return MonomialIdeal(p.n, p.boxes())


def ideal_to_partition(I: MonomialIdeal) -> NDPartition:
    if I.nvars < 2:
        raise DimensionTooSmall("partitions need at least two variables")
    return NDPartition.from_boxes(I.nvars, I.staircase)


@lru_cache(maxsize=None)
def _staircases(n: int, m: int) -> tuple[frozenset, ...]:
    # grow each staircase of size m-1 by one addable box; dedupe via a set
    if m == 0:
        return (frozenset(),)
    seen = set()
    for st in _staircases(n, m - 1):
        for box in MonomialIdeal(n, st).addable_boxes():
            seen.add(st | {box})
    return tuple(seen)


def enumerate_monomial_ideals(nvars: int, colength: int) -> list[MonomialIdeal]:
    """Torus-fixed points of Hilb^m(C^n, 0), sorted by staircase."""
    if nvars < 2:
        raise DimensionTooSmall(f"need nvars >= 2, got {nvars}")
    if colength < 0:
        raise ValueError("colength must be nonnegative")
    ideals = [MonomialIdeal(nvars, st) for st in _staircases(nvars, colength)]
    ideals.sort(key=MonomialIdeal.sort_key)
    return ideals


def _compositions(m: int, r: int):
    if r == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, r - 1):
            yield (first,) + rest


def enumerate_quot_fixed_points(nvars: int, rank: int, total: int) -> list[QuotFixedPoint]:
    if nvars < 2:
        raise DimensionTooSmall(f"need nvars >= 2, got {nvars}")
    if rank < 1:
        raise ValueError(f"rank must be at least 1, got {rank}")
    out = []
    for comp in _compositions(total, rank):
        pools = [enumerate_monomial_ideals(nvars, c) for c in comp]
        for combo in itertools.product(*pools):
            out.append(QuotFixedPoint(tuple(combo)))
    return out


def chi_punctual_quot(n: int, r: int, m: int) -> int:
    """Euler characteristic of the punctual Quot scheme, as a fixed-point count."""
    return len(enumerate_quot_fixed_points(n, r, m))


def punctual_quot_series(n: int, r: int, order: int) -> Series:
    return Series.from_coeffs([chi_punctual_quot(n, r, m) for m in range(order + 1)], order)


def chi_quot_series(n: int, r: int, chiY: int, order: int) -> Series:
    """sum_m chi(Quot^m of O^r on Y) q^m for smooth Y of dimension n."""
    if n < 2:
        raise DimensionTooSmall(f"need n >= 2, got {n}")
    return int_pow(partition_series(n, order), r * chiY)


def config_space_chi(chiY: int, length: int) -> int:
    """Euler characteristic of ordered ``length``-tuples of distinct points."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    out = 1
    for i in range(length):
        out *= chiY - i
    return out


def stratified_chi_quot(punctual: Series, chiY: int, m: int) -> Fraction:
    """Assemble the global coefficient at q^m from punctual data.

    Sums over partitions alpha of m the configuration-space term divided by
    the product of multiplicity factorials of alpha.
    """
    if punctual.coeffs[0] != 1:
        raise BadPunctualSeries("punctual series must start with 1")
    if m > punctual.order:
        raise OutOfRange(f"punctual series known to order {punctual.order}, need {m}")
    total = Fraction(0)
    for alpha in integer_partitions(m):
        aut = math.prod(math.factorial(k) for k in Counter(alpha).values())
        term = Fraction(config_space_chi(chiY, len(alpha)), aut)
        for part in alpha:
            term *= punctual.coeffs[part]
        total += term
    return total


def stratified_series(punctual: Series, chiY: int, order: int | None = None) -> Series:
    if order is None:
        order = punctual.order
    return Series.from_coeffs(
        [stratified_chi_quot(punctual, chiY, m) for m in range(order + 1)], order
    )
