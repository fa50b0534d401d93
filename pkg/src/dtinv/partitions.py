"""n-dimensional partitions and their generating series.

An n-dimensional partition of m is a nonincreasing array of nonnegative
integers indexed by (n-1)-tuples with total m.  n = 2 gives ordinary
partitions, n = 3 plane partitions, n = 4 solid partitions.

Enumeration works on the equivalent staircase picture: the boxes
``(i_1, ..., i_{n-1}, k)`` with ``k < m_{i_1..i_{n-1}}`` form an order ideal
of size m in N^n, and an order ideal in N^d is a decreasing chain of order
ideals in N^(d-1) (its slices along the last axis).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import DimensionTooSmall
from .series import Series, euler_product

__all__ = [
    "NDPartition",
    "enumerate_ndpartitions",
    "count_partitions",
    "partition_series",
    "macmahon",
    "integer_partitions",
    "order_ideals",
]

Box = tuple[int, ...]


@dataclass(frozen=True)
class NDPartition:
    n: int
    entries: tuple[tuple[Box, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise DimensionTooSmall(f"n-dimensional partitions need n >= 2, got {self.n}")
        items = dict(self.entries)
        for idx, v in items.items():
            if len(idx) != self.n - 1 or any(i < 0 for i in idx):
                raise ValueError(f"bad index {idx} for n={self.n}")
            if v <= 0:
                raise ValueError(f"entries must be positive, got {v} at {idx}")
        for idx, v in items.items():
            for t in range(self.n - 1):
                if idx[t] > 0:
                    lower = idx[:t] + (idx[t] - 1,) + idx[t + 1 :]
                    if items.get(lower, 0) < v:
                        raise ValueError(f"not monotone at {idx}")
        object.__setattr__(self, "entries", tuple(sorted(items.items())))

    @classmethod
    def from_dict(cls, n: int, entries: dict) -> NDPartition:
        return cls(n, tuple((tuple(k), int(v)) for k, v in entries.items() if v))

    @property
    def weight(self) -> int:
        return sum(v for _, v in self.entries)

    def __getitem__(self, idx: Box) -> int:
        return dict(self.entries).get(tuple(idx), 0)

    def boxes(self) -> frozenset[Box]:
        """The staircase in N^n: the last coordinate runs below each entry."""
        return frozenset(idx + (k,) for idx, v in self.entries for k in range(v))

    @classmethod
    def from_boxes(cls, n: int, boxes) -> NDPartition:
        heights: dict[Box, int] = {}
        for b in boxes:
            heights[b[:-1]] = heights.get(b[:-1], 0) + 1
        return cls.from_dict(n, heights)

    def sort_key(self):
        return self.entries

    def __str__(self):
        if self.n == 2:
            return "(" + ",".join(str(v) for _, v in self.entries) + ")"
        return str(dict(self.entries))


@lru_cache(maxsize=None)
def _order_ideals(d: int, size: int, within: frozenset | None) -> tuple[frozenset, ...]:
    # All order ideals of ``size`` boxes in N^d contained in ``within``.
    if size == 0:
        return (frozenset(),)
    if within is not None and len(within) < size:
        return ()
    if d == 1:
        if within is None or (size - 1,) in within:
            return (frozenset((i,) for i in range(size)),)
        return ()
    slices = None
    if within is not None:
        slices = {}
        for b in within:
            slices.setdefault(b[-1], set()).add(b[:-1])
        slices = {k: frozenset(v) for k, v in slices.items()}
    return tuple(_chains(d, size, 0, None, slices))


def _chains(d, remaining, k, prev, slices) -> Iterator[frozenset]:
    if remaining == 0:
        yield frozenset()
        return
    bound = prev
    if slices is not None:
        sk = slices.get(k)
        if sk is None:
            return
        bound = sk if prev is None else (prev & sk)
    top = remaining if bound is None else min(remaining, len(bound))
    for s in range(1, top + 1):
        for layer in _order_ideals(d - 1, s, bound):
            for rest in _chains(d, remaining - s, k + 1, layer, slices):
                yield frozenset(b + (k,) for b in layer) | rest


def order_ideals(d: int, size: int) -> tuple[frozenset, ...]:
    """All order ideals (staircases) of ``size`` boxes in N^d."""
    if d < 1:
        raise DimensionTooSmall(f"need d >= 1, got {d}")
    return _order_ideals(d, size, None)


def enumerate_ndpartitions(n: int, m: int) -> list[NDPartition]:
    """All n-dimensional partitions of m.

    The order is lexicographic on ``NDPartition.entries`` (the sorted list of
    ``(index, value)`` pairs), so it is stable across runs.
    """
    if n < 2:
        raise DimensionTooSmall(f"n-dimensional partitions need n >= 2, got {n}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    parts = [NDPartition.from_boxes(n, s) for s in order_ideals(n, m)]
    parts.sort(key=NDPartition.sort_key)
    return parts


def count_partitions(n: int, m: int) -> int:
    return len(enumerate_ndpartitions(n, m))


def partition_series(n: int, order: int) -> Series:
    """sum_{m <= order} P_n(m) q^m, every coefficient counted by enumeration."""
    if n < 2:
        raise DimensionTooSmall(f"n-dimensional partitions need n >= 2, got {n}")
    return Series.from_coeffs([count_partitions(n, m) for m in range(order + 1)], order)


def macmahon(order: int) -> Series:
    """M(q) = prod_{k>=1} (1 - q^k)^(-k)."""
    return euler_product(list(range(1, order + 1)), order)


def integer_partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordinary partitions of m as nonincreasing tuples, reverse-lex order."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield (first,) + rest
