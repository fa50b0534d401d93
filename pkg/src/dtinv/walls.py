"""Walls and chambers for the polarizations L_r = O(0, 1, r) on Y in P^1 x P^1 x P^n.

The wall sits at r = n(2 - e2)/(2 + e1); the chamber above it ends at
n(2 - e2)/e1, read as +infinity when e1 = 0.  All comparisons are exact.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadEpsilon, BadWindow

__all__ = [
    "Chamber",
    "ChamberSpec",
    "DestabilizerTriple",
    "wall_bounds",
    "classify",
    "k_value",
    "k_value_3fold",
    "moduli_is_empty",
    "bogomolov_window",
    "destabilizer_search",
]


class Chamber(enum.Enum):
    BELOW_WALL = "BelowWall"
    ON_WALL = "OnWall"
    IN_CHAMBER = "InChamber"
    AT_OR_ABOVE_UPPER = "AtOrAboveUpper"

    def __str__(self):
        return self.value


def _check_eps(eps1, eps2):
    if eps1 not in (0, 1) or eps2 not in (0, 1):
        raise BadEpsilon(f"epsilons must be 0 or 1, got ({eps1}, {eps2})")


@dataclass(frozen=True)
class ChamberSpec:
    n: int
    eps1: int
    eps2: int
    r: Fraction

    def __post_init__(self):
        _check_eps(self.eps1, self.eps2)
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        r = Fraction(self.r)
        if r <= 0:
            raise ValueError(f"polarization parameter must be positive, got {r}")
        object.__setattr__(self, "r", r)


@dataclass(frozen=True, order=True)
class DestabilizerTriple:
    """Twist (a, b, c) of a destabilizing subsheaf O_Y(a, b, c) x I_Z."""

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def wall_bounds(n: int, eps1: int, eps2: int) -> tuple[Fraction, Fraction | float]:
    _check_eps(eps1, eps2)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    lower = Fraction(n * (2 - eps2), 2 + eps1)
    upper = math.inf if eps1 == 0 else Fraction(n * (2 - eps2), eps1)
    return lower, upper


def classify(spec: ChamberSpec) -> Chamber:
    lower, upper = wall_bounds(spec.n, spec.eps1, spec.eps2)
    if spec.r < lower:
        return Chamber.BELOW_WALL
    if spec.r == lower:
        return Chamber.ON_WALL
    if spec.r < upper:
        return Chamber.IN_CHAMBER
    return Chamber.AT_OR_ABOVE_UPPER


def k_value(n: int, eps1: int, eps2: int) -> int:
    """(1 + e1) C(n + 2 - e2, n) - 1; the moduli space at m = 0 is P^k."""
    _check_eps(eps1, eps2)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return (1 + eps1) * math.comb(n + 2 - eps2, n) - 1


def k_value_3fold(eps1: int, eps2: int) -> int:
    _check_eps(eps1, eps2)
    return (1 + eps1) * (4 - eps2) * (3 - eps2) // 2 - 1


def moduli_is_empty(m: int, spec: ChamberSpec | None = None, family: str = "A") -> bool:
    family = family.upper()
    if family not in ("A", "B"):
        raise ValueError(f"family must be A or B, got {family!r}")
    if m < 0 or m % 2:
        return True
    if family == "B":
        if spec is None:
            raise ValueError("family B needs a ChamberSpec")
        return classify(spec) is Chamber.BELOW_WALL
    return False


def bogomolov_window(n: int, eps1: int, eps2: int) -> Fraction:
    """Upper end of the r0 range where the Bogomolov inequality fails."""
    _check_eps(eps1, eps2)
    return Fraction((2 - eps2) * (n - 1), 2 * (2 + eps1))


def destabilizer_search(
    n: int, eps1: int, eps2: int, r, r0, bound: int = 4
) -> list[DestabilizerTriple]:
    """Every (a, b, c) in [-bound, bound]^3 passing all the destabilizer constraints.

    The constraints: the subsheaf destabilizes for L_{r0}; it does not for
    L_r; the two c_2 effectivity inequalities; and the two sign facts
    (2c - e2) + (n+1)a > 0, 2a + 2b - e1 < 0.
    """
    _check_eps(eps1, eps2)
    r, r0 = Fraction(r), Fraction(r0)
    window = bogomolov_window(n, eps1, eps2)
    if not (0 < r0 < window) or not r0 < r:
        raise BadWindow(f"need 0 < r0 < {window} and r0 < r, got r0={r0}, r={r}")
    if bound < 3:
        raise ValueError(f"bound must be at least 3, got {bound}")
    out = []
    rng = range(-bound, bound + 1)
    for a, b, c in itertools.product(rng, rng, rng):
        slope = n * ((2 * c - eps2) + (n + 1) * a)
        tilt = 2 * a + 2 * b - eps1
        if not slope + tilt * r0 > 0:
            continue
        if not slope + tilt * r <= 0:
            continue
        u = 2 * c - eps2
        if not (2 * a + (2 * b - eps1)) * u + (n + 1) * a * (2 * b - eps1) >= -(eps1 + 2) * (2 - eps2):
            continue
        if not (u + 2 * (n + 1) * a) * u >= (2 - eps2) ** 2:
            continue
        if not (u + (n + 1) * a > 0 and tilt < 0):
            continue
        out.append(DestabilizerTriple(a, b, c))
    return out
