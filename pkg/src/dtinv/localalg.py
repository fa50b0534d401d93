"""Hom spaces between monomial ideals and Behrend-sign bookkeeping.

``hom_dim(I, J)`` is dim_C Hom_R(I, R/J) for monomial ideals of finite
colength in R = C[z_1..z_n].  A homomorphism is fixed by the images v_i of
the minimal generators g_i subject to the Taylor relations

    (lcm_ij / g_i) v_i - (lcm_ij / g_j) v_j = 0      in R/J,

and everything is Z^n-graded, so the kernel splits into one small linear
system per multidegree shift d: the unknown for g_i is the coefficient of
z^(g_i + d), present only when g_i + d is a standard monomial of J.
Ranks are taken with fraction-free (Bareiss) elimination over the integers.

Both ideals are supported at the origin, so the polynomial-ring Hom agrees
with the Hom over the local ring there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch, NegativeDimension, RouteMismatch
from .partitions import count_partitions
from .torus import MonomialIdeal, QuotFixedPoint, enumerate_monomial_ideals, enumerate_quot_fixed_points

__all__ = [
    "IdealPresentation",
    "presentation",
    "standard_basis",
    "integer_rank",
    "hom_dim",
    "hilb_tangent_dim",
    "quot_tangent_dim",
    "behrend_sign",
    "weighted_chi_punctual_quot",
    "parity_scan",
]

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class IdealPresentation:
    """Minimal monomial generators plus the pairwise Taylor syzygies.

    ``syzygies[k] = (i, j, lcm)`` encodes (lcm/g_i) e_i - (lcm/g_j) e_j.
    """

    generators: tuple[Exponent, ...]
    syzygies: tuple[tuple[int, int, Exponent], ...]

    def check(self) -> bool:
        gens = self.generators
        for a, b in itertools.combinations(gens, 2):
            if _divides(a, b) or _divides(b, a):
                return False
        for i, j, lcm in self.syzygies:
            ci = tuple(l - g for l, g in zip(lcm, gens[i]))
            cj = tuple(l - g for l, g in zip(lcm, gens[j]))
            if min(ci + cj) < 0:
                return False
            if tuple(c + g for c, g in zip(ci, gens[i])) != tuple(c + g for c, g in zip(cj, gens[j])):
                return False
        return True


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def presentation(I: MonomialIdeal) -> IdealPresentation:
    gens = I.minimal_generators()
    syz = tuple(
        (i, j, tuple(max(x, y) for x, y in zip(gens[i], gens[j])))
        for i, j in itertools.combinations(range(len(gens)), 2)
    )
    return IdealPresentation(gens, syz)


def standard_basis(I: MonomialIdeal) -> list[Exponent]:
    """Exponents of the standard monomials, a C-basis of R/I."""
    return sorted(I.staircase)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, ncols):
                # exact division is guaranteed by Sylvester's identity
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


@lru_cache(maxsize=None)
def _hom_dim(I: MonomialIdeal, J: MonomialIdeal) -> int:
    pres = presentation(I)
    gens = pres.generators
    st = J.staircase
    if not st:
        return 0
    shifts = {tuple(s - g for s, g in zip(b, gen)) for b in st for gen in gens}
    total = 0
    for d in shifts:
        unknowns = [i for i, g in enumerate(gens) if tuple(x + y for x, y in zip(g, d)) in st]
        if not unknowns:
            continue
        col = {i: k for k, i in enumerate(unknowns)}
        rows = []
        for i, j, lcm in pres.syzygies:
            if tuple(x + y for x, y in zip(lcm, d)) not in st:
                continue
            row = [0] * len(unknowns)
            # lcm + d in the staircase forces every valid g_i + d into it as well
            if i in col:
                row[col[i]] += 1
            if j in col:
                row[col[j]] -= 1
            if any(row):
                rows.append(row)
        total += len(unknowns) - integer_rank(rows)
    return total


def hom_dim(I: MonomialIdeal, J: MonomialIdeal) -> int:
    """dim Hom(I, R/J)."""
    if I.nvars != J.nvars:
        raise DimensionMismatch(f"{I.nvars} vs {J.nvars} variables")
    return _hom_dim(I, J)


def hilb_tangent_dim(Z: MonomialIdeal) -> int:
    """Zariski tangent space of Hilb at Z: Hom(I_Z, O_Z)."""
    return hom_dim(Z, Z)


def quot_tangent_dim(E: QuotFixedPoint) -> int:
    """Hom(I_1 + ... + I_r, R/I_1 + ... + R/I_r), summed over all pairs."""
    return sum(hom_dim(I, J) for I in E.ideals for J in E.ideals)


def behrend_sign(dim_tx: int, dim_txt: int) -> int:
    """(-1)^(dim T_P X - dim T_P X^T)."""
    if dim_txt < 0 or dim_tx < dim_txt:
        raise NegativeDimension(f"need dim_tx >= dim_txt >= 0, got {dim_tx}, {dim_txt}")
    return -1 if (dim_tx - dim_txt) % 2 else 1


def weighted_chi_punctual_quot(m: int) -> int:
    """Behrend-weighted Euler characteristic of the rank-2 punctual Quot scheme on a 3-fold.

    The signed route walks every fixed point I_1 + I_2, takes the sign from the
    tangent-space gap against Hilb x Hilb and the known weights (-1)^i,
    (-1)^(m-i) of the punctual Hilbert factors.  The unsigned route is the
    plain product count.  They must agree.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    signed = 0
    for E in enumerate_quot_fixed_points(3, 2, m):
        i = E.ideals[0].colength
        gap = behrend_sign(quot_tangent_dim(E), sum(hilb_tangent_dim(Z) for Z in E.ideals))
        signed += gap * (-1) ** i * (-1) ** (m - i)
    unsigned = sum(count_partitions(3, i) * count_partitions(3, m - i) for i in range(m + 1))
    if signed != unsigned:
        raise RouteMismatch(f"m={m}: signed route {signed} != unsigned count {unsigned}")
    return signed


def parity_scan(max_colength: int, nvars: int = 3) -> dict:
    """Check hom(I1, R/I2) + hom(I2, R/I1) = l1 + l2 (mod 2) on every pair."""
    ideals = [I for m in range(max_colength + 1) for I in enumerate_monomial_ideals(nvars, m)]
    failures = []
    for I1, I2 in itertools.product(ideals, repeat=2):
        lhs = hom_dim(I1, I2) + hom_dim(I2, I1)
        if (lhs - I1.colength - I2.colength) % 2:
            failures.append((I1.to_list(), I2.to_list(), lhs))
    return {
        "nvars": nvars,
        "max_colength": max_colength,
        "ideals": len(ideals),
        "pairs": len(ideals) ** 2,
        "failures": failures,
        "passed": not failures,
    }
