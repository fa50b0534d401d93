"""Donaldson-Thomas generating series for the two Calabi-Yau 3-fold families.

Family A: Y = quadric and quartic in P^5, c_0 = 1 + H + P.  Two stable
bundles at m = 0, no Behrend sign.

Family B: Y of type (2, 2, 3) in P^1 x P^1 x P^2, polarized by L_r.  Empty
below the wall; in the chamber the m = 0 moduli space is P^k and the DT
series picks up the sign (-1)^k.

chi(Y) and k are recomputed from scratch on each call, so a bug in
either ingredient surfaces here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import chow, walls
from .errors import (
    AboveUpperUnsupported,
    DimensionTooSmall,
    IntegralityViolation,
    OnWallUnsupported,
    OutOfRange,
    RouteMismatch,
)
from .localalg import weighted_chi_punctual_quot
from .partitions import macmahon, partition_series
from .series import Series, coefficient, int_pow, substitute_power
from .torus import chi_quot_series, punctual_quot_series, stratified_chi_quot, stratified_series
from .walls import Chamber, ChamberSpec

__all__ = [
    "DTSeriesReport",
    "CrosscheckReport",
    "theorem_a_series",
    "theorem_b_series",
    "prop_eII_series",
    "dt_invariant",
    "crosscheck_quot_model",
    "weighted_punctual_series",
    "theorem_a_series_stratified",
]


@dataclass(frozen=True)
class DTSeriesReport:
    family: str
    chiY: int
    series: Series
    weighted: bool = True
    eps1: int | None = None
    eps2: int | None = None
    r: Fraction | None = None
    k: int | None = None
    chamber: Chamber | None = None

    def __post_init__(self):
        for m, c in enumerate(self.series.coeffs):
            if c.denominator != 1:
                raise IntegralityViolation(f"coefficient of q^{m} is {c}")
            if m % 2 and c != 0:
                raise IntegralityViolation(f"odd coefficient q^{m} is {c}, expected 0")

    @property
    def order(self) -> int:
        return self.series.order

    def pairs(self) -> list[tuple[int, int]]:
        return [(m, int(c)) for m, c in enumerate(self.series.coeffs)]

    def to_dict(self) -> dict:
        d = {
            "family": self.family,
            "chiY": self.chiY,
            "weighted": self.weighted,
            "series": self.series.to_dict(),
        }
        if self.family == "B":
            d.update(
                eps1=self.eps1,
                eps2=self.eps2,
                r=str(self.r),
                k=self.k,
                chamber=str(self.chamber),
            )
        return d


def _m_q2_power(order: int, chiY: int) -> Series:
    # M(q^2)^(2 chi)
    return int_pow(substitute_power(macmahon(order), 2), 2 * chiY)


def theorem_a_series(order: int, weighted: bool = True) -> DTSeriesReport:
    """sum_m lambda(L, c_m) q^m = 2 M(q^2)^(2 chi(Y)).

    The Behrend-weighted and plain Euler characteristics coincide for this
    family, so ``weighted`` only changes the flag on the report.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    chiY = chow.ci_euler((5,), [2, 4])
    return DTSeriesReport("A", chiY, _m_q2_power(order, chiY) * 2, weighted=weighted)


def theorem_b_series(eps1: int, eps2: int, r, order: int, weighted: bool = True) -> DTSeriesReport:
    spec = ChamberSpec(2, eps1, eps2, Fraction(r))
    chamber = walls.classify(spec)
    chiY = chow.ci_euler((1, 1, 2), [(2, 2, 3)])
    k = walls.k_value_3fold(eps1, eps2)
    if chamber is Chamber.ON_WALL:
        raise OnWallUnsupported(f"r = {spec.r} lies on the wall")
    if chamber is Chamber.AT_OR_ABOVE_UPPER:
        raise AboveUpperUnsupported(f"r = {spec.r} is at or above the upper chamber bound")
    if chamber is Chamber.BELOW_WALL:
        series = Series.zero(order)
    else:
        sign = (-1) ** k if weighted else 1
        series = _m_q2_power(order, chiY) * (sign * (k + 1))
    return DTSeriesReport("B", chiY, series, weighted, eps1, eps2, spec.r, k, chamber)


def prop_eII_series(n: int, eps1: int, eps2: int, order: int) -> Series:
    """Plain Euler characteristics of the moduli spaces for Y in P^1 x P^1 x P^n.

    Equals (k + 1) (sum_m P_{n+1}(m) q^(2m))^(2 chi(Y)).  Y has dimension
    n + 1, and punctual Quot schemes of an (n+1)-fold are counted by
    (n+1)-dimensional partitions; for n = 2 this is M(q^2).
    """
    if n < 2:
        raise DimensionTooSmall(f"need n >= 2, got {n}")
    chiY = chow.ci_euler((1, 1, n), [(2, 2, n + 1)])
    k = walls.k_value(n, eps1, eps2)
    base = substitute_power(partition_series(n + 1, order), 2)
    return int_pow(base, 2 * chiY) * (k + 1)


def dt_invariant(report: DTSeriesReport, m: int) -> int:
    """lambda(L, c_m) read off the report; zero for negative m."""
    if m < 0:
        return 0
    if m > report.order:
        raise OutOfRange(f"series known to order {report.order}, asked for q^{m}")
    c = coefficient(report.series, m)
    if c.denominator != 1:
        raise IntegralityViolation(f"coefficient of q^{m} is {c}")
    return int(c)


def weighted_punctual_series(order: int) -> Series:
    """sum_m chi(F_m, nu_m) q^m, fixed point by fixed point."""
    return Series.from_coeffs([weighted_chi_punctual_quot(m) for m in range(order + 1)], order)


def theorem_a_series_stratified(order: int) -> Series:
    """Family A series rebuilt from weighted punctual data and the stratification sum."""
    chiY = chow.ci_euler((5,), [2, 4])
    half = order // 2
    glob = stratified_series(weighted_punctual_series(half), chiY)
    cs = [Fraction(0)] * (order + 1)
    for m in range(half + 1):
        cs[2 * m] = 2 * glob.coeffs[m]
    return Series(order, tuple(cs))


@dataclass(frozen=True)
class CrosscheckReport:
    family: str
    m: int
    multiplicity: int
    closed_form: int
    stratified: int
    chiY: int
    extra: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.closed_form == self.stratified


def crosscheck_quot_model(family: str, m: int, spec: ChamberSpec | None = None) -> CrosscheckReport:
    """chi of the moduli space at c_{2m}, computed two ways.

    (a) multiplicity times the q^m coefficient of chi_quot_series(3, 2, chi);
    (b) multiplicity times the stratification sum over punctual Quot data
        counted by fixed-point enumeration.
    """
    family = family.upper()
    if m < 0:
        raise ValueError("m must be nonnegative")
    if family == "A":
        chiY = chow.ci_euler((5,), [2, 4])
        mult = 2
        extra = {}
    elif family == "B":
        if spec is None:
            spec = ChamberSpec(2, 0, 0, Fraction(3))
        chamber = walls.classify(spec)
        if chamber is Chamber.ON_WALL:
            raise OnWallUnsupported(f"r = {spec.r} lies on the wall")
        if chamber is Chamber.AT_OR_ABOVE_UPPER:
            raise AboveUpperUnsupported(f"r = {spec.r} is at or above the upper bound")
        chiY = chow.ci_euler((1, 1, 2), [(2, 2, 3)])
        k = walls.k_value(2, spec.eps1, spec.eps2)
        mult = 0 if chamber is Chamber.BELOW_WALL else k + 1
        extra = {"eps1": spec.eps1, "eps2": spec.eps2, "r": str(spec.r), "k": k}
    else:
        raise ValueError(f"family must be A or B, got {family!r}")
    closed = mult * coefficient(chi_quot_series(3, 2, chiY, m), m)
    strat = mult * stratified_chi_quot(punctual_quot_series(3, 2, m), chiY, m)
    for v in (closed, strat):
        if Fraction(v).denominator != 1:
            raise IntegralityViolation(f"non-integral Euler characteristic {v}")
    report = CrosscheckReport(family, m, mult, int(closed), int(strat), chiY, extra)
    if not report.agree:
        raise RouteMismatch(f"closed form {closed} != stratified {strat}")
    return report
