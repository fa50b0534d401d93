"""Intersection theory on products of projective spaces.

The Chow ring of P^{n_1} x ... x P^{n_s} is Q[h_1..h_s]/(h_i^{n_i+1}).
Coefficients are polynomials in one formal parameter (a polarization
parameter, or the integer m in c_m), so whole families of classes can be
manipulated at once.

A smooth complete intersection Y is handled through its ambient: classes on
Y are ambient classes, products are truncated above dim Y, and integration
over Y is integration over the ambient against the fundamental class
[Y] = D_1 ... D_c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatch, BadEpsilon, NonIntegerResult, NonUnit, RouteMismatch

__all__ = [
    "Poly",
    "Ambient",
    "ChowClass",
    "CompleteIntersection",
    "chow_add",
    "chow_mul",
    "chow_inv_unit",
    "integrate",
    "chern_tangent",
    "ci_euler",
    "todd_class",
    "theorem_a_variety",
    "theorem_b_variety",
    "class_cm_theorem_a",
    "class_cm_theorem_b",
    "rr_chi_ideal_pair",
    "bogomolov_closed_form",
    "bogomolov_chow",
    "bogomolov_discriminant",
]


class Poly:
    """Univariate polynomial over Q in a named formal parameter."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c, var: str = "t") -> Poly:
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "t") -> Poly:
        return cls([0, 1], var)

    @staticmethod
    def lift(x, var: str = "t") -> Poly:
        return x if isinstance(x, Poly) else Poly([x], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other):
        other = Poly.lift(other, self.var)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], _pick_var(self, other))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-Poly.lift(other, self.var))

    def __rsub__(self, other):
        return Poly.lift(other, self.var) - self

    def __mul__(self, other):
        other = Poly.lift(other, self.var)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, _pick_var(self, other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly([1], self.var)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")


def _pick_var(a: Poly, b: Poly) -> str:
    # "t" is the placeholder name; any explicit name wins
    return a.var if a.var != "t" else b.var


@dataclass(frozen=True)
class Ambient:
    """P^{dims[0]} x ... x P^{dims[-1]}."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"dims must be positive integers, got {self.dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def hyperplane(self, i: int, var: str = "t") -> ChowClass:
        e = tuple(1 if k == i else 0 for k in range(len(self.dims)))
        return ChowClass(self, {e: Poly([1], var)})

    def hyperplanes(self, var: str = "t") -> list[ChowClass]:
        return [self.hyperplane(i, var) for i in range(len(self.dims))]

    def one(self, var: str = "t") -> ChowClass:
        return ChowClass(self, {(0,) * len(self.dims): Poly([1], var)})

    def divisor(self, degrees: Sequence, var: str = "t") -> ChowClass:
        """The class sum_i degrees[i] h_i."""
        if len(degrees) != len(self.dims):
            raise ValueError(f"need {len(self.dims)} multidegrees, got {len(degrees)}")
        out = self.zero(var)
        for i, d in enumerate(degrees):
            out = out + self.hyperplane(i, var) * d
        return out

    def zero(self, var: str = "t") -> ChowClass:
        return ChowClass(self, {})


class ChowClass:
    """An element of the Chow ring of an :class:`Ambient`."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[tuple[int, ...], object]):
        self.ambient = ambient
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != len(ambient.dims):
                raise ValueError(f"exponent {e} does not match ambient {ambient.dims}")
            if any(x > n for x, n in zip(e, ambient.dims)):
                continue
            c = Poly.lift(c)
            if not c.is_zero():
                clean[e] = c
        self.terms = clean

    def _check(self, other: ChowClass):
        if not isinstance(other, ChowClass) or other.ambient != self.ambient:
            raise AmbientMismatch("classes live on different ambients")

    def _var(self) -> str:
        return next((c.var for c in self.terms.values()), "t")

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            other = self.ambient.one(self._var()) * other
        return chow_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return chow_mul(self, other)
        c = Poly.lift(other, self._var())
        return ChowClass(self.ambient, {e: v * c for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ambient.one(self._var())
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def degree_part(self, k: int) -> ChowClass:
        return ChowClass(self.ambient, {e: c for e, c in self.terms.items() if sum(e) == k})

    def truncate_above(self, k: int) -> ChowClass:
        return ChowClass(self.ambient, {e: c for e, c in self.terms.items() if sum(e) <= k})

    def constant_term(self) -> Poly:
        return self.terms.get((0,) * len(self.ambient.dims), Poly([]))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"ChowClass({self.ambient.dims}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = "hhh" if len(self.ambient.dims) == 1 else "abcdefgh"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                (names[i] if x == 1 else f"{names[i]}^{x}") for i, x in enumerate(e) if x
            )
            cs = str(c)
            if not c.is_constant():
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs in ("1", "-1"):
                parts.append(cs[:-1] + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def chow_add(a: ChowClass, b: ChowClass) -> ChowClass:
    a._check(b)
    terms = dict(a.terms)
    for e, c in b.terms.items():
        terms[e] = terms[e] + c if e in terms else c
    return ChowClass(a.ambient, terms)


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    a._check(b)
    dims = a.ambient.dims
    terms: dict = {}
    for (ea, ca), (eb, cb) in itertools.product(a.terms.items(), b.terms.items()):
        e = tuple(x + y for x, y in zip(ea, eb))
        if any(x > n for x, n in zip(e, dims)):
            continue
        p = ca * cb
        terms[e] = terms[e] + p if e in terms else p
    return ChowClass(a.ambient, terms)


def chow_inv_unit(c: ChowClass) -> ChowClass:
    """1/c for c = 1 + (nilpotent), as the finite geometric series."""
    if c.constant_term() != Poly([1]):
        raise NonUnit("only classes with constant term 1 are inverted")
    x = c - c.ambient.one(c._var())
    out = c.ambient.one(c._var())
    power = c.ambient.one(c._var())
    for _ in range(c.ambient.dim):
        power = power * (-x)
        if power.is_zero():
            break
        out = out + power
    return out


def integrate(c: ChowClass) -> Poly:
    """Coefficient of the top monomial h_1^{n_1} ... h_s^{n_s}."""
    return c.terms.get(c.ambient.dims, Poly([]))


def chern_tangent(ambient: Ambient, var: str = "t") -> ChowClass:
    """prod_i (1 + h_i)^(n_i + 1), from the Euler sequence."""
    out = ambient.one(var)
    for i, n in enumerate(ambient.dims):
        out = out * (ambient.one(var) + ambient.hyperplane(i, var)) ** (n + 1)
    return out


def _as_divisor(ambient: Ambient, d) -> ChowClass:
    if isinstance(d, ChowClass):
        return d
    if isinstance(d, int):
        if len(ambient.dims) != 1:
            raise ValueError("a bare integer degree needs a single-factor ambient")
        d = (d,)
    return ambient.divisor(tuple(d))


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of divisors D_1..D_c in an ambient product."""

    ambient: Ambient
    divisors: tuple[ChowClass, ...]

    @classmethod
    def of(cls, ambient: Ambient | Sequence[int], degrees: Sequence) -> CompleteIntersection:
        if not isinstance(ambient, Ambient):
            ambient = Ambient(tuple(ambient))
        return cls(ambient, tuple(_as_divisor(ambient, d) for d in degrees))

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.divisors)

    def fundamental_class(self) -> ChowClass:
        out = self.ambient.one()
        for D in self.divisors:
            out = out * D
        return out

    def restrict(self, c: ChowClass) -> ChowClass:
        return c.truncate_above(self.dim)

    def integrate(self, c: ChowClass) -> Poly:
        return integrate(c.degree_part(self.dim) * self.fundamental_class())

    def chern_tangent(self) -> ChowClass:
        """c(T_Y) = c(T_ambient) / prod (1 + D_i), truncated at dim Y."""
        c = chern_tangent(self.ambient)
        for D in self.divisors:
            c = c * chow_inv_unit(self.ambient.one() + D)
        return self.restrict(c)

    def point_class(self) -> ChowClass:
        """A top-degree class with integral 1 over Y."""
        for e in itertools.product(*(range(n + 1) for n in self.ambient.dims)):
            if sum(e) != self.dim:
                continue
            mono = ChowClass(self.ambient, {e: Poly([1])})
            deg = self.integrate(mono).constant()
            if deg:
                return mono * (Fraction(1) / deg)
        raise ValueError("no top-degree class with nonzero degree")

    def euler_characteristic(self) -> int:
        value = self.integrate(self.chern_tangent().degree_part(self.dim))
        if not value.is_constant() or value.constant().denominator != 1:
            raise NonIntegerResult(f"Euler characteristic came out as {value}")
        return int(value.constant())


def ci_euler(ambient: Ambient | Sequence[int], degrees: Sequence) -> int:
    """chi(Y) for the complete intersection of the given divisors.

    ``degrees`` holds one entry per divisor: an int for a single-factor
    ambient, otherwise a multidegree tuple (or a ready-made ChowClass).
    """
    Y = CompleteIntersection.of(ambient, degrees)
    if Y.dim < 0 or (Y.dim == 0 and not Y.divisors):
        raise ValueError("complete intersection has negative dimension")
    return Y.euler_characteristic()


def todd_class(c: ChowClass, top: int) -> ChowClass:
    """Todd class from a total Chern class, through degree ``top`` (<= 4)."""
    if top > 4:
        raise NotImplementedError("Todd polynomials are tabulated through degree 4")
    c1, c2, c3, c4 = (c.degree_part(k) for k in range(1, 5))
    one = c.ambient.one()
    parts = [
        one,
        c1 * Fraction(1, 2),
        (c1 * c1 + c2) * Fraction(1, 12),
        c1 * c2 * Fraction(1, 24),
        (-(c1**4) + c1 * c1 * c2 * 4 + c2 * c2 * 3 + c1 * c3 - c4) * Fraction(1, 720),
    ]
    out = c.ambient.zero()
    for k in range(top + 1):
        out = out + parts[k]
    return out


def theorem_a_variety() -> CompleteIntersection:
    """Quadric and quartic in P^5."""
    return CompleteIntersection.of(Ambient((5,)), [2, 4])


def theorem_b_variety(n: int = 2) -> CompleteIntersection:
    """Divisor of type (2, 2, n+1) in P^1 x P^1 x P^n."""
    return CompleteIntersection.of(Ambient((1, 1, n)), [(2, 2, n + 1)])


def _m_poly(var: str) -> Poly:
    return Poly.gen(var)


def class_cm_theorem_a(m=None) -> ChowClass:
    """c_m = -m[y0] + (1 + H|_Y + P|_Y) on the quadric-quartic 3-fold.

    With ``m=None`` the coefficients are polynomials in a formal ``m``.
    P|_Y is represented numerically by h^2/2 (a plane meets the quartic in
    a degree-4 curve; h^2 cuts a degree-8 curve on Y).
    """
    Y = theorem_a_variety()
    h = Y.ambient.hyperplane(0, "m")
    mm = _m_poly("m") if m is None else Poly.const(m, "m")
    c0 = Y.ambient.one("m") + h + h * h * Fraction(1, 2)
    return Y.restrict(c0 - Y.point_class() * mm)


def _pi_star(Z: Ambient, a, b, var: str) -> ChowClass:
    # pi: Y -> P^1 x P^n forgets the first factor; (a, b) = a[p x P^n] + b[P^1 x H]
    return Z.hyperplane(1, var) * a + Z.hyperplane(2, var) * b


def class_cm_theorem_b(m=None, eps1: int = 0, eps2: int = 0, n: int = 2) -> ChowClass:
    """c_m = -m[y0] + (1 + pi^*(-1, 1)) (1 + pi^*(eps1 + 1, eps2 - 1))."""
    _check_eps(eps1, eps2)
    Y = theorem_b_variety(n)
    Z = Y.ambient
    mm = _m_poly("m") if m is None else Poly.const(m, "m")
    one = Z.one("m")
    c0 = (one + _pi_star(Z, -1, 1, "m")) * (one + _pi_star(Z, eps1 + 1, eps2 - 1, "m"))
    return Y.restrict(c0 - Y.point_class() * mm)


def _check_eps(eps1, eps2):
    if eps1 not in (0, 1) or eps2 not in (0, 1):
        raise BadEpsilon(f"epsilons must be 0 or 1, got ({eps1}, {eps2})")


def rr_chi_ideal_pair(l1: int, l2: int, Y: CompleteIntersection | None = None) -> int:
    """chi(I_{Z2}, I_{Z1}) by Hirzebruch-Riemann-Roch on a Calabi-Yau 3-fold.

    ch(I_Z) = 1 - l(Z)[pt]; dualizing flips the sign of the degree-3 part.
    """
    if l1 < 0 or l2 < 0:
        raise ValueError("lengths must be nonnegative")
    if Y is None:
        Y = theorem_a_variety()
    pt = Y.point_class()
    one = Y.ambient.one()
    ch_dual_2 = one + pt * l2
    ch_1 = one - pt * l1
    td = todd_class(Y.chern_tangent(), Y.dim)
    value = Y.integrate(Y.restrict(ch_dual_2 * ch_1 * td))
    if not value.is_constant() or value.constant().denominator != 1:
        raise NonIntegerResult(f"Riemann-Roch gave {value}")
    return int(value.constant())


def bogomolov_closed_form(n: int, eps1: int, eps2: int) -> Poly:
    """2(2-e2) r0^(n-2) [2(2+e1) r0 - (2-e2)(n-1)]."""
    _check_eps(eps1, eps2)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    r0 = Poly.gen("r0")
    bracket = r0 * (2 * (2 + eps1)) - (2 - eps2) * (n - 1)
    return (r0 ** (n - 2)) * bracket * (2 * (2 - eps2))


def bogomolov_chow(n: int, eps1: int, eps2: int) -> Poly:
    """(4 c2(E) - c1(E)^2) . c1(L_{r0})^(n-1) on Y via the double cover to P^1 x P^n."""
    _check_eps(eps1, eps2)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    X = Ambient((1, n))
    p, H = X.hyperplanes("r0")
    r0 = Poly.gen("r0")
    c1 = p * eps1 + H * eps2
    c2 = p * H * (2 + eps1 - eps2) - H * H * (1 - eps2)
    L = p + H * r0
    return integrate((c2 * 4 - c1 * c1) * L ** (n - 1)) * 2


def bogomolov_discriminant(n: int, eps1: int, eps2: int) -> Poly:
    closed = bogomolov_closed_form(n, eps1, eps2)
    chow = bogomolov_chow(n, eps1, eps2)
    if closed != chow:
        raise RouteMismatch(f"closed form {closed} != Chow evaluation {chow}")
    return closed
