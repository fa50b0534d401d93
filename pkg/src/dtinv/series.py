"""Truncated univariate power series in q with exact rational coefficients.

A :class:`Series` stores the coefficients of q^0 .. q^order.  Binary
operations between series of different orders truncate to the smaller
order; nothing ever extends the precision silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import BadConstantTerm, OutOfRange, ZeroConstantTerm

__all__ = [
    "Series",
    "add",
    "mul",
    "inv",
    "int_pow",
    "exp_series",
    "log_series",
    "substitute_power",
    "euler_product",
    "plethystic_exp",
    "coefficient",
]


@dataclass(frozen=True)
class Series:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> Series:
        """Build a series from leading coefficients, zero-padding or cutting to ``order``."""
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> Series:
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls.from_coeffs(cs, order)

    def __getitem__(self, m: int) -> Fraction:
        return coefficient(self, m)

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OutOfRange(f"cannot raise order {self.order} to {order}")
        return Series(order, self.coeffs[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def scale(self, c) -> Series:
        c = Fraction(c)
        return Series(self.order, tuple(c * x for x in self.coeffs))

    def __add__(self, other):
        if isinstance(other, Series):
            return add(self, other)
        if isinstance(other, (int, Rational)):
            return add(self, Series.from_coeffs([other], self.order))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (Series, int, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, inv(other))
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        return int_pow(self, e)

    def __str__(self):
        terms = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if m == 0 else ("q" if m == 1 else f"q^{m}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.order + 1})"

    # JSON: {"var": "q", "order": N, "coeffs": ["p/q", ...]}
    def to_dict(self) -> dict:
        return {"var": "q", "order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> Series:
        if d.get("var", "q") != "q":
            raise ValueError(f"unsupported variable {d.get('var')!r}")
        return cls(int(d["order"]), tuple(Fraction(c) for c in d["coeffs"]))

    @classmethod
    def from_json(cls, s: str) -> Series:
        return cls.from_dict(json.loads(s))


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(n, tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            x = ac[i]
            if x:
                y = bc[k - i]
                if y:
                    s += x * y
        out.append(s)
    return Series(n, tuple(out))


def inv(f: Series) -> Series:
    c0 = f.coeffs[0]
    if c0 == 0:
        raise ZeroConstantTerm("series with zero constant term is not invertible")
    g = [Fraction(1) / c0]
    for k in range(1, f.order + 1):
        s = sum((f.coeffs[i] * g[k - i] for i in range(1, k + 1)), Fraction(0))
        g.append(-s / c0)
    return Series(f.order, tuple(g))


def int_pow(f: Series, e: int) -> Series:
    """f**e by repeated squaring; negative e goes through :func:`inv`."""
    e = int(e)
    base = f
    if e < 0:
        base = inv(f)
        e = -e
    result = Series.one(f.order)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def exp_series(f: Series) -> Series:
    if f.coeffs[0] != 0:
        raise BadConstantTerm("exp needs a series with zero constant term")
    fc = f.coeffs
    g = [Fraction(1)]
    # m g_m = sum_{k=1}^m k f_k g_{m-k}
    for m in range(1, f.order + 1):
        s = sum((k * fc[k] * g[m - k] for k in range(1, m + 1)), Fraction(0))
        g.append(s / m)
    return Series(f.order, tuple(g))


def log_series(f: Series) -> Series:
    if f.coeffs[0] != 1:
        raise BadConstantTerm("log needs a series with constant term 1")
    fc = f.coeffs
    h = [Fraction(0)]
    # m h_m = m f_m - sum_{k=1}^{m-1} k h_k f_{m-k}
    for m in range(1, f.order + 1):
        s = sum((k * h[k] * fc[m - k] for k in range(1, m)), Fraction(0))
        h.append((m * fc[m] - s) / m)
    return Series(f.order, tuple(h))


def substitute_power(f: Series, k: int) -> Series:
    """f(q^k), same order."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    cs = [Fraction(0)] * (f.order + 1)
    for m in range(0, f.order + 1, k):
        cs[m] = f.coeffs[m // k]
    return Series(f.order, tuple(cs))


def euler_product(c: Sequence[int], order: int) -> Series:
    """prod_{k>=1} (1 - q^k)^(-c_k), with ``c[0]`` holding c_1."""
    result = Series.one(order)
    for k in range(1, min(len(c), order) + 1):
        ck = int(c[k - 1])
        if ck:
            result = mul(result, int_pow(Series.one(order) - Series.monomial(k, order), -ck))
    return result


def plethystic_exp(f: Series) -> Series:
    """exp(sum_{m>=1} f(q^m) / m)."""
    if f.coeffs[0] != 0:
        raise BadConstantTerm("plethystic exponential needs zero constant term")
    acc = Series.zero(f.order)
    for m in range(1, f.order + 1):
        acc = acc + substitute_power(f, m).scale(Fraction(1, m))
    return exp_series(acc)


def coefficient(f: Series, m: int) -> Fraction:
    if not 0 <= m <= f.order:
        raise OutOfRange(f"coefficient q^{m} outside 0..{f.order}")
    return f.coeffs[m]
