"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Arithmetic in Poly[z]/(z^2 - D), where D is the radicand of u in the
# closed formula. z never gets a numerical value: the two choices
# z = u and z = -u are related by `conj`, and everything published is
# a norm, which does not depend on the choice.
#
# FactoredFraction restricts denominators to 2^a * M^b * (L*M^2+1)^c.
# ==================================================================

import math
import threading
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..errors import DenominatorShape, NegativeExponent
from .poly_core import VARIABLES, L, M, Poly, exact_div

# 5L^2M^4 - 2L^2M^2 + L^2 - 2LM^4 + 12LM^2 - 2L + M^4 - 2M^2 + 5
DISCRIMINANT = Poly(
    {
        (2, 4, 0): 5,
        (2, 2, 0): -2,
        (2, 0, 0): 1,
        (1, 4, 0): -2,
        (1, 2, 0): 12,
        (1, 0, 0): -2,
        (0, 4, 0): 1,
        (0, 2, 0): -2,
        (0, 0, 0): 5,
    }
)

LM2P1 = L * M**2 + 1


@dataclass(frozen=True)
class QuadElem:
    """The element a + b*z with z^2 = DISCRIMINANT."""

    a: Poly = field(default_factory=Poly.zero)
    b: Poly = field(default_factory=Poly.zero)

    @classmethod
    def rational(cls, a) -> "QuadElem":
        return cls(_as_poly(a), Poly.zero())

    @classmethod
    def z(cls) -> "QuadElem":
        return cls(Poly.zero(), Poly.one())

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational(self) -> bool:
        return self.b.is_zero()

    def __add__(self, other):
        other = _as_quad(other)
        return QuadElem(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_as_quad(other))

    def __rsub__(self, other):
        return _as_quad(other) - self

    def __mul__(self, other):
        if isinstance(other, QuadElem):
            return qmul(self, other)
        if isinstance(other, (Poly, int)):
            return QuadElem(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError(f"Exponent must be nonnegative, got {k}")
        result = QuadElem.rational(1)
        base = self
        while k:
            if k & 1:
                result = qmul(result, base)
            k >>= 1
            if k:
                base = qmul(base, base)
        return result

    def conj(self) -> "QuadElem":
        return conj(self)

    def norm(self) -> Poly:
        return norm(self)

    def to_json_obj(self) -> dict:
        return {"a": self.a.to_json_obj(), "b": self.b.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QuadElem":
        return cls(Poly.from_json_obj(obj["a"]), Poly.from_json_obj(obj["b"]))

    def __repr__(self):
        return f"QuadElem(a={self.a.to_text()}, b={self.b.to_text()})"


def _as_poly(value) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def _as_quad(value) -> QuadElem:
    if isinstance(value, QuadElem):
        return value
    return QuadElem.rational(value)


def qmul(e1: QuadElem, e2: QuadElem) -> QuadElem:
    """(a1 + b1 z)(a2 + b2 z) = (a1 a2 + b1 b2 D) + (a1 b2 + a2 b1) z."""
    a = e1.a * e2.a
    if e1.b and e2.b:
        a = a + e1.b * e2.b * DISCRIMINANT
    b = e1.a * e2.b + e2.a * e1.b
    return QuadElem(a, b)


def conj(e: QuadElem) -> QuadElem:
    """The Galois conjugate z -> -z."""
    return QuadElem(e.a, -e.b)


def norm(e: QuadElem) -> Poly:
    """a^2 - b^2 D, the rational value of e * conj(e)."""
    if e.b.is_zero():
        return e.a * e.a
    return e.a * e.a - e.b * e.b * DISCRIMINANT


def substitute_quadratic(p: Poly, v, num: QuadElem, den: Poly) -> Tuple[QuadElem, Poly]:
    """
    Substitutes v := num/den, with num in the quadratic extension, by Horner's scheme.

    Returns:
        (N, den^d) with d = deg_v(p) and p(v := num/den) = N / den^d.

    Raises:
        NegativeExponent: If v occurs with a negative exponent in p.
    """
    if den.is_zero():
        raise ZeroDivisionError("Substitution with a zero denominator")
    if p.is_zero():
        return QuadElem(), Poly.one()
    if p.min_degree(v) < 0:
        raise NegativeExponent(f"{v} occurs with a negative exponent")
    coeffs = p.coefficients_in(v)
    d = max(coeffs)
    den_powers = [Poly.one()]
    for _ in range(d):
        den_powers.append(den_powers[-1] * den)
    acc = QuadElem.rational(coeffs[d])
    for k in range(d - 1, -1, -1):
        acc = qmul(acc, num)
        ck = coeffs.get(k)
        if ck is not None:
            acc = acc + ck * den_powers[d - k]
    return acc, den_powers[d]


# ==================================================================
# Denominators of the shape 2^a * M^b * (L*M^2 + 1)^c
# ==================================================================


def vanishes_on_lm2p1(p: Poly) -> bool:
    """True iff p(L = -M^-2) == 0, i.e. (L*M^2 + 1) divides p in the Laurent ring."""
    acc: Dict[Tuple[int, int], int] = {}
    for (e_l, e_m, e_x), c in p.terms().items():
        key = (e_m - 2 * e_l, e_x)
        acc[key] = acc.get(key, 0) + (-c if e_l % 2 else c)
    return not any(acc.values())


_LM2P1_POWERS = [Poly.one()]
_LM2P1_LOCK = threading.Lock()


def lm2p1_power(k: int) -> Poly:
    """(L*M^2 + 1)^k, memoized; the table is extended under a lock."""
    if k < len(_LM2P1_POWERS):
        return _LM2P1_POWERS[k]
    with _LM2P1_LOCK:
        while len(_LM2P1_POWERS) <= k:
            _LM2P1_POWERS.append(_LM2P1_POWERS[-1] * LM2P1)
        return _LM2P1_POWERS[k]


def _normalize(num: QuadElem, two: int, m: int, t: int):
    if num.is_zero():
        return QuadElem(), 0, 0, 0
    a, b = num.a, num.b

    g = math.gcd(a.content(), b.content())
    v2 = (g & -g).bit_length() - 1
    if v2:
        a, b = a.exact_div_int(1 << v2), b.exact_div_int(1 << v2)
        two -= v2

    m_low = min(p.min_degree("M") for p in (a, b) if p)
    if m_low:
        a, b = a.shift((0, -m_low, 0)), b.shift((0, -m_low, 0))
        m -= m_low

    while vanishes_on_lm2p1(a) and vanishes_on_lm2p1(b):
        a = exact_div(a, LM2P1, laurent=True)
        b = exact_div(b, LM2P1, laurent=True)
        t -= 1
    return QuadElem(a, b), two, m, t


@dataclass(frozen=True)
class FactoredFraction:
    """
    num / (2^two * M^m * (L*M^2 + 1)^lm2p1), kept in normal form.

    The numerator never shares a factor 2, a power of M or a factor (L*M^2 + 1)
    with the recorded exponents; exponents may be negative, meaning the factor
    sits in the numerator.
    """

    num: QuadElem
    two: int = 0
    m: int = 0
    lm2p1: int = 0

    def __post_init__(self):
        num, two, m, t = _normalize(self.num, self.two, self.m, self.lm2p1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "two", two)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "lm2p1", t)

    @classmethod
    def one(cls) -> "FactoredFraction":
        return cls(QuadElem.rational(1))

    @classmethod
    def zero(cls) -> "FactoredFraction":
        return cls(QuadElem())

    @classmethod
    def from_quotient(cls, num: QuadElem, den: Poly) -> "FactoredFraction":
        """
        Builds num/den after factoring den as +-2^a M^b (L*M^2 + 1)^c.

        Raises:
            DenominatorShape: If den has any other factor.
        """
        if den.is_zero():
            raise ZeroDivisionError("Zero denominator")
        c = den.content()
        if c & (c - 1):
            raise DenominatorShape(f"Denominator content {c} is not a power of 2", residual=den)
        two = c.bit_length() - 1
        rest = den.exact_div_int(c)
        m = rest.min_degree("M")
        rest = rest.shift((0, -m, 0))
        t = 0
        while vanishes_on_lm2p1(rest):
            rest = exact_div(rest, LM2P1, laurent=True)
            t += 1
        if rest == -1:
            num = -num
        elif rest != 1:
            raise DenominatorShape(f"Denominator factor {rest.to_text()} is not of the form 2^a M^b (LM^2+1)^c", residual=rest)
        return cls(num, two, m, t)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def exponents(self) -> Tuple[int, int, int]:
        return (self.two, self.m, self.lm2p1)

    def times_units(self, two: int = 0, m: int = 0, lm2p1: int = 0) -> "FactoredFraction":
        """Multiplies by 2^two * M^m * (L*M^2 + 1)^lm2p1."""
        return FactoredFraction(self.num, self.two - two, self.m - m, self.lm2p1 - lm2p1)

    def conj(self) -> "FactoredFraction":
        return FactoredFraction(conj(self.num), self.two, self.m, self.lm2p1)

    def __neg__(self):
        return FactoredFraction(-self.num, self.two, self.m, self.lm2p1)

    def __add__(self, other):
        return ff_add(self, _as_ff(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ff_add(self, -_as_ff(other))

    def __mul__(self, other):
        return ff_mul(self, _as_ff(other))

    __rmul__ = __mul__

    def norm(self) -> "FactoredFraction":
        return ff_norm(self)

    def cleared(self) -> QuadElem:
        """
        The numerator times 2^-two M^-m (L*M^2 + 1)^-lm2p1.

        Raises:
            DenominatorShape: If a positive exponent remains.
        """
        if self.two > 0 or self.m > 0 or self.lm2p1 > 0:
            raise DenominatorShape(f"Fraction still has denominator exponents {self.exponents()}")
        factor = Poly.constant(1 << -self.two).shift((0, -self.m, 0)) * lm2p1_power(-self.lm2p1)
        return self.num * factor

    def to_json_obj(self) -> dict:
        obj = self.num.to_json_obj()
        obj["den"] = {"two": self.two, "M": self.m, "LM2p1": self.lm2p1}
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "FactoredFraction":
        den = obj.get("den", {})
        return cls(QuadElem.from_json_obj(obj), int(den.get("two", 0)), int(den.get("M", 0)), int(den.get("LM2p1", 0)))

    def __repr__(self):
        return f"FactoredFraction({self.num!r} / (2^{self.two} M^{self.m} (LM^2+1)^{self.lm2p1}))"


def _as_ff(value) -> FactoredFraction:
    if isinstance(value, FactoredFraction):
        return value
    return FactoredFraction(_as_quad(value))


def ff_mul(f1: FactoredFraction, f2: FactoredFraction) -> FactoredFraction:
    """Numerators multiplied, exponents added, then renormalized."""
    return FactoredFraction(
        qmul(f1.num, f2.num),
        f1.two + f2.two,
        f1.m + f2.m,
        f1.lm2p1 + f2.lm2p1,
    )


def _lift(f: FactoredFraction, two: int, m: int, t: int) -> QuadElem:
    factor = Poly.constant(1 << (two - f.two)).shift((0, m - f.m, 0)) * lm2p1_power(t - f.lm2p1)
    return f.num * factor


def ff_add(f1: FactoredFraction, f2: FactoredFraction) -> FactoredFraction:
    """Common-denominator sum with renormalization."""
    if f1.is_zero():
        return f2
    if f2.is_zero():
        return f1
    two = max(f1.two, f2.two)
    m = max(f1.m, f2.m)
    t = max(f1.lm2p1, f2.lm2p1)
    return FactoredFraction(_lift(f1, two, m, t) + _lift(f2, two, m, t), two, m, t)


def ff_sum(fractions) -> FactoredFraction:
    """
    Sums many fractions over one common denominator and normalizes once.
    """
    fractions = [f for f in fractions if not f.is_zero()]
    if not fractions:
        return FactoredFraction.zero()
    two = max(f.two for f in fractions)
    m = max(f.m for f in fractions)
    t = max(f.lm2p1 for f in fractions)
    total = QuadElem()
    for f in fractions:
        total = total + _lift(f, two, m, t)
    return FactoredFraction(total, two, m, t)


def ff_norm(f: FactoredFraction) -> FactoredFraction:
    """The norm of a fraction: rational numerator, doubled exponents."""
    return FactoredFraction(QuadElem.rational(norm(f.num)), 2 * f.two, 2 * f.m, 2 * f.lm2p1)


__all__ = [
    "DISCRIMINANT",
    "LM2P1",
    "QuadElem",
    "FactoredFraction",
    "qmul",
    "conj",
    "norm",
    "ff_mul",
    "ff_add",
    "ff_sum",
    "ff_norm",
    "substitute_quadratic",
    "vanishes_on_lm2p1",
    "lm2p1_power",
    "VARIABLES",
]
