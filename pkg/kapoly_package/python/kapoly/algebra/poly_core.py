"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Sparse multivariate Laurent polynomials over Z in the fixed
# variables (L, M, x). This is the substrate every other module
# computes with.
#
# Monomials are stored packed into a single Python int, one 32-bit
# field per variable with a bias of 2^31, so that a monomial product
# is one integer addition and a monomial quotient one subtraction.
# Exponents are bounded by 2^30 in absolute value; every product
# checks that bound before it packs.
# ==================================================================

import heapq
import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from ..errors import ExponentOverflow, NegativeExponent, NotDivisible, ZeroDenominator


class VarId(IntEnum):
    """Index of a variable in the fixed order L < M < x."""

    L = 0
    M = 1
    x = 2


VARIABLES = ("L", "M", "x")
NVARS = 3

Monomial = Tuple[int, int, int]

_FIELD_BITS = 32
_MASK = (1 << _FIELD_BITS) - 1
_OFFSET = 1 << (_FIELD_BITS - 1)
EXPONENT_LIMIT = 1 << (_FIELD_BITS - 2)


def _pack(mono) -> int:
    e_l, e_m, e_x = mono
    if abs(e_l) >= EXPONENT_LIMIT or abs(e_m) >= EXPONENT_LIMIT or abs(e_x) >= EXPONENT_LIMIT:
        raise ExponentOverflow(f"Exponent vector {tuple(mono)} is outside +-2^{_FIELD_BITS - 2}")
    return ((e_l + _OFFSET) << (2 * _FIELD_BITS)) | ((e_m + _OFFSET) << _FIELD_BITS) | (e_x + _OFFSET)


def _unpack(key: int) -> Monomial:
    return (
        (key >> (2 * _FIELD_BITS)) - _OFFSET,
        ((key >> _FIELD_BITS) & _MASK) - _OFFSET,
        (key & _MASK) - _OFFSET,
    )


_UNIT_KEY = _pack((0, 0, 0))
_STRIDES = (1 << (2 * _FIELD_BITS), 1 << _FIELD_BITS, 1)


def monomial_key(mono: Monomial):
    """Sort key of the canonical order: graded, ties broken lexicographically."""
    return (sum(mono), tuple(mono))


def _var_index(v) -> int:
    if isinstance(v, str):
        return VARIABLES.index(v)
    return int(v)


class Poly:
    """
    An immutable sparse Laurent polynomial in L, M, x with integer coefficients.

    Two polynomials are equal exactly when their term maps are equal; no zero
    coefficient is ever stored.

    Args:
        terms (Mapping[tuple, int], optional): Exponent vector -> coefficient.
    """

    __slots__ = ("_terms", "_bound", "_hash", "_exponents")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        packed = {}
        bound = 0
        for mono, coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff == 0:
                continue
            if len(mono) != NVARS:
                raise ValueError(f"Monomial {mono} must have {NVARS} exponents")
            mono = tuple(int(e) for e in mono)
            packed[_pack(mono)] = coeff
            bound = max(bound, max(abs(e) for e in mono))
        self._terms = packed
        self._bound = bound
        self._hash = None
        self._exponents = None

    @classmethod
    def _from_packed(cls, packed: Dict[int, int], bound: int) -> "Poly":
        obj = cls.__new__(cls)
        obj._terms = packed
        obj._bound = bound
        obj._hash = None
        obj._exponents = None
        return obj

    # --- Constructors ---
    @classmethod
    def zero(cls) -> "Poly":
        return cls._from_packed({}, 0)

    @classmethod
    def constant(cls, c: int) -> "Poly":
        c = int(c)
        return cls._from_packed({_UNIT_KEY: c} if c else {}, 0)

    @classmethod
    def one(cls) -> "Poly":
        return cls.constant(1)

    @classmethod
    def monomial(cls, exponents, coeff: int = 1) -> "Poly":
        return cls({tuple(exponents): coeff})

    @classmethod
    def variable(cls, v, power: int = 1) -> "Poly":
        exps = [0, 0, 0]
        exps[_var_index(v)] = power
        return cls.monomial(exps)

    # --- Basic queries ---
    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Dict[Monomial, int]:
        """Returns a fresh exponent-vector -> coefficient dictionary."""
        return {_unpack(k): c for k, c in self._terms.items()}

    def sorted_terms(self):
        """Terms in descending canonical order."""
        return sorted(self.terms().items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term")
        return max(self.terms().items(), key=lambda t: monomial_key(t[0]))

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _UNIT_KEY in self._terms)

    def constant_value(self) -> int:
        return self._terms.get(_UNIT_KEY, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def exponent_array(self) -> np.ndarray:
        """The exponent vectors as an (nterms, 3) int64 array."""
        if self._exponents is None:
            arr = np.array([_unpack(k) for k in self._terms], dtype=np.int64)
            self._exponents = arr.reshape(-1, NVARS)
        return self._exponents

    def degree(self, v) -> Optional[int]:
        """Highest exponent of `v`; None for the zero polynomial."""
        if not self._terms:
            return None
        return int(self.exponent_array()[:, _var_index(v)].max())

    def min_degree(self, v) -> Optional[int]:
        """Lowest exponent of `v`; None for the zero polynomial."""
        if not self._terms:
            return None
        return int(self.exponent_array()[:, _var_index(v)].min())

    def is_polynomial(self) -> bool:
        """True iff no exponent of any monomial is negative."""
        if not self._terms:
            return True
        return bool((self.exponent_array() >= 0).all())

    def involves(self, v) -> bool:
        if not self._terms:
            return False
        return bool((self.exponent_array()[:, _var_index(v)] != 0).any())

    def content(self) -> int:
        """The gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, self._terms.values(), 0)

    def monomial_content(self) -> Monomial:
        """Componentwise minimum exponent vector."""
        if not self._terms:
            return (0, 0, 0)
        return tuple(int(e) for e in self.exponent_array().min(axis=0))

    # --- Equality ---
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({_UNIT_KEY: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- Ring operations ---
    def __neg__(self):
        return Poly._from_packed({k: -c for k, c in self._terms.items()}, self._bound)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly._from_packed(out, max(self._bound, other._bound))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._from_packed(_mul_packed(self, other), self._bound + other._bound)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        return power(self, k)

    def scale(self, c: int) -> "Poly":
        c = int(c)
        if c == 0:
            return Poly.zero()
        return Poly._from_packed({k: v * c for k, v in self._terms.items()}, self._bound)

    def shift(self, exponents) -> "Poly":
        """Multiplies by the Laurent monomial with the given exponent vector."""
        exponents = tuple(exponents)
        if not any(exponents):
            return self
        _check_bound(self._bound + max(abs(e) for e in exponents))
        offset = _pack(exponents) - _UNIT_KEY
        return Poly._from_packed(
            {k + offset: c for k, c in self._terms.items()},
            self._bound + max(abs(e) for e in exponents),
        )

    def exact_div_int(self, c: int) -> "Poly":
        """Divides every coefficient by the integer `c`, which must divide them all."""
        out = {}
        for k, v in self._terms.items():
            q, r = divmod(v, c)
            if r:
                raise NotDivisible(f"Coefficient {v} is not divisible by {c}", self, c)
            out[k] = q
        return Poly._from_packed(out, self._bound)

    # --- Structure in one variable ---
    def coefficients_in(self, v) -> Dict[int, "Poly"]:
        """
        Splits the polynomial by powers of `v`.

        Returns:
            dict: exponent k -> coefficient Poly (free of `v`).
        """
        idx = _var_index(v)
        stride = _STRIDES[idx]
        groups: Dict[int, Dict[int, int]] = {}
        for key, c in self._terms.items():
            e = _unpack(key)[idx]
            groups.setdefault(e, {})[key - e * stride] = c
        return {e: Poly._from_packed(g, self._bound) for e, g in groups.items()}

    def coefficient_in(self, v, k: int) -> "Poly":
        """The coefficient of v^k (the zero polynomial when absent)."""
        idx = _var_index(v)
        stride = _STRIDES[idx]
        out = {}
        for key, c in self._terms.items():
            if _unpack(key)[idx] == k:
                out[key - k * stride] = c
        return Poly._from_packed(out, self._bound)

    def specialize(self, v, value: int) -> "Poly":
        """
        Substitutes the integer `value` for `v`.

        Raises:
            ZeroDenominator: If `value` is 0 and `v` occurs with a negative exponent.
        """
        value = int(value)
        idx = _var_index(v)
        stride = _STRIDES[idx]
        out: Dict[int, int] = {}
        for key, c in self._terms.items():
            e = _unpack(key)[idx]
            if e < 0 and value == 0:
                raise ZeroDenominator(f"{VARIABLES[idx]}^{e} evaluated at 0")
            if e >= 0:
                factor = value**e
                if factor == 0:
                    continue
                c = c * factor
            else:
                factor = value ** (-e)
                if c % factor:
                    raise NotDivisible(f"Specializing {VARIABLES[idx]}={value} leaves a fraction")
                c = c // factor
            k = key - e * stride
            v_new = out.get(k, 0) + c
            if v_new:
                out[k] = v_new
            else:
                out.pop(k, None)
        return Poly._from_packed(out, self._bound)

    # --- Text ---
    def to_text(self, terms=None) -> str:
        """Plain text such as `L^4*M^8 - 2*L^3*M^12 + 1` in the given term order."""
        items = self.sorted_terms() if terms is None else terms
        if not items:
            return "0"
        out = []
        for i, (mono, c) in enumerate(items):
            factors = []
            for name, e in zip(VARIABLES, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    # --- Canonical JSON ---
    def to_json_obj(self) -> dict:
        """The canonical JSON object, terms sorted descending."""
        return {
            "vars": list(VARIABLES),
            "terms": [{"e": list(mono), "c": str(c)} for mono, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Poly":
        if list(obj.get("vars", VARIABLES)) != list(VARIABLES):
            raise ValueError(f"Unsupported variable list {obj.get('vars')}")
        terms: Dict[Monomial, int] = {}
        for term in obj.get("terms", []):
            mono = tuple(int(e) for e in term["e"])
            if mono in terms:
                raise ValueError(f"Duplicate monomial {mono} in polynomial JSON")
            terms[mono] = int(term["c"])
        return cls(terms)


PolyLike = Union[Poly, int]


def _coerce(value) -> Optional[Poly]:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.constant(value)
    return None


def _check_bound(bound: int):
    if bound >= EXPONENT_LIMIT:
        raise ExponentOverflow(f"Product exponents may reach {bound}, beyond +-2^{_FIELD_BITS - 2}")


def _mul_packed(p: Poly, q: Poly) -> Dict[int, int]:
    a, b = p._terms, q._terms
    if not a or not b:
        return {}
    _check_bound(p._bound + q._bound)
    if len(a) < len(b):
        a, b = b, a
    out: Dict[int, int] = {}
    get = out.get
    for kb, cb in b.items():
        shift = kb - _UNIT_KEY
        for ka, ca in a.items():
            k = ka + shift
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


# ==================================================================
# Module-level operations
# ==================================================================


def add(p: Poly, q: Poly) -> Poly:
    """Term-wise sum in canonical form."""
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    """Exact distributive product."""
    return p * q


def power(p: Poly, k: int) -> Poly:
    """
    Returns p^k by square-and-multiply; p^0 = 1.

    Negative k is allowed only for the unit monomials +-L^a M^b x^c.

    Raises:
        ValueError: If k is negative and p is not a unit monomial.
    """
    if k < 0:
        if p.is_monomial() and abs(p.leading_term()[1]) == 1:
            (mono, c), = p.terms().items()
            return Poly.monomial(tuple(e * k for e in mono), c if k % 2 else 1)
        raise ValueError(f"Exponent must be nonnegative, got {k}")
    if k == 0:
        return Poly.one()
    if p.is_monomial():
        (mono, c), = p.terms().items()
        return Poly.monomial(tuple(e * k for e in mono), c**k)
    result = None
    base = p
    while k:
        if k & 1:
            result = base if result is None else result * base
        k >>= 1
        if k:
            base = base * base
    return result


def binom_or_zero(a: int, b: int) -> int:
    """C(a, b) for 0 <= b <= a, and 0 for every out-of-range index."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def coefficient_in(p: Poly, v, k: int) -> Poly:
    return p.coefficient_in(v, k)


def _order_key(key: int):
    e_l, e_m, e_x = _unpack(key)
    return (-(e_l + e_m + e_x), -e_l, -e_m, -e_x)


def exact_div(p: Poly, q: Poly, laurent: Optional[bool] = None) -> Poly:
    """
    Returns r with r*q == p, by leading-term reduction in the canonical order.

    When both operands are polynomials the division happens in Z[L, M, x], so the
    quotient must be a polynomial too; otherwise it happens in the Laurent ring.
    `laurent` pins the ring explicitly.

    Raises:
        ZeroDivisionError: If q is zero.
        NotDivisible: If no such r with integer coefficients exists.
    """
    if q.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if p.is_zero():
        return Poly.zero()
    if laurent is None:
        laurent = not (p.is_polynomial() and q.is_polynomial())

    lo = p.exponent_array().min(axis=0) - q.exponent_array().min(axis=0)
    hi = p.exponent_array().max(axis=0) - q.exponent_array().max(axis=0)
    if not laurent:
        lo = np.maximum(lo, 0)
    if (lo > hi).any():
        raise NotDivisible("Exponent ranges exclude any quotient", p, q)
    lo = [int(e) for e in lo]
    hi = [int(e) for e in hi]

    lead_mono, lead_c = q.leading_term()
    lead_key = _pack(lead_mono)
    q_terms = list(q._terms.items())

    rem = dict(p._terms)
    heap = [(_order_key(k), k) for k in rem]
    heapq.heapify(heap)
    quotient: Dict[int, int] = {}
    while heap:
        _, key = heapq.heappop(heap)
        c = rem.get(key)
        if c is None:
            continue
        qc, r = divmod(c, lead_c)
        if r:
            raise NotDivisible(f"Coefficient {c} is not divisible by leading coefficient {lead_c}", p, q)
        t = key - lead_key + _UNIT_KEY
        t_mono = _unpack(t)
        if any(t_mono[i] < lo[i] or t_mono[i] > hi[i] for i in range(NVARS)):
            raise NotDivisible("Reduction left the admissible quotient range", p, q)
        quotient[t] = qc
        shift = t - _UNIT_KEY
        for k, cq in q_terms:
            kk = k + shift
            v = rem.get(kk, 0) - qc * cq
            if v:
                if kk not in rem:
                    heapq.heappush(heap, (_order_key(kk), kk))
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return Poly._from_packed(quotient, p._bound + q._bound)


def divides(q: Poly, p: Poly, laurent: Optional[bool] = None) -> bool:
    """True iff exact_div(p, q) succeeds."""
    try:
        exact_div(p, q, laurent=laurent)
    except NotDivisible:
        return False
    return True


def substitute_rational(p: Poly, v, num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    """
    Substitutes v := num/den by Horner's scheme.

    Returns:
        (N, den^d) with d = deg_v(p) and p(v := num/den) = N / den^d.

    Raises:
        ZeroDivisionError: If den is zero.
        NegativeExponent: If v occurs with a negative exponent in p.
    """
    if den.is_zero():
        raise ZeroDivisionError("Substitution with a zero denominator")
    if p.is_zero():
        return Poly.zero(), Poly.one()
    if p.min_degree(v) < 0:
        raise NegativeExponent(f"{VARIABLES[_var_index(v)]} occurs with a negative exponent")
    coeffs = p.coefficients_in(v)
    d = max(coeffs)
    den_powers = [Poly.one()]
    for _ in range(d):
        den_powers.append(den_powers[-1] * den)
    acc = coeffs[d]
    for k in range(d - 1, -1, -1):
        acc = acc * num
        ck = coeffs.get(k)
        if ck is not None:
            acc = acc + ck * den_powers[d - k]
    return acc, den_powers[d]


def pseudo_divmod(p: Poly, d: Poly, v) -> Tuple[int, Poly, Poly]:
    """
    Pseudo-division in `v` over the ring of the remaining variables.

    Returns:
        (e, quotient, remainder) with lc(d)^e * p == quotient * d + remainder and
        deg_v(remainder) < deg_v(d).

    Raises:
        ZeroDivisionError: If d is zero.
        NegativeExponent: If v occurs with a negative exponent in p or d.
    """
    if d.is_zero():
        raise ZeroDivisionError("Pseudo-division by the zero polynomial")
    for operand in (p, d):
        if operand and operand.min_degree(v) < 0:
            raise NegativeExponent(f"{VARIABLES[_var_index(v)]} occurs with a negative exponent")
    dd = d.degree(v)
    lc = d.coefficient_in(v, dd)
    quotient = Poly.zero()
    rem = p
    e = 0
    while rem and rem.degree(v) >= dd:
        k = rem.degree(v)
        exps = [0, 0, 0]
        exps[_var_index(v)] = k - dd
        t = rem.coefficient_in(v, k).shift(exps)
        quotient = lc * quotient + t
        rem = lc * rem - t * d
        e += 1
    return e, quotient, rem


@dataclass(frozen=True)
class RationalPoint:
    """An exact rational assignment of L, M and x; M must be nonzero."""

    L: Fraction = Fraction(0)
    M: Fraction = Fraction(1)
    x: Fraction = Fraction(0)

    def __post_init__(self):
        for name in VARIABLES:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.M == 0:
            raise ValueError("The M-coordinate of a rational point must be nonzero")

    def coordinates(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.L, self.M, self.x)


def evaluate(p: Poly, pt: RationalPoint) -> Fraction:
    """
    Exact rational value of p at pt.

    Raises:
        ZeroDenominator: If a negative exponent meets a zero coordinate.
    """
    coords = pt.coordinates()
    cache = [dict() for _ in range(NVARS)]

    def pw(i, e):
        cached = cache[i].get(e)
        if cached is None:
            if e < 0 and coords[i] == 0:
                raise ZeroDenominator(f"{VARIABLES[i]}^{e} evaluated at 0")
            cached = coords[i] ** e
            cache[i][e] = cached
        return cached

    total = Fraction(0)
    for mono, c in p.terms().items():
        total += c * pw(0, mono[0]) * pw(1, mono[1]) * pw(2, mono[2])
    return total


def poly_sum(polys: Iterable[Poly]) -> Poly:
    """Sums many polynomials into one accumulator."""
    acc: Dict[int, int] = {}
    bound = 0
    for p in polys:
        bound = max(bound, p._bound)
        for k, c in p._terms.items():
            acc[k] = acc.get(k, 0) + c
    return Poly._from_packed({k: c for k, c in acc.items() if c}, bound)


# Frequently used variables
L = Poly.variable(VarId.L)
M = Poly.variable(VarId.M)
X = Poly.variable(VarId.x)
ONE = Poly.one()
ZERO = Poly.zero()
