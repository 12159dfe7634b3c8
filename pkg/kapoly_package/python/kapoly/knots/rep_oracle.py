"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Brute-force oracle. The meridians s, t go to 2x2 matrices over
# Z[M, M^-1, x]; the knot group relation s w = w t and the longitude
# formula must both hold modulo P_2n. Divisibility is certified by a
# zero pseudo-remainder in x after clearing powers of M, and the
# division identity is re-checked at seeded random rational points.
# ==================================================================

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..algebra.poly_core import M, ONE, X, ZERO, Poly, RationalPoint, evaluate, pseudo_divmod
from ..errors import DivisibilityFailure, ReductionFailure
from ..log import get_logger
from .riley_mednykh import rm_recursive

logger = get_logger(__name__)


@dataclass(frozen=True)
class Mat2:
    """The matrix [[a, b], [c, d]] with Poly entries."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    def entries(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Poly:
        return self.a + self.d

    def adjugate(self) -> "Mat2":
        """The inverse when det = 1."""
        return Mat2(self.d, -self.b, -self.c, self.a)


# Lowercase letters are generators, uppercase their inverses.
_INVERSE = {"s": "S", "S": "s", "t": "T", "T": "t"}


@dataclass(frozen=True)
class GroupWord:
    """A word in s, t and their inverses S, T."""

    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - set(_INVERSE)
        if bad:
            raise ValueError(f"Unknown letters {sorted(bad)}; use s, S, t, T")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def reversed(self) -> "GroupWord":
        return GroupWord(self.letters[::-1])

    def inverse(self) -> "GroupWord":
        return GroupWord("".join(_INVERSE[ch] for ch in reversed(self.letters)))

    def power(self, k: int) -> "GroupWord":
        """w^k; negative k repeats the inverse."""
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))


# t s^-1 t s^-1 t^-1 s t^-1 s
W_BASE = GroupWord("tStSTsTs")


def relator_word(n: int) -> GroupWord:
    """w = (t s^-1 t s^-1 t^-1 s t^-1 s)^n."""
    return W_BASE.power(n)


def longitude_word(n: int) -> GroupWord:
    """w w*, with w* the reversal of w."""
    w = relator_word(n)
    return w * w.reversed()


_RHO_S = Mat2(M, ONE, ZERO, M**-1)
_RHO_T = Mat2(M, ZERO, 2 - M**2 - M**-2 - X, M**-1)
_RHO = {"s": _RHO_S, "S": _RHO_S.adjugate(), "t": _RHO_T, "T": _RHO_T.adjugate()}


def rho(letter: str) -> Mat2:
    """The image of a letter; inverses are adjugates."""
    try:
        return _RHO[letter]
    except KeyError:
        raise ValueError(f"Unknown letter {letter!r}") from None


def eval_word(word: GroupWord) -> Mat2:
    """The product of the letter images, left to right."""
    result = Mat2.identity()
    for ch in word.letters:
        result = result @ _RHO[ch]
    return result


def relator_defect(n: int) -> Mat2:
    """rho(s) rho(w) - rho(w) rho(t); zero exactly on representations."""
    w = eval_word(relator_word(n))
    return _RHO_S @ w - w @ _RHO_T


def _clear_m(p: Poly) -> Tuple[Poly, int]:
    if p.is_zero():
        return p, 0
    k = -min(p.min_degree("M"), 0)
    return p.shift((0, k, 0)), k


@dataclass
class OracleReport:
    """Outcome of one oracle check for one n."""

    n: int
    check: str
    passed: bool
    details: Dict[str, object] = field(default_factory=dict)
    residuals: List[Poly] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "check": self.check,
            "passed": self.passed,
            "details": self.details,
            "residuals": [r.to_json_obj() for r in self.residuals],
        }


@dataclass(frozen=True)
class Reduction:
    """M^shift * lc(P)^e * p == quotient * P + remainder, P the modulus."""

    p: Poly
    modulus: Poly
    shift: int
    e: int
    quotient: Poly
    remainder: Poly

    def holds_at(self, pt: RationalPoint) -> bool:
        lc = self.modulus.coefficient_in("x", self.modulus.degree("x"))
        lhs = evaluate(lc, pt) ** self.e * pt.M**self.shift * evaluate(self.p, pt)
        return lhs == evaluate(self.quotient, pt) * evaluate(self.modulus, pt) + evaluate(self.remainder, pt)


def _reduce_mod(p: Poly, modulus: Poly) -> Reduction:
    cleared, shift = _clear_m(p)
    e, quotient, rem = pseudo_divmod(cleared, modulus, "x")
    return Reduction(p, modulus, shift, e, quotient, rem)


def random_points(count: int, seed: int = 0, bound: int = 50) -> List[RationalPoint]:
    """Seeded rational points with nonzero M."""
    rng = random.Random(seed)

    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    points = []
    while len(points) < count:
        m = q()
        if m:
            points.append(RationalPoint(q(), m, q()))
    return points


def _corroborate(reductions: List[Reduction], points: List[RationalPoint]) -> Dict[str, object]:
    agree = all(r.holds_at(pt) for r in reductions for pt in points)
    return {"points": len(points), "agree": agree}


def relator_check(n: int, rm: Optional[Poly] = None, raise_on_failure: bool = True, points: int = 8, seed: int = 0) -> OracleReport:
    """
    Checks that every entry of the relator defect is divisible by P_2n, and that
    each entry agrees with quotient * P_2n at `points` seeded random points.

    Raises:
        DivisibilityFailure: If an entry leaves a nonzero pseudo-remainder, or the
            division identity fails at a sample point.
    """
    modulus = rm if rm is not None else rm_recursive(n).poly
    defect = relator_defect(n)
    report = OracleReport(n, "relator", True, {"entries": []})
    reductions = []
    for name, entry in zip(("11", "12", "21", "22"), defect.entries()):
        red = _reduce_mod(entry, modulus)
        reductions.append(red)
        rem = red.remainder
        report.details["entries"].append({"entry": name, "M_shift": red.shift, "lc_power": red.e, "deg_x": entry.degree("x")})
        if rem:
            report.passed = False
            report.residuals.append(rem)
            logger.warning("Relator entry %s for n=%d leaves a remainder with %d terms", name, n, len(rem))
            if raise_on_failure:
                raise DivisibilityFailure(f"Relator entry {name} is not divisible by P_{2 * n}", n=n, entry=name, residual=rem)
    report.details["corroboration"] = _corroborate(reductions, random_points(points, seed))
    if not report.details["corroboration"]["agree"]:
        report.passed = False
        logger.warning("Relator division identity for n=%d fails at a sample point", n)
        if raise_on_failure:
            raise DivisibilityFailure(f"Relator division identity for n={n} fails at a sample point", n=n)
    logger.info("Relator check for n=%d: %s", n, "pass" if report.passed else "FAIL")
    return report


def longitude_relation(ell: Poly) -> Poly:
    """
    The longitude formula cross-multiplied, with L replaced by `ell`:
    ell M^2 (M^4 - M^2 + (M^-2 + 2M^2 - 1)x + x^2) + (M^-4 - M^-2 + (2M^-2 + M^2 - 1)x + x^2).
    """
    den = M**4 - M**2 + (M**-2 + 2 * M**2 - 1) * X + X**2
    num = M**-4 - M**-2 + (2 * M**-2 + M**2 - 1) * X + X**2
    return ell * M**2 * den + num


def longitude_check(n: int, rm: Optional[Poly] = None, raise_on_failure: bool = True, points: int = 8, seed: int = 0) -> OracleReport:
    """
    Checks that the longitude formula holds for rho(w w*)_11 modulo P_2n.

    Raises:
        ReductionFailure: If the relation leaves a nonzero pseudo-remainder, or the
            division identity fails at a sample point.
    """
    modulus = rm if rm is not None else rm_recursive(n).poly
    ell_matrix = eval_word(longitude_word(n))
    relation = longitude_relation(ell_matrix.a)
    red = _reduce_mod(relation, modulus)
    rem = red.remainder
    corroboration = _corroborate([red], random_points(points, seed))
    report = OracleReport(
        n,
        "longitude",
        not rem and corroboration["agree"],
        {"M_shift": red.shift, "lc_power": red.e, "det_is_one": ell_matrix.det() == 1, "corroboration": corroboration},
    )
    if rem:
        report.residuals.append(rem)
        if raise_on_failure:
            raise ReductionFailure(f"Longitude relation does not vanish modulo P_{2 * n}", n=n, residual=rem)
    elif not report.passed and raise_on_failure:
        raise ReductionFailure(f"Longitude division identity for n={n} fails at a sample point", n=n)
    logger.info("Longitude check for n=%d: %s", n, "pass" if report.passed else "FAIL")
    return report


__all__ = [
    "Mat2",
    "GroupWord",
    "W_BASE",
    "relator_word",
    "longitude_word",
    "rho",
    "eval_word",
    "relator_defect",
    "relator_check",
    "random_points",
    "Reduction",
    "longitude_relation",
    "longitude_check",
    "OracleReport",
]
