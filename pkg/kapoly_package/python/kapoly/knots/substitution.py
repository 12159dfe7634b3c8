"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# The longitude substitution x = N_x / (2(L M^6 + M^4)), N_x linear in z,
# and the four building blocks it turns x, S, R and the closed-form
# tail into. q_2n(z) is P_2n with x substituted.
# ==================================================================

from dataclasses import dataclass
from typing import Dict, Optional

from ..algebra.poly_core import L, M, ONE, X, Poly
from ..algebra.quad_ext import LM2P1, FactoredFraction, QuadElem, substitute_quadratic
from ..errors import IdentityFailure
from ..log import get_logger
from .riley_mednykh import R_FACTOR, S_FACTOR, RMPolynomial, rm_closed, rm_recursive

logger = get_logger(__name__)

# H = -2LM^2 + L + M^2 + z - 2 carries the parity of the tail factor.
H_ELEM = QuadElem(-2 * L * M**2 + L + M**2 - 2, ONE)
F1_ELEM = QuadElem(-2 * L * M**6 + L * M**4 - L * M**2 - M**4 + M**2 - 2, M**2)
F2_ELEM = QuadElem(L * M**2 + L + M**2 + 1, ONE)
F3_ELEM = QuadElem(-3 * L * M**2 + L + M**2 - 3, ONE)


@dataclass(frozen=True)
class XSubstitution:
    """x = num / den with num = (-2LM^8 + LM^6 - LM^4 - M^6 + M^4 - 2M^2) + M^4 z."""

    num: QuadElem
    den: Poly

    # den = 2^1 * M^4 * (L*M^2 + 1)^1
    den_exponents = (1, 4, 1)

    def __post_init__(self):
        two, m, t = self.den_exponents
        if Poly.constant(1 << two).shift((0, m, 0)) * LM2P1**t != self.den:
            raise IdentityFailure("Substitution denominator is not 2 M^4 (L M^2 + 1)", residual=self.den)

    def as_fraction(self) -> FactoredFraction:
        return FactoredFraction(self.num, *self.den_exponents)

    def substitute(self, p: Poly) -> FactoredFraction:
        """p(x := num/den) as a normalized fraction."""
        if p.is_zero():
            return FactoredFraction.zero()
        d = p.degree("x")
        if d <= 0:
            return FactoredFraction(QuadElem.rational(p))
        numer, _ = substitute_quadratic(p, "x", self.num, self.den)
        two, m, t = self.den_exponents
        logger.debug("Substituted x into a degree %d polynomial, %d + %d terms", d, len(numer.a), len(numer.b))
        return FactoredFraction(numer, two * d, m * d, t * d)


X_SUBSTITUTION = XSubstitution(
    QuadElem(-2 * L * M**8 + L * M**6 - L * M**4 - M**6 + M**4 - 2 * M**2, M**4),
    2 * (L * M**6 + M**4),
)


def tail_numerator(i: int, negative: bool = False) -> QuadElem:
    """
    The numerator G_i of the substituted tail factor, over 2(L M^2 + 1) and times M^2.

    For n >= 0 it is (-1)^(i+1) (L M^2 + 1) + H; for n < 0 it is (-1)^i H - (L M^2 + 1).
    """
    t = QuadElem.rational(LM2P1)
    if negative:
        return (H_ELEM if i % 2 == 0 else -H_ELEM) - t
    return (t if i % 2 else -t) + H_ELEM


def building_blocks() -> Dict[str, FactoredFraction]:
    """
    The substituted values of x, S, R and the two tails, in closed form.

    Keys: "x", "S", "R", "tail_odd", "tail_even".
    """
    return {
        "x": FactoredFraction(F1_ELEM, 1, 2, 1),
        "S": FactoredFraction(F3_ELEM, 1, -2, 1),
        "R": FactoredFraction(F2_ELEM, 1, -2, 1),
        "tail_odd": FactoredFraction(tail_numerator(1), 1, -2, 1),
        "tail_even": FactoredFraction(tail_numerator(0), 1, -2, 1),
    }


def check_building_blocks(sub: XSubstitution = X_SUBSTITUTION):
    """
    Substitutes x into x, S, R and the tails and compares with `building_blocks`.

    Raises:
        IdentityFailure: On the first block that differs.
    """
    direct = {
        "x": X,
        "S": S_FACTOR,
        "R": R_FACTOR,
        "tail_odd": S_FACTOR + M**2,
        "tail_even": S_FACTOR,
    }
    expected = building_blocks()
    for name, poly in direct.items():
        got = sub.substitute(poly)
        if got != expected[name]:
            raise IdentityFailure(f"Building block {name} differs after substitution", residual=(got - expected[name]).num)
    # Same value over the denominator 2M^4(LM^2+1).
    wide = FactoredFraction.from_quotient(QuadElem(M**2, Poly.zero()) * F1_ELEM, 2 * M**4 * LM2P1)
    if wide != expected["x"]:
        raise IdentityFailure("x does not reduce to F1 / (2 M^2 (L M^2 + 1))")
    logger.info("Building-block identities hold")


_RM_BUILDERS = {"recursive": rm_recursive, "closed": rm_closed}


def q_of_z(n: int, rm: Optional[RMPolynomial] = None, route: str = "recursive") -> FactoredFraction:
    """
    q_2n(z): P_2n with x substituted.

    Args:
        n (int): Knot index, the value at 0 is 1.
        rm (RMPolynomial): Precomputed P_2n; built from `route` when omitted.
        route (str): "recursive" or "closed", selects how P_2n is built.

    Raises:
        ValueError: If `route` is not one of the two, or `rm` is not P_2n.
    """
    if route not in _RM_BUILDERS:
        raise ValueError(f"Unknown route '{route}'. Available: {sorted(_RM_BUILDERS)}")
    if n == 0:
        return FactoredFraction.one()
    if rm is None:
        rm = _RM_BUILDERS[route](n)
    if rm.n != n:
        raise ValueError(f"P_{2 * rm.n} passed for n={n}")
    return X_SUBSTITUTION.substitute(rm.poly)


__all__ = [
    "XSubstitution",
    "X_SUBSTITUTION",
    "H_ELEM",
    "F1_ELEM",
    "F2_ELEM",
    "F3_ELEM",
    "tail_numerator",
    "building_blocks",
    "check_building_blocks",
    "q_of_z",
]
