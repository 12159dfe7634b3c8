"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# The A-polynomial A_2n(L, M) as a norm. Every route produces a
# FactoredFraction r and a unit multiplier U = 2^a M^b (LM^2+1)^c with
# A_2n = U * norm(r); `materialize` turns that product into a Poly and
# rejects anything that is not a polynomial free of redundant factors.
#
# For n < 0 the closed form carries a half-integer power of
# (LM^2 + 1). It is folded away: s_2n = (LM^2 + 1)^(1/2) p_2n has only
# integer exponents and A_2n = (LM^2 + 1)^-1 norm(s_2n).
# ==================================================================

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..algebra.poly_core import M, Poly, binom_or_zero
from ..algebra.quad_ext import DISCRIMINANT, FactoredFraction, QuadElem, ff_norm, ff_sum
from ..errors import IdentityFailure, NotPolynomial, RedundantFactor
from ..log import get_logger
from ..storage.serialization import canonical_hash
from .substitution import F1_ELEM, F2_ELEM, F3_ELEM, tail_numerator

logger = get_logger(__name__)

ROUTES = ("closed", "recursive-subst", "closed-subst")


def stated_negative_multiplier(n: int) -> Tuple[int, int, int]:
    """
    The multiplier M^(8n+4) (LM^2+1)^(-4n+1) as printed for n < 0.

    Applying it to norm(q_2n) leaves A_2n times (LM^2 + 1)^2; the verifier
    reports this instead of using it.
    """
    return (0, 8 * n + 4, -4 * n + 1)


def discriminant() -> Poly:
    """The radicand D of u; z^2 = D in the quadratic extension."""
    return DISCRIMINANT


def q_multiplier(n: int) -> Tuple[int, int, int]:
    """
    Exponents (two, M, LM2p1) of the unit that turns norm(q_2n) into A_2n.

    M^-8n (LM^2+1)^4n for n > 0 and M^(8n+4) (LM^2+1)^(-4n-1) for n < 0.
    """
    if n > 0:
        return (0, -8 * n, 4 * n)
    if n < 0:
        return (0, 8 * n + 4, -4 * n - 1)
    return (0, 0, 0)


def closed_multiplier(n: int) -> Tuple[int, int, int]:
    """Exponents of the unit that turns norm(p_2n), or norm(s_2n) for n < 0, into A_2n."""
    return (0, 0, -1) if n < 0 else (0, 0, 0)


def _index_parts(i: int) -> Tuple[int, int, int]:
    # ceil(i/2), floor(i/2), floor((i-1)/2)
    return (i + 1) // 2, i // 2, (i - 1) // 2


class _PowerCache:
    """Successive powers of one QuadElem."""

    def __init__(self, base: QuadElem):
        self._powers = [QuadElem.rational(1)]
        self._base = base

    def __getitem__(self, k: int) -> QuadElem:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self._base)
        return self._powers[k]


def _closed_sum(n: int) -> FactoredFraction:
    negative = n < 0
    f1, f2, f3 = _PowerCache(F1_ELEM), _PowerCache(F2_ELEM), _PowerCache(F3_ELEM)
    summands: List[FactoredFraction] = []
    for i in range(2 * abs(n) + 1):
        a, fl, b = _index_parts(i)
        if negative:
            coeff = binom_or_zero(b - n, i)
            m2 = -fl - 2 * a + i - n
            t_num = -2 * a - i - 2 * n
        else:
            coeff = binom_or_zero(fl + n, i)
            m2 = -fl - 2 * a + i + n
            t_num = -2 * a - i + 2 * n
        if coeff == 0:
            continue
        if i == 0:
            # F3^-1 against the tail G_0, which equals F3.
            body = QuadElem.rational(coeff)
        else:
            body = f1[a] * f2[i] * f3[b] * tail_numerator(i, negative) * coeff
        summands.append(FactoredFraction(body, 2 * a + i, -2 * m2, -t_num))
    return ff_sum(summands)


def p_of_z(n: int) -> FactoredFraction:
    """
    p_2n(z) for n >= 0 from the closed binomial sum, as a normalized fraction.

    Raises:
        ValueError: For n < 0; use `s_of_z`.
    """
    if n < 0:
        raise ValueError("p_2n has a half-integer prefactor for n < 0; use s_of_z")
    if n == 0:
        return FactoredFraction.one()
    return _closed_sum(n)


def s_of_z(n: int) -> FactoredFraction:
    """
    The folded value s_2n(z) = (LM^2 + 1)^(1/2) p_2n(z) for n < 0.

    Raises:
        ValueError: For n >= 0.
    """
    if n >= 0:
        raise ValueError("s_2n is defined for n < 0")
    return _closed_sum(n)


def closed_fraction(n: int) -> FactoredFraction:
    """p_2n for n >= 0 and s_2n for n < 0."""
    return p_of_z(n) if n >= 0 else s_of_z(n)


@dataclass(frozen=True)
class APolyRecord:
    """A computed A-polynomial with its provenance."""

    n: int
    a: Poly
    route: str
    hash: str = field(default="")

    def __post_init__(self):
        if not self.hash:
            object.__setattr__(self, "hash", canonical_hash(self.a.to_json_obj()))

    def summary(self) -> Dict[str, int]:
        return {
            "terms": len(self.a),
            "deg_L": self.a.degree("L") or 0,
            "deg_M": self.a.degree("M") or 0,
        }

    def to_json_obj(self) -> dict:
        return {"n": self.n, "route": self.route, "hash": self.hash, "a": self.a.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj) -> "APolyRecord":
        return cls(int(obj["n"]), Poly.from_json_obj(obj["a"]), obj["route"], obj.get("hash", ""))


def materialize(product: FactoredFraction, n: int, route: str) -> Poly:
    """
    Turns a normalized U * norm(r) into the A-polynomial.

    Raises:
        NotPolynomial: If a denominator exponent stays positive, or x, z or a
            negative exponent survives.
        RedundantFactor: If 2, M, (LM^2 + 1) or L divides the result.
    """
    if not product.num.is_rational():
        raise NotPolynomial("A norm kept a z-part", n=n, route=route, residual=product.num.b)
    two, m, t = product.exponents()
    if two > 0 or m > 0 or t > 0:
        raise NotPolynomial(f"Denominator 2^{two} M^{m} (LM^2+1)^{t} left after clearing", n=n, route=route, residual=product.num.a)
    a = product.num.a
    for name, exp in (("M", m), ("LM^2+1", t), ("2", two)):
        if exp < 0:
            raise RedundantFactor(f"{name} divides A_{2 * n} to the power {-exp}", n=n, route=route, factor=name, residual=a)
    if a.involves("x"):
        raise NotPolynomial("x survived the substitution", n=n, route=route, residual=a)
    if not a.is_polynomial():
        raise NotPolynomial("Negative exponent in A", n=n, route=route, residual=a)
    low_l = a.min_degree("L")
    if low_l:
        raise RedundantFactor(f"L divides A_{2 * n} to the power {low_l}", n=n, route=route, factor="L", residual=a)
    return a


def check_term_claims(a: Poly, n: int):
    """
    The identities that rule out redundant factors: A(0, M) = M^8n for n > 0;
    a nonzero constant term and a nonzero L^(3(|n|-1)+1) M^0 term for n < 0.

    Raises:
        IdentityFailure: If a claim fails.
    """
    if n > 0:
        at_zero = a.specialize("L", 0)
        if at_zero != M ** (8 * n):
            raise IdentityFailure(f"A_{2 * n}(0, M) is not M^{8 * n}", residual=at_zero - M ** (8 * n), n=n)
    elif n < 0:
        terms = a.terms()
        if terms.get((0, 0, 0), 0) == 0:
            raise IdentityFailure(f"A_{2 * n} has no constant term", residual=a, n=n)
        k = 3 * (-n - 1) + 1
        if terms.get((k, 0, 0), 0) == 0:
            raise IdentityFailure(f"A_{2 * n} has no L^{k} term", residual=a, n=n)


def a_from_norm(fraction: FactoredFraction, multiplier: Tuple[int, int, int], n: int, route: str) -> APolyRecord:
    """A_2n = multiplier * norm(fraction), materialized and checked."""
    product = ff_norm(fraction).times_units(*multiplier)
    a = materialize(product, n, route)
    check_term_claims(a, n)
    record = APolyRecord(n, a, route)
    logger.info("A_%d via %s: %d terms, hash %s", 2 * n, route, len(a), record.hash[:12])
    return record


def a_polynomial(n: int, route: str = "closed") -> APolyRecord:
    """
    A_2n(L, M) by the named route.

    Raises:
        ValueError: For n = 0 or an unknown route.
        NotPolynomial, RedundantFactor: If the result is not a clean polynomial.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    from ..routes import get_route

    return get_route(route).compute(n)


def _compute_task(args) -> dict:
    n, route = args
    return a_polynomial(n, route).to_json_obj()


def compute_routes(n: int, routes: Iterable[str] = ROUTES, parallel: bool = True, max_workers: Optional[int] = None) -> Dict[str, APolyRecord]:
    """
    Runs several routes for the same n, in worker processes when `parallel`.

    Returns:
        dict: route name -> APolyRecord.
    """
    routes = list(routes)
    if parallel and len(routes) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            objs = list(pool.map(_compute_task, [(n, r) for r in routes]))
        return {obj["route"]: APolyRecord.from_json_obj(obj) for obj in objs}
    return {r: a_polynomial(n, r) for r in routes}


def check_route_agreement(records: Dict[str, APolyRecord]):
    """
    Raises:
        IdentityFailure: If two routes disagree; the residual is their difference.
    """
    items = list(records.values())
    for other in items[1:]:
        if other.hash != items[0].hash:
            raise IdentityFailure(
                f"Routes {items[0].route} and {other.route} disagree for n={items[0].n}",
                residual=items[0].a - other.a,
                n=items[0].n,
            )


__all__ = [
    "ROUTES",
    "stated_negative_multiplier",
    "APolyRecord",
    "discriminant",
    "q_multiplier",
    "closed_multiplier",
    "p_of_z",
    "s_of_z",
    "closed_fraction",
    "materialize",
    "check_term_claims",
    "a_from_norm",
    "a_polynomial",
    "compute_routes",
    "check_route_agreement",
]
