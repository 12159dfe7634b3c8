"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Verification suites. Each suite runs a battery of exact identities
# and returns a SuiteReport; nothing here raises on a failed identity.
# Checks marked informational are reported but never fail a suite.
# ==================================================================

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from ..algebra.poly_core import ONE, L, M, Poly, divides
from ..algebra.quad_ext import LM2P1, FactoredFraction, QuadElem, ff_norm
from ..errors import GoldenMismatch, KapolyError
from ..log import get_logger
from ..storage import goldens
from .apoly import (
    ROUTES,
    a_polynomial,
    check_route_agreement,
    closed_fraction,
    compute_routes,
    p_of_z,
    s_of_z,
    stated_negative_multiplier,
)
from .rep_oracle import longitude_check, longitude_relation, relator_check
from .riley_mednykh import q_poly
from .substitution import X_SUBSTITUTION, check_building_blocks, q_of_z

logger = get_logger(__name__)

# f(L, 0) = (1 - L)^3
F_AT_M0 = 1 - 3 * L + 3 * L**2 - L**3


@dataclass
class IdentityCheck:
    """One named identity and whether it held."""

    name: str
    passed: bool
    n: Optional[int] = None
    detail: str = ""
    residual: Optional[Poly] = None
    informational: bool = False

    def to_json_obj(self) -> dict:
        obj = {"name": self.name, "passed": self.passed}
        if self.n is not None:
            obj["n"] = self.n
        if self.detail:
            obj["detail"] = self.detail
        if self.informational:
            obj["informational"] = True
        if self.residual is not None and not self.passed:
            obj["residual"] = self.residual.to_json_obj()
        return obj


@dataclass
class SuiteReport:
    """The checks of one suite, in the order they ran."""

    suite: str
    checks: List[IdentityCheck] = field(default_factory=list)

    def add(self, name: str, passed: bool, n: Optional[int] = None, detail: str = "", residual: Optional[Poly] = None, informational: bool = False) -> IdentityCheck:
        check = IdentityCheck(name, bool(passed), n, detail, residual, informational)
        self.checks.append(check)
        level = "debug" if check.passed or informational else "warning"
        getattr(logger, level)("%s: %s%s %s", self.suite, name, "" if n is None else f" (n={n})", "pass" if check.passed else "FAIL")
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def first_failure(self) -> Optional[IdentityCheck]:
        for check in self.checks:
            if not check.passed and not check.informational:
                return check
        return None

    def to_json_obj(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_json_obj() for c in self.checks]}


def _fraction_residual(got: FactoredFraction, want: FactoredFraction) -> Optional[Poly]:
    if got == want:
        return None
    diff = (got - want).num
    return diff.a if diff.a else diff.b


def _add_fraction_check(report: SuiteReport, name: str, got: FactoredFraction, want: FactoredFraction, n: Optional[int] = None):
    residual = _fraction_residual(got, want)
    report.add(name, residual is None, n=n, residual=residual)


def _add_poly_check(report: SuiteReport, name: str, got: Poly, want: Poly, n: Optional[int] = None, informational: bool = False):
    residual = got - want
    report.add(name, residual.is_zero(), n=n, residual=residual, informational=informational)


def _low_m_part(p: Poly, max_m: int = 2) -> Poly:
    """The terms of p whose M-exponent is at most `max_m`."""
    return Poly({e: c for e, c in p.terms().items() if e[1] <= max_m})


def q_of_u() -> FactoredFraction:
    """Q(u): the recursion coefficient with x substituted."""
    return X_SUBSTITUTION.substitute(q_poly())


def q_identity_suite(directory: Optional[str] = None) -> SuiteReport:
    """
    Q(u) and its products against the polynomials a, b, f, g, h, h1.

    Q(u) = 1/2 M^4 (LM^2+1)^-4 (a + L b z), Q(u) Q(-u) = M^8 (LM^2+1)^-4 f and
    Q(u)^2 = 1/2 M^8 (LM^2+1)^-8 (g + h z), each exactly.
    """
    report = SuiteReport("q_identity")
    polys = goldens.appendix_a(directory)
    a, b, f, g, h, h1 = (polys[k] for k in ("a", "b", "f", "g", "h", "h1"))
    qu = q_of_u()
    expected_q = FactoredFraction(QuadElem(a, L * b), 1, -4, 4)
    _add_fraction_check(report, "Q(u)", qu, expected_q)
    _add_fraction_check(report, "Q(-u)", qu.conj(), FactoredFraction(QuadElem(a, -L * b), 1, -4, 4))
    _add_fraction_check(report, "Q(u)Q(-u)", qu * qu.conj(), FactoredFraction(QuadElem.rational(f), 0, -8, 4))
    square = qu * qu
    _add_fraction_check(report, "Q(u)^2", square, FactoredFraction(QuadElem(g, h), 1, -8, 8))
    _add_fraction_check(report, "Q(-u)^2", qu.conj() * qu.conj(), FactoredFraction(QuadElem(g, -h), 1, -8, 8))

    # z-part of 2 M^-8 (LM^2+1)^8 Q(u)^2 against the factored form of h.
    h_factored = L * (L - 1) * (M**2 - 1) ** 3 * (M**2 + 1) ** 2 * h1
    z_part = square.times_units(1, -8, 8).cleared().b
    _add_poly_check(report, "h = L(L-1)(M^2-1)^3(M^2+1)^2 h1", z_part, h_factored)
    _add_poly_check(report, "b = (L-1)(M-1)^3(M+1)^3(M^2+1)^2", b, (L - 1) * (M - 1) ** 3 * (M + 1) ** 3 * (M**2 + 1) ** 2)
    _add_poly_check(report, "f(L,0)", f.specialize("M", 0), F_AT_M0)
    _add_poly_check(report, "low-M terms of f", _low_m_part(f), polys["low_m_f"])

    try:
        check_building_blocks()
        report.add("building blocks", True)
    except KapolyError as e:
        report.add("building blocks", False, detail=str(e), residual=getattr(e, "residual", None))

    relation = X_SUBSTITUTION.substitute(longitude_relation(L))
    report.add("longitude relation at x(L, M)", relation.is_zero(), residual=None if relation.is_zero() else relation.num.a)
    return report


def golden_suite(directory: Optional[str] = None, route: str = "closed") -> SuiteReport:
    """
    The manifest lock, A_2 and A_4 term for term, and the printed fractions
    p_2(u), p_-2(u), p_-4(u) with their prefactors.
    """
    report = SuiteReport("goldens")
    try:
        goldens.verify_manifest(directory)
    except GoldenMismatch as e:
        report.add(f"golden {e.golden}", False, detail=str(e))
        return report
    report.add("golden manifest", True)

    expected = goldens.appendix_b(directory, verify=False)
    for n, name in ((1, "A2"), (2, "A4")):
        _add_poly_check(report, f"A_{2 * n} = {name}", a_polynomial(n, route).a, expected[name], n=n)
    a2_low = goldens.appendix_a(directory, verify=False)["low_m_A2"]
    _add_poly_check(report, "low-M terms of A_2 as stated", _low_m_part(expected["A2"]), a2_low, n=1, informational=True)

    for name, fraction in goldens.appendix_c(directory, verify=False).items():
        comparison = goldens.compare_fraction(closed_fraction(fraction.n), fraction)
        detail = f"2-exponent {comparison.two_exponent} computed, {comparison.stated_two_exponent} printed"
        report.add(f"{name}(u)", comparison.passed, n=fraction.n, detail=detail)
    return report


def _a_fraction(a: Poly) -> FactoredFraction:
    return FactoredFraction(QuadElem.rational(a))


def _three_term(qu: FactoredFraction, v1: FactoredFraction, v2: FactoredFraction, a1: FactoredFraction, a2: FactoredFraction) -> FactoredFraction:
    """
    M^-8 (LM^2+1)^4 Q(u)Q(-u) A_1 - (LM^2+1)^6 (Q(u) v1(u) v2(-u) + conj) + M^8 (LM^2+1)^8 A_2.

    v1, v2 are the previous two values of p (or of the folded s, with A_k its
    norm over LM^2 + 1).
    """
    first = (qu * qu.conj()).times_units(0, -8, 4) * a1
    cross = qu * v1 * v2.conj()
    middle = -((cross + cross.conj()).times_units(0, 0, 6))
    last = a2.times_units(0, 8, 8)
    return first + middle + last


def _add_beta2_check(report: SuiteReport, n: int):
    """p_2n at L = 0 is M^4n with no z-part."""
    p = p_of_z(n)
    a0, b0 = p.num.a.specialize("L", 0), p.num.b.specialize("L", 0)
    # (LM^2 + 1) is 1 at L = 0.
    lhs = a0 if p.two >= 0 else a0.scale(1 << -p.two)
    rhs = M ** (4 * n + p.m)
    if p.two > 0:
        rhs = rhs.scale(1 << p.two)
    report.add("p_2n(beta_2) = M^4n", b0.is_zero() and lhs == rhs, n=n, residual=None if b0.is_zero() else b0)


def _add_redundancy_checks(report: SuiteReport, a: Poly, n: int):
    for name, factor in (("L", L), ("M", M), ("LM^2+1", LM2P1)):
        report.add(f"{name} does not divide A", not divides(factor, a), n=n)


def specialization_suite(n_max: int, route: str = "closed", records: Optional[Dict[int, Poly]] = None) -> SuiteReport:
    """
    Checks for 1 <= n <= n_max: A(L, 0) = f(L, 0)^(n-1) (L^2 - L^3), A(0, M) = M^8n,
    the three-term recursion of A, the L^3n and L^(3n+1) M^2 terms, the recursion
    of p and the value of p at beta_2.

    Args:
        n_max (int): Largest n, at least 2.
        route (str): Route used for A.
        records (dict): Already computed A_2n keyed by n; filled in as a side effect.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    records = {} if records is None else records
    report = SuiteReport("specialization")
    qu = q_of_u()
    p_values = {0: FactoredFraction.one()}
    a_values = {0: ONE}
    for n in range(1, n_max + 1):
        if n not in records:
            records[n] = a_polynomial(n, route).a
        a = records[n]
        a_values[n] = a
        p_values[n] = p_of_z(n)

        _add_poly_check(report, "A(L,0)", a.specialize("M", 0), F_AT_M0 ** (n - 1) * (L**2 - L**3), n=n)
        _add_poly_check(report, "A(0,M)", a.specialize("L", 0), M ** (8 * n), n=n)
        terms = a.terms()
        report.add("L^3n term present", terms.get((3 * n, 0, 0), 0) != 0, n=n)
        report.add("no L^(3n+1) M^2 term", terms.get((3 * n + 1, 2, 0), 0) == 0, n=n)
        _add_redundancy_checks(report, a, n)
        _add_beta2_check(report, n)
        if n >= 2:
            recursed = (qu * p_values[n - 1]).times_units(0, -4, 2) - p_values[n - 2].times_units(0, 4, 4)
            _add_fraction_check(report, "p recursion", p_values[n], recursed, n=n)
            assembled = _three_term(qu, p_values[n - 1], p_values[n - 2], _a_fraction(a_values[n - 1]), _a_fraction(a_values[n - 2]))
            _add_fraction_check(report, "three-term decomposition", assembled, _a_fraction(a), n=n)
    return report


def negative_suite(n_max: int, route: str = "closed", records: Optional[Dict[int, Poly]] = None) -> SuiteReport:
    """
    Checks for -n_max <= n <= -1: the constant and L^(3(|n|-1)+1) terms, the
    absence of redundant factors, the folded recursion of s and the three-term
    recursion of A, and what the printed multiplier would leave behind.
    """
    records = {} if records is None else records
    report = SuiteReport("negative")
    qu = q_of_u()
    # s_0 = 1 and its norm over LM^2 + 1 stands in for A_0.
    s_values = {0: FactoredFraction.one()}
    a_values = {0: FactoredFraction.one().times_units(0, 0, -1)}
    for k in range(1, n_max + 1):
        n = -k
        if n not in records:
            records[n] = a_polynomial(n, route).a
        a = records[n]
        s_values[n] = s_of_z(n)
        a_values[n] = _a_fraction(a)

        terms = a.terms()
        _add_poly_check(report, "A(L,0) = (1-L)^(3|n|-2)", a.specialize("M", 0), (1 - L) ** (3 * k - 2), n=n, informational=True)
        _add_poly_check(report, "A(0,M) = 1", a.specialize("L", 0), ONE, n=n, informational=True)
        report.add("constant term present", terms.get((0, 0, 0), 0) != 0, n=n)
        report.add(f"L^{3 * (k - 1) + 1} term present", terms.get((3 * (k - 1) + 1, 0, 0), 0) != 0, n=n)
        report.add(
            f"no L^{3 * (k - 1) + 2} M^2 term",
            terms.get((3 * (k - 1) + 2, 2, 0), 0) == 0,
            n=n,
            informational=True,
        )
        _add_redundancy_checks(report, a, n)
        _add_fraction_check(report, "A = (LM^2+1)^-1 s(u)s(-u)", ff_norm(s_values[n]).times_units(0, 0, -1), a_values[n], n=n)

        stated = ff_norm(q_of_z(n)).times_units(*stated_negative_multiplier(n))
        report.add(
            "printed multiplier leaves (LM^2+1)^2",
            stated == a_values[n].times_units(0, 0, 2),
            n=n,
            informational=True,
        )
        if k >= 2:
            recursed = (qu * s_values[n + 1]).times_units(0, -4, 2) - s_values[n + 2].times_units(0, 4, 4)
            _add_fraction_check(report, "folded recursion", s_values[n], recursed, n=n)
            norms = [a_values[j].times_units(0, 0, 1) for j in (n + 1, n + 2)]
            assembled = _three_term(qu, s_values[n + 1], s_values[n + 2], *norms)
            # The three terms assemble s(u)s(-u), which is (LM^2+1) A.
            _add_fraction_check(report, "three-term decomposition", assembled.times_units(0, 0, -1), a_values[n], n=n)
    return report


def _reciprocity_unit(a: Poly):
    """(sign, deg_L, deg_M) with A(L,M) = sign L^deg_L M^deg_M A(1/L, 1/M), or None."""
    a_l = a.degree("L") + a.min_degree("L")
    a_m = a.degree("M") + a.min_degree("M")
    mirrored = Poly({(a_l - e[0], a_m - e[1], e[2]): c for e, c in a.terms().items()})
    for sign in (1, -1):
        if mirrored == a.scale(sign):
            return sign, a_l, a_m
    return None


def reciprocity_report(ns: Iterable[int], route: str = "closed", records: Optional[Dict[int, Poly]] = None) -> SuiteReport:
    """Reports, per n, whether A(L, M) = +-L^a M^b A(1/L, 1/M). Never fails."""
    records = {} if records is None else records
    report = SuiteReport("reciprocity")
    for n in ns:
        if n == 0:
            continue
        if n not in records:
            records[n] = a_polynomial(n, route).a
        unit = _reciprocity_unit(records[n])
        detail = "" if unit is None else f"sign {unit[0]}, L^{unit[1]} M^{unit[2]}"
        report.add("reciprocal", unit is not None, n=n, detail=detail, informational=True)
    return report


def route_suite(ns: Iterable[int], routes: Iterable[str] = ROUTES, parallel: bool = True) -> SuiteReport:
    """All routes agree, hash for hash, for every n."""
    report = SuiteReport("routes")
    routes = list(routes)
    for n in ns:
        if n == 0:
            continue
        records = compute_routes(n, routes, parallel=parallel)
        try:
            check_route_agreement(records)
            report.add("routes agree", True, n=n, detail=", ".join(routes))
        except KapolyError as e:
            report.add("routes agree", False, n=n, detail=str(e), residual=getattr(e, "residual", None))
    return report


def oracle_suite(relator_ns: Iterable[int], longitude_ns: Iterable[int]) -> SuiteReport:
    """Relator divisibility and the longitude relation modulo P_2n."""
    report = SuiteReport("oracle")
    for n in relator_ns:
        result = relator_check(n, raise_on_failure=False)
        report.add("relator divisible by P_2n", result.passed, n=n, residual=result.residuals[0] if result.residuals else None)
    for n in longitude_ns:
        result = longitude_check(n, raise_on_failure=False)
        report.add("longitude relation modulo P_2n", result.passed, n=n, residual=result.residuals[0] if result.residuals else None)
        report.add("det rho(w w*) = 1", bool(result.details["det_is_one"]), n=n)
    return report


__all__ = [
    "IdentityCheck",
    "SuiteReport",
    "q_of_u",
    "q_identity_suite",
    "golden_suite",
    "specialization_suite",
    "negative_suite",
    "reciprocity_report",
    "route_suite",
    "oracle_suite",
]
