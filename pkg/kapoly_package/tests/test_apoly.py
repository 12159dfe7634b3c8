"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import pytest

from kapoly.algebra.poly_core import ONE, L, M, X, Poly
from kapoly.algebra.quad_ext import DISCRIMINANT, FactoredFraction, QuadElem, ff_norm
from kapoly.errors import IdentityFailure, NotPolynomial, RedundantFactor
from kapoly.knots.apoly import (
    APolyRecord,
    a_from_norm,
    a_polynomial,
    check_route_agreement,
    check_term_claims,
    closed_fraction,
    closed_multiplier,
    discriminant,
    materialize,
    p_of_z,
    q_multiplier,
    s_of_z,
    stated_negative_multiplier,
)
from kapoly.knots.substitution import q_of_z
from kapoly.storage.goldens import appendix_b

# n -> (terms, deg_L, deg_M)
A_SHAPES = {
    1: (21, 4, 16),
    2: (105, 8, 32),
    3: (231, 12, 48),
    -1: (12, 3, 14),
    -2: (70, 7, 30),
    -3: (188, 11, 46),
}


def reciprocal(a: Poly) -> Poly:
    dl, dm = a.degree("L"), a.degree("M")
    return Poly({(dl - e[0], dm - e[1], 0): c for e, c in a.terms().items()})


def test_discriminant():
    d = discriminant()
    assert d is DISCRIMINANT
    assert len(d) == 9
    assert d.is_polynomial()
    assert d.specialize("L", 0) == M**4 - 2 * M**2 + 5
    assert d.specialize("M", 0) == L**2 - 2 * L + 5


def test_a2_and_a4_match_tabulated_values():
    tabulated = appendix_b()
    assert a_polynomial(1).a == tabulated["A2"]
    assert a_polynomial(2).a == tabulated["A4"]


@pytest.mark.parametrize("n", sorted(A_SHAPES))
def test_shapes(n):
    record = a_polynomial(n)
    terms, deg_l, deg_m = A_SHAPES[n]
    assert record.summary() == {"terms": terms, "deg_L": deg_l, "deg_M": deg_m}
    assert record.a.min_degree("L") == 0
    assert record.a.min_degree("M") == 0


@pytest.mark.parametrize("n", sorted(A_SHAPES))
def test_reciprocal_with_positive_sign(n):
    a = a_polynomial(n).a
    assert reciprocal(a) == a


@pytest.mark.parametrize("n", [1, 2, 3])
def test_positive_specializations(n):
    a = a_polynomial(n).a
    assert a.specialize("L", 0) == M ** (8 * n)
    assert a.terms()[(3 * n, 0, 0)] == (-1) ** n
    assert (3 * n + 1, 2, 0) not in a.terms()


def test_m_zero_values():
    assert a_polynomial(1).a.specialize("M", 0) == L**2 - L**3
    assert a_polynomial(2).a.specialize("M", 0) == L**2 * (1 - L) ** 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_negative_specializations(k):
    a = a_polynomial(-k).a
    terms = a.terms()
    assert a.specialize("M", 0) == (1 - L) ** (3 * k - 2)
    assert a.specialize("L", 0) == 1
    assert terms[(0, 0, 0)] == 1
    assert terms[(3 * (k - 1) + 1, 0, 0)] == (-1) ** k
    assert (3 * (k - 1) + 2, 2, 0) not in terms


@pytest.mark.parametrize("n", [1, 2, 3])
def test_p_is_rescaled_q(n):
    assert p_of_z(n) == q_of_z(n).times_units(0, -4 * n, 2 * n)


@pytest.mark.parametrize("n", [-1, -2, -3])
def test_s_is_rescaled_q(n):
    assert s_of_z(n) == q_of_z(n).times_units(0, 4 * n + 2, -2 * n)


def test_folded_recursion():
    from kapoly.knots.suites import q_of_u

    qu = q_of_u()
    s = {0: FactoredFraction.one()}
    for k in range(1, 5):
        s[-k] = s_of_z(-k)
    for n in (-2, -3, -4):
        step = qu.times_units(0, -4, 2) * s[n + 1] - s[n + 2].times_units(0, 4, 4)
        assert s[n] == step


def test_closed_fraction_dispatch():
    assert closed_fraction(0) == FactoredFraction.one()
    assert closed_fraction(2) == p_of_z(2)
    assert closed_fraction(-2) == s_of_z(-2)
    with pytest.raises(ValueError):
        p_of_z(-1)
    with pytest.raises(ValueError):
        s_of_z(0)


def test_multipliers():
    assert q_multiplier(1) == (0, -8, 4)
    assert q_multiplier(-1) == (0, -4, 3)
    assert q_multiplier(0) == (0, 0, 0)
    assert closed_multiplier(2) == (0, 0, 0)
    assert closed_multiplier(-2) == (0, 0, -1)


@pytest.mark.parametrize("n", [1, -1, -2])
def test_q_multiplier_recovers_a(n):
    assert a_from_norm(q_of_z(n), q_multiplier(n), n, "check").a == a_polynomial(n).a


@pytest.mark.parametrize("n", [-1, -2])
def test_stated_negative_multiplier_leaves_square(n):
    a = a_polynomial(n).a
    stated = stated_negative_multiplier(n)
    assert stated[2] - q_multiplier(n)[2] == 2
    scaled = ff_norm(q_of_z(n)).times_units(*stated)
    assert scaled == FactoredFraction(QuadElem.rational(a)).times_units(0, 0, 2)


def test_a_polynomial_rejects_zero_and_unknown_route():
    with pytest.raises(ValueError):
        a_polynomial(0)
    with pytest.raises(ValueError):
        a_polynomial(1, route="nonsense")


def test_materialize_accepts_clean_polynomial():
    assert materialize(FactoredFraction(QuadElem.rational(L + M)), 1, "t") == L + M


@pytest.mark.parametrize(
    "fraction",
    [
        FactoredFraction(QuadElem(L, ONE)),
        FactoredFraction(QuadElem.rational(L + 1), 1, 0, 0),
        FactoredFraction(QuadElem.rational(L + 1), 0, 1, 0),
        FactoredFraction(QuadElem.rational(L + X)),
        FactoredFraction(QuadElem.rational(L + M**-1), 0, 0, 0),
    ],
)
def test_materialize_rejects_non_polynomials(fraction):
    with pytest.raises(NotPolynomial):
        materialize(fraction, 1, "t")


@pytest.mark.parametrize(
    "fraction, factor",
    [
        (FactoredFraction(QuadElem.rational(L + 1), 0, -1, 0), "M"),
        (FactoredFraction(QuadElem.rational(L + 1), -1, 0, 0), "2"),
        (FactoredFraction(QuadElem.rational(L + 1), 0, 0, -1), "LM^2+1"),
        (FactoredFraction(QuadElem.rational(L**2 + L * M)), "L"),
    ],
)
def test_materialize_rejects_redundant_factors(fraction, factor):
    with pytest.raises(RedundantFactor) as info:
        materialize(fraction, 1, "t")
    assert info.value.factor == factor


def test_term_claims():
    check_term_claims(M**8 + L, 1)
    with pytest.raises(IdentityFailure):
        check_term_claims(M**7 + L, 1)
    with pytest.raises(IdentityFailure):
        check_term_claims(L + M, -1)
    with pytest.raises(IdentityFailure):
        check_term_claims(1 + L**2, -1)


def test_record_hash_and_json():
    record = a_polynomial(1)
    again = APolyRecord(1, record.a, "other")
    assert again.hash == record.hash
    assert len(record.hash) == 64
    assert APolyRecord.from_json_obj(record.to_json_obj()) == record


def test_route_disagreement_reports_difference():
    good = APolyRecord(1, L + 1, "closed")
    bad = APolyRecord(1, L + 2, "closed-subst")
    check_route_agreement({"closed": good, "recursive-subst": APolyRecord(1, L + 1, "recursive-subst")})
    with pytest.raises(IdentityFailure) as info:
        check_route_agreement({"closed": good, "closed-subst": bad})
    assert info.value.residual == -1
