"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import pytest

from kapoly.algebra.poly_core import ONE, L, M, X, Poly
from kapoly.algebra.quad_ext import LM2P1, FactoredFraction, QuadElem
from kapoly.errors import IdentityFailure
from kapoly.knots.rep_oracle import longitude_relation
from kapoly.knots.riley_mednykh import R_FACTOR, S_FACTOR, q_poly, rm_closed, rm_recursive
from kapoly.knots.substitution import (
    F1_ELEM,
    H_ELEM,
    X_SUBSTITUTION,
    XSubstitution,
    building_blocks,
    check_building_blocks,
    q_of_z,
    tail_numerator,
)
from kapoly.storage.goldens import appendix_a


def test_building_blocks_hold():
    check_building_blocks()


def test_x_block_value():
    assert X_SUBSTITUTION.substitute(X) == FactoredFraction(F1_ELEM, 1, 2, 1)
    assert X_SUBSTITUTION.as_fraction() == building_blocks()["x"]


def test_blocks_are_multiplicative():
    blocks = building_blocks()
    assert X_SUBSTITUTION.substitute(S_FACTOR * R_FACTOR) == blocks["S"] * blocks["R"]
    assert X_SUBSTITUTION.substitute(X**2) == blocks["x"] * blocks["x"]


def test_substituting_x_free_polynomials():
    assert X_SUBSTITUTION.substitute(Poly.zero()).is_zero()
    assert X_SUBSTITUTION.substitute(L + M) == FactoredFraction(QuadElem.rational(L + M))


def test_wrong_denominator_rejected():
    with pytest.raises(IdentityFailure):
        XSubstitution(X_SUBSTITUTION.num, 2 * M**4)


def test_tail_numerators():
    t = QuadElem.rational(LM2P1)
    assert tail_numerator(1) == t + H_ELEM
    assert tail_numerator(0) == H_ELEM - t
    assert tail_numerator(0, negative=True) == H_ELEM - t
    assert tail_numerator(1, negative=True) == -H_ELEM - t


def test_q_of_z_initial_value():
    assert q_of_z(0) == FactoredFraction.one()
    assert q_of_z(0).num == QuadElem.rational(ONE)


@pytest.mark.parametrize("n", [1, 2, -1, -2])
def test_q_of_z_routes_agree(n):
    assert q_of_z(n) == q_of_z(n, route="closed")
    assert q_of_z(n, rm=rm_recursive(n)) == X_SUBSTITUTION.substitute(rm_closed(n).poly)


def test_q_of_z_rejects_unknown_route():
    with pytest.raises(ValueError, match="Unknown route"):
        q_of_z(1, route="closd")
    with pytest.raises(ValueError):
        q_of_z(0, route="recursive-subst")


def test_q_of_z_rejects_mismatched_input():
    with pytest.raises(ValueError):
        q_of_z(2, rm=rm_recursive(1))


def test_q_of_u_against_tabulated_polynomials():
    polys = appendix_a()
    expected = FactoredFraction(QuadElem(polys["a"], L * polys["b"]), 1, -4, 4)
    assert X_SUBSTITUTION.substitute(q_poly()) == expected


def test_longitude_relation_vanishes_at_substituted_x():
    assert X_SUBSTITUTION.substitute(longitude_relation(L)).is_zero()
