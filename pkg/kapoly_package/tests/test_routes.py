"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import pytest

from kapoly.knots.apoly import ROUTES, check_route_agreement, compute_routes
from kapoly.routes import ApolyRoute, ClosedRoute, get_route, route_names


def test_registry():
    assert route_names() == ROUTES
    assert isinstance(get_route("closed"), ClosedRoute)
    assert repr(get_route("closed-subst")) == "ClosedSubstitutionRoute(name='closed-subst')"
    with pytest.raises(ValueError):
        get_route("nonsense")


def test_routes_are_abstract_until_implemented():
    with pytest.raises(TypeError):
        ApolyRoute()


@pytest.mark.parametrize("route", ROUTES)
def test_route_rejects_zero(route):
    with pytest.raises(ValueError):
        get_route(route).compute(0)


def test_multipliers_per_route():
    assert get_route("closed").multiplier(-3) == (0, 0, -1)
    assert get_route("recursive-subst").multiplier(2) == (0, -16, 8)
    assert get_route("closed-subst").multiplier(-2) == (0, -12, 7)


@pytest.mark.parametrize("n", [-3, -2, -1, 1, 2, 3])
def test_routes_agree(n):
    records = compute_routes(n, parallel=False)
    assert set(records) == set(ROUTES)
    check_route_agreement(records)
    assert len({r.hash for r in records.values()}) == 1
    assert {r.route for r in records.values()} == set(ROUTES)


def test_parallel_matches_serial():
    serial = compute_routes(2, parallel=False)
    parallel = compute_routes(2, parallel=True, max_workers=2)
    assert {k: v.hash for k, v in serial.items()} == {k: v.hash for k, v in parallel.items()}


@pytest.mark.slow
@pytest.mark.parametrize("n", [-6, -5, -4, 4, 5, 6])
def test_routes_agree_for_larger_n(n):
    check_route_agreement(compute_routes(n, parallel=False))
