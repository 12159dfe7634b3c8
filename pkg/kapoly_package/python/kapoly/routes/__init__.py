"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

from .abstract_route import ApolyRoute
from .closed import ClosedRoute
from .substitution_routes import ClosedSubstitutionRoute, RecursiveSubstitutionRoute

_REGISTRY = {cls.name: cls for cls in (ClosedRoute, RecursiveSubstitutionRoute, ClosedSubstitutionRoute)}


def get_route(name: str) -> ApolyRoute:
    """
    Instantiates a route by name.

    Raises:
        ValueError: If no route has that name.
    """
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise ValueError(f"Unknown route {name!r}; choose from {sorted(_REGISTRY)}") from None


def route_names():
    return tuple(_REGISTRY)


__all__ = [
    'ApolyRoute',
    'ClosedRoute',
    'RecursiveSubstitutionRoute',
    'ClosedSubstitutionRoute',
    'get_route',
    'route_names',
]
