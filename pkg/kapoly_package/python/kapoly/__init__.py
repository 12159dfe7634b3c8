"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# The index n is the knot index of C(2n, 4); results are A_2n.
from .algebra import FactoredFraction, Poly, QuadElem
from .errors import KapolyError, NotPolynomial, RedundantFactor
from .knots import APolyRecord, a_polynomial, p_of_z, q_of_z, rm_closed, rm_recursive
from .routes import get_route, route_names

__version__ = "0.1.0"

__all__ = [
    'Poly',
    'QuadElem',
    'FactoredFraction',
    'KapolyError',
    'NotPolynomial',
    'RedundantFactor',
    'APolyRecord',
    'a_polynomial',
    'p_of_z',
    'q_of_z',
    'rm_recursive',
    'rm_closed',
    'get_route',
    'route_names',
]
