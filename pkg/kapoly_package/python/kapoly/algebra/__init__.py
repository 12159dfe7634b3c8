"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

from .poly_core import L, M, ONE, X, ZERO, Poly, RationalPoint, divides, evaluate, exact_div, pseudo_divmod, substitute_rational
from .quad_ext import DISCRIMINANT, LM2P1, FactoredFraction, QuadElem, conj, norm, qmul

__all__ = [
    'Poly',
    'RationalPoint',
    'L',
    'M',
    'X',
    'ONE',
    'ZERO',
    'exact_div',
    'divides',
    'substitute_rational',
    'pseudo_divmod',
    'evaluate',
    'QuadElem',
    'FactoredFraction',
    'DISCRIMINANT',
    'LM2P1',
    'qmul',
    'conj',
    'norm',
]
