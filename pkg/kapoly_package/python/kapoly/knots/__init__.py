"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

# Verification suites live in .suites and are imported on demand.
from .riley_mednykh import RMPolynomial, q_poly, rm_closed, rm_recursive
from .substitution import X_SUBSTITUTION, XSubstitution, q_of_z
from .apoly import APolyRecord, a_polynomial, discriminant, p_of_z, s_of_z

__all__ = [
    'RMPolynomial',
    'rm_recursive',
    'rm_closed',
    'q_poly',
    'XSubstitution',
    'X_SUBSTITUTION',
    'q_of_z',
    'APolyRecord',
    'a_polynomial',
    'discriminant',
    'p_of_z',
    's_of_z',
]
