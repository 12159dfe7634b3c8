"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

from typing import Tuple

from ..algebra.quad_ext import FactoredFraction
from ..knots.apoly import closed_fraction, closed_multiplier
from .abstract_route import ApolyRoute


class ClosedRoute(ApolyRoute):
    """A_2n as the norm of the closed-form p_2n, folded to s_2n for n < 0."""

    name = "closed"

    def fraction(self, n: int) -> FactoredFraction:
        return closed_fraction(n)

    def multiplier(self, n: int) -> Tuple[int, int, int]:
        return closed_multiplier(n)
