"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

from abc import abstractmethod
from typing import Tuple

from ..algebra.quad_ext import FactoredFraction
from ..knots.apoly import q_multiplier
from ..knots.riley_mednykh import RMPolynomial, rm_closed, rm_recursive
from ..knots.substitution import q_of_z
from .abstract_route import ApolyRoute


class _SubstitutionRoute(ApolyRoute):
    """A_2n from q_2n(z), the Riley-Mednykh polynomial with x substituted."""

    @abstractmethod
    def riley_mednykh(self, n: int) -> RMPolynomial:
        """P_2n for this route."""
        pass

    def fraction(self, n: int) -> FactoredFraction:
        rm = self.riley_mednykh(n)
        self.logger.debug("P_%d has %d terms", 2 * n, len(rm.poly))
        return q_of_z(n, rm=rm)

    def multiplier(self, n: int) -> Tuple[int, int, int]:
        return q_multiplier(n)


class RecursiveSubstitutionRoute(_SubstitutionRoute):
    """Substitution into P_2n built by the three-term recursion."""

    name = "recursive-subst"

    def riley_mednykh(self, n: int) -> RMPolynomial:
        return rm_recursive(n)


class ClosedSubstitutionRoute(_SubstitutionRoute):
    """Substitution into P_2n built by the closed binomial sum."""

    name = "closed-subst"

    def riley_mednykh(self, n: int) -> RMPolynomial:
        return rm_closed(n)
