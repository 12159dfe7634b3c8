"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""

# ===================================================================
# This file defines the abstract base class for A-polynomial routes.
# ===================================================================

from abc import ABC, abstractmethod
from typing import Tuple

from ..algebra.quad_ext import FactoredFraction
from ..knots.apoly import APolyRecord, a_from_norm
from ..log import get_logger


class ApolyRoute(ABC):
    """
    Abstract base class for the ways of computing A_2n(L, M).

    A route supplies a fraction r in the quadratic extension and a unit
    multiplier U such that A_2n = U * norm(r). The shared `compute` method
    takes the norm, applies U and checks the result, so that every route
    is held to the same polynomiality and redundancy checks.
    """

    name = "abstract"

    def __init__(self):
        self.logger = get_logger(f"routes.{self.name}")

    @abstractmethod
    def fraction(self, n: int) -> FactoredFraction:
        """
        The fraction whose norm is A_2n up to the multiplier.

        Args:
            n (int): Nonzero knot index.

        Returns:
            FactoredFraction: A normalized fraction over 2, M and (LM^2 + 1).
        """
        pass

    @abstractmethod
    def multiplier(self, n: int) -> Tuple[int, int, int]:
        """
        Exponents (two, M, LM2p1) of the unit U.

        Args:
            n (int): Nonzero knot index.
        """
        pass

    def compute(self, n: int) -> APolyRecord:
        """
        Computes A_2n by this route.

        Raises:
            ValueError: If n is 0.
            NotPolynomial, RedundantFactor: If the result is not a clean polynomial.
        """
        if n == 0:
            raise ValueError("n must be nonzero")
        self.logger.debug("Computing the fraction for n=%d", n)
        frac = self.fraction(n)
        self.logger.debug("Fraction for n=%d has denominator exponents %s", n, frac.exponents())
        return a_from_norm(frac, self.multiplier(n), n, self.name)

    def __repr__(self):
        return f"{type(self).__name__}(name={self.name!r})"
