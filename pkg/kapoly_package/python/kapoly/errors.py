"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Exception hierarchy. Every error also derives from the closest
# builtin so callers catching ValueError/ArithmeticError keep working.
# ==================================================================


class KapolyError(Exception):
    """Base class for all kapoly errors."""


class NotDivisible(KapolyError, ArithmeticError):
    """An exact division left a nonzero remainder."""

    def __init__(self, message, dividend=None, divisor=None):
        super().__init__(message)
        self.dividend = dividend
        self.divisor = divisor


class NegativeExponent(KapolyError, ValueError):
    """A variable that must be polynomial occurs with a negative exponent."""


class ZeroDenominator(KapolyError, ZeroDivisionError):
    """A negative exponent met a zero coordinate during evaluation."""


class ExponentOverflow(KapolyError, OverflowError):
    """A monomial exponent left the packable range."""


class DenominatorShape(KapolyError, ArithmeticError):
    """A denominator is not of the form 2^a * M^b * (L*M^2 + 1)^c."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IdentityFailure(KapolyError, ArithmeticError):
    """An algebraic identity the computation relies on did not hold."""

    def __init__(self, message, residual=None, n=None):
        super().__init__(message)
        self.residual = residual
        self.n = n


class NotPolynomial(KapolyError, ArithmeticError):
    """Normalization of an A-polynomial left a denominator behind."""

    def __init__(self, message, n=None, route=None, residual=None):
        super().__init__(message)
        self.n = n
        self.route = route
        self.residual = residual


class RedundantFactor(KapolyError, ArithmeticError):
    """An A-polynomial is divisible by L, M, 2 or (L*M^2 + 1)."""

    def __init__(self, message, n=None, route=None, factor=None, residual=None):
        super().__init__(message)
        self.n = n
        self.route = route
        self.factor = factor
        self.residual = residual


class DivisibilityFailure(KapolyError, ArithmeticError):
    """A relator entry is not divisible by the Riley-Mednykh polynomial."""

    def __init__(self, message, n=None, entry=None, residual=None):
        super().__init__(message)
        self.n = n
        self.entry = entry
        self.residual = residual


class ReductionFailure(KapolyError, ArithmeticError):
    """The longitude relation does not reduce to zero modulo P_2n."""

    def __init__(self, message, n=None, residual=None):
        super().__init__(message)
        self.n = n
        self.residual = residual


class GoldenMismatch(KapolyError, ValueError):
    """A golden file is corrupted or disagrees with a computed value."""

    def __init__(self, message, golden=None, residual=None):
        super().__init__(message)
        self.golden = golden
        self.residual = residual


class CacheConflict(KapolyError, RuntimeError):
    """Two results for the same (n, route) have different canonical hashes."""
