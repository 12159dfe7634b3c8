"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# The Riley-Mednykh polynomial P_2n(M, x) of C(2n, 4), built two ways:
# by the three-term recursion in n and by its closed binomial sum.
# Both must agree exactly; the agreement is what the rm subcommand and
# the verify battery check.
# ==================================================================

import threading
from dataclasses import dataclass
from typing import Dict

from ..algebra.poly_core import M, ONE, X, Poly, binom_or_zero, poly_sum
from ..errors import IdentityFailure
from ..log import get_logger

logger = get_logger(__name__)

# S = M^4 + M^2 x - 2M^2 + 1 and R = M^4 + M^2 x + 1 appear in every closed-form summand.
S_FACTOR = M**4 + M**2 * X - 2 * M**2 + 1
R_FACTOR = M**4 + M**2 * X + 1


def _x_poly(coeffs_by_power: Dict[int, Dict[int, int]]) -> Poly:
    """Builds sum_k (sum_j c_kj M^j) x^k from nested {k: {j: c}}."""
    return Poly({(0, j, k): c for k, row in coeffs_by_power.items() for j, c in row.items()})


P_MINUS_2 = _x_poly(
    {
        3: {4: -1},
        2: {6: -2, 4: 1, 2: -2},
        1: {8: -1, 6: 1, 4: -2, 2: 1, 0: -1},
        0: {4: 1},
    }
)

P_2 = _x_poly(
    {
        4: {6: 1},
        3: {8: 3, 6: -1, 4: 3},
        2: {10: 3, 8: -2, 6: 5, 4: -2, 2: 3},
        1: {12: 1, 10: -1, 8: 2, 6: -2, 4: 2, 2: -1, 0: 1},
        0: {6: 1},
    }
)

_Q_LITERAL = _x_poly(
    {
        4: {6: 1},
        3: {8: 3, 6: -2, 4: 3},
        2: {10: 3, 8: -4, 6: 6, 4: -4, 2: 3},
        1: {12: 1, 10: -2, 8: 3, 6: -4, 4: 3, 2: -2, 0: 1},
        0: {6: 2},
    }
)

# P_0 for the downward recursion.
P_0_NEGATIVE = M**-2


def q_poly() -> Poly:
    """
    The recursion coefficient Q.

    Raises:
        IdentityFailure: If the literal disagrees with x R^2 S + 2M^6.
    """
    return _Q_LITERAL


def _check_q_factored():
    factored = X * R_FACTOR**2 * S_FACTOR + 2 * M**6
    if factored != _Q_LITERAL:
        raise IdentityFailure("Q does not match its factored form", residual=factored - _Q_LITERAL)


_check_q_factored()


@dataclass(frozen=True)
class RMPolynomial:
    """P_2n together with its index."""

    n: int
    poly: Poly

    def degree_x(self) -> int:
        return self.poly.degree("x") or 0

    def expected_degree_x(self) -> int:
        if self.n >= 0:
            return 4 * self.n
        return -4 * self.n - 1

    def to_json_obj(self) -> dict:
        return {"n": self.n, "poly": self.poly.to_json_obj()}


class _RecursionMemo:
    """Memo of the recursion, one list per direction, guarded by a lock."""

    def __init__(self):
        self._lock = threading.Lock()
        self._up = [ONE, P_2]
        self._down = [P_0_NEGATIVE, P_MINUS_2]

    def get(self, n: int) -> Poly:
        seq, k = (self._up, n) if n >= 0 else (self._down, -n)
        with self._lock:
            while len(seq) <= k:
                nxt = _Q_LITERAL * seq[-1] - M**12 * seq[-2]
                seq.append(nxt)
                logger.debug("P_%d computed with %d terms", (len(seq) - 1) * (1 if n >= 0 else -1) * 2, len(nxt))
            return seq[k]

    def clear(self):
        with self._lock:
            del self._up[2:]
            del self._down[2:]


_MEMO = _RecursionMemo()


def rm_recursive(n: int) -> RMPolynomial:
    """
    P_2n from the three-term recursion.

    For n >= 0 the sequence starts at P_0 = 1, P_2; for n < 0 it runs downward
    from P_0 = M^-2, P_-2. The value at n = 0 is 1.
    """
    return RMPolynomial(n, _MEMO.get(n))


def clear_memo():
    """Drops every memoized recursion value beyond the initial conditions."""
    _MEMO.clear()


def _closed_summand(n: int, i: int, s_pow: Poly, r_pow: Poly) -> Poly:
    """The i-th summand with s_pow = S^((i-1)//2) (ignored at i = 0) and r_pow = R^i."""
    a, fl, b = (i + 1) // 2, i // 2, (i - 1) // 2
    if n >= 0:
        coeff = binom_or_zero(fl + n, i)
        m2 = -fl - 2 * a + 3 * n
        tail = S_FACTOR + M**2 if i % 2 else S_FACTOR
    else:
        coeff = binom_or_zero(b - n, i)
        m2 = -fl - 2 * a - 3 * n - 1
        tail = S_FACTOR if i % 2 == 0 else -(S_FACTOR + M**2)
    if coeff == 0:
        return Poly.zero()
    # S^-1 at i = 0 cancels the even-index tail, which is exactly S.
    body = Poly.monomial((0, 2 * m2, a), coeff)
    if i == 0:
        return body
    return body * s_pow * r_pow * tail


def rm_closed(n: int) -> RMPolynomial:
    """
    P_2n from the closed binomial sum.

    The sum runs over 0 <= i <= 2|n|; out-of-range binomials vanish. Powers of
    S and R are carried forward between summands.
    """
    top = 2 * abs(n)
    summands = []
    s_pow, r_pow = ONE, ONE
    for i in range(top + 1):
        if i >= 3 and i % 2 == 1:
            s_pow = s_pow * S_FACTOR
        summands.append(_closed_summand(n, i, s_pow, r_pow))
        r_pow = r_pow * R_FACTOR
    total = poly_sum(summands)
    if n >= 0 and not total.is_polynomial():
        raise IdentityFailure(f"Closed form of P_{2 * n} kept negative powers", residual=total, n=n)
    return RMPolynomial(n, total)


__all__ = [
    "S_FACTOR",
    "R_FACTOR",
    "P_2",
    "P_MINUS_2",
    "P_0_NEGATIVE",
    "RMPolynomial",
    "q_poly",
    "rm_recursive",
    "rm_closed",
    "clear_memo",
]
