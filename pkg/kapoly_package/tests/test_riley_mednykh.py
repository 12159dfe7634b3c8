"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import threading

import pytest

from kapoly.algebra.poly_core import M, X
from kapoly.knots.riley_mednykh import (
    P_0_NEGATIVE,
    P_2,
    P_MINUS_2,
    R_FACTOR,
    S_FACTOR,
    clear_memo,
    q_poly,
    rm_closed,
    rm_recursive,
)

# n -> (number of terms, x-degree) of P_2n
RM_SHAPES = {
    -6: (420, 23),
    -5: (290, 19),
    -4: (184, 15),
    -3: (102, 11),
    -2: (44, 7),
    -1: (10, 3),
    0: (1, 0),
    1: (17, 4),
    2: (57, 8),
    3: (121, 12),
    4: (209, 16),
    5: (321, 20),
    6: (457, 24),
}


def test_q_factors():
    assert q_poly() == X * R_FACTOR**2 * S_FACTOR + 2 * M**6


def test_initial_values():
    assert rm_recursive(0).poly == 1
    assert rm_recursive(1).poly == P_2
    assert rm_recursive(-1).poly == P_MINUS_2
    assert P_0_NEGATIVE == M**-2
    assert rm_closed(0).poly == 1


@pytest.mark.parametrize("n", sorted(RM_SHAPES))
def test_closed_matches_recursion(n):
    assert rm_closed(n).poly == rm_recursive(n).poly


@pytest.mark.parametrize("n", sorted(RM_SHAPES))
def test_shapes(n):
    rm = rm_recursive(n)
    terms, deg_x = RM_SHAPES[n]
    assert len(rm.poly) == terms
    assert rm.degree_x() == deg_x == rm.expected_degree_x()
    assert rm.poly.is_polynomial()
    assert not rm.poly.involves("L")


@pytest.mark.parametrize("n", [2, 3, 4, -3, -4])
def test_recursion_step(n):
    step = 1 if n > 0 else -1
    prev, prev2 = rm_recursive(n - step).poly, rm_recursive(n - 2 * step).poly
    assert rm_recursive(n).poly == q_poly() * prev - M**12 * prev2


def test_downward_recursion_starts_at_m_inverse_squared():
    assert rm_recursive(-2).poly == q_poly() * P_MINUS_2 - M**12 * P_0_NEGATIVE


@pytest.mark.parametrize("n", sorted(RM_SHAPES))
def test_x_zero_is_a_signed_m_power(n):
    p0 = rm_recursive(n).poly.specialize("x", 0)
    assert p0.is_monomial()
    assert abs(p0.leading_term()[1]) == 1
    assert not p0.involves("L")


def test_leading_coefficient():
    for n in range(1, 5):
        p = rm_recursive(n).poly
        assert p.coefficient_in("x", 4 * n) == M ** (6 * n)


def test_clear_memo_recomputes_same_values():
    before = rm_recursive(4).poly
    clear_memo()
    assert rm_recursive(4).poly == before


def test_memo_is_thread_safe():
    clear_memo()
    results = {}

    def worker(i):
        results[i] = rm_recursive(5).poly

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({len(p) for p in results.values()}) == 1
    assert results[0] == rm_closed(5).poly


def test_json_obj():
    obj = rm_recursive(-1).to_json_obj()
    assert obj["n"] == -1
    assert len(obj["poly"]["terms"]) == 10
