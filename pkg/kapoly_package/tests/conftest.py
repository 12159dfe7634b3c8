"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import random
from fractions import Fraction

import pytest

from kapoly.algebra.poly_core import Poly, RationalPoint
from kapoly.config import load_config


@pytest.fixture(scope="session")
def config():
    return load_config()


@pytest.fixture(scope="session")
def cases(config):
    return config["properties"]["cases"]


@pytest.fixture
def rng(config):
    return random.Random(config["properties"]["seed"])


@pytest.fixture
def bound(config):
    return config["properties"]["rational_bound"]


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("APOLY_CACHE_DIR", str(tmp_path / "cache"))


def random_poly(rng, nterms=4, max_exp=3, laurent_m=False, coeff=9, variables=(0, 1, 2)):
    """A random Poly in the given variable indices; M may get negative exponents."""
    terms = {}
    for _ in range(nterms):
        mono = [0, 0, 0]
        for i in variables:
            lo = -max_exp if (laurent_m and i == 1) else 0
            mono[i] = rng.randint(lo, max_exp)
        terms[tuple(mono)] = terms.get(tuple(mono), 0) + rng.randint(-coeff, coeff)
    return Poly(terms)


def random_point(rng, bound):
    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    m = q()
    while m == 0:
        m = q()
    return RationalPoint(q(), m, q())
