"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import os
import shutil

import pytest

from kapoly.algebra.poly_core import L, M, Poly
from kapoly.errors import GoldenMismatch
from kapoly.knots.apoly import closed_fraction
from kapoly.storage.goldens import (
    GOLDEN_DIR,
    GOLDEN_FILES,
    appendix_a,
    appendix_b,
    appendix_c,
    compare_fraction,
    decode_poly,
    load_golden,
    verify_manifest,
)


@pytest.fixture
def golden_copy(tmp_path):
    target = tmp_path / "goldens"
    shutil.copytree(GOLDEN_DIR, target)
    return str(target)


def test_manifest_verifies():
    verified = verify_manifest()
    assert sorted(verified) == sorted(GOLDEN_FILES)
    assert all(len(h) == 64 for h in verified.values())


def test_corrupted_golden_is_named(golden_copy):
    path = os.path.join(golden_copy, "appendix_b.json")
    with open(path, "a", encoding="utf-8") as f:
        f.write(" ")
    with pytest.raises(GoldenMismatch) as info:
        verify_manifest(golden_copy)
    assert info.value.golden == "appendix_b.json"
    with pytest.raises(GoldenMismatch):
        appendix_b(golden_copy)
    assert "A2" in appendix_b(golden_copy, verify=False)


def test_missing_golden_is_named(golden_copy):
    os.remove(os.path.join(golden_copy, "appendix_c.json"))
    with pytest.raises(GoldenMismatch) as info:
        verify_manifest(golden_copy)
    assert info.value.golden == "appendix_c.json"


def test_load_golden_reads_json():
    raw = load_golden("appendix_b.json")
    assert set(raw) == {"A2", "A4"}


def test_decode_factor_lists():
    obj = {"factors": [{"poly": (L - 1).to_json_obj(), "power": 2}, {"ref": "b", "power": 1}]}
    assert decode_poly(obj, {"b": M}) == (L - 1) ** 2 * M
    with pytest.raises(GoldenMismatch):
        decode_poly(obj)


def test_appendix_a_contents():
    polys = appendix_a()
    for name in ("a", "b", "f", "g", "h", "h1", "low_m_f", "low_m_A2"):
        assert isinstance(polys[name], Poly)
    assert polys["b"] == (L - 1) * (M - 1) ** 3 * (M + 1) ** 3 * (M**2 + 1) ** 2
    assert polys["f"].specialize("M", 0) == 1 - 3 * L + 3 * L**2 - L**3


def test_appendix_b_shapes():
    polys = appendix_b()
    assert len(polys["A2"]) == 21
    assert len(polys["A4"]) == 105
    assert polys["A2"].specialize("L", 0) == M**8


@pytest.mark.parametrize("name, n, lm2p1", [("p2", 1, 2), ("p-2", -1, 1), ("p-4", -2, 3)])
def test_printed_fractions(name, n, lm2p1):
    golden = appendix_c()[name]
    assert golden.n == n
    assert golden.expected_lm2p1() == lm2p1
    comparison = compare_fraction(closed_fraction(n), golden)
    assert comparison.passed
    assert comparison.numerator_matches and not comparison.conjugated
    assert comparison.sign == 1
    assert comparison.two_exponent == 1
    assert comparison.to_json_obj()["passed"] is True


def test_comparison_detects_a_wrong_numerator():
    golden = appendix_c()["p2"]
    comparison = compare_fraction(closed_fraction(2), golden)
    assert not comparison.passed
