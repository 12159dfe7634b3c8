"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Reference polynomials shipped with the package. Each appendix file
# holds Poly JSON objects, or factor lists for polynomials that are
# only known in factored form. manifest.json locks every file by its
# SHA-256 so that an edited golden is caught before it is trusted.
# ==================================================================

import os
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from ..algebra.poly_core import Poly
from ..algebra.quad_ext import FactoredFraction, QuadElem
from ..errors import GoldenMismatch
from ..log import get_logger
from .serialization import file_sha256, read_json

logger = get_logger(__name__)

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "goldens")
MANIFEST = "manifest.json"
GOLDEN_FILES = ("appendix_a.json", "appendix_b.json", "appendix_c.json")


def golden_dir(directory: Optional[str] = None) -> str:
    return directory or GOLDEN_DIR


def verify_manifest(directory: Optional[str] = None) -> Dict[str, str]:
    """
    Checks every golden file against the hash recorded in the manifest.

    Returns:
        dict: file name -> verified hash.

    Raises:
        GoldenMismatch: Naming the first file that is missing or altered.
    """
    directory = golden_dir(directory)
    manifest = read_json(os.path.join(directory, MANIFEST))
    if manifest.get("algorithm", "sha256") != "sha256":
        raise GoldenMismatch(f"Unsupported manifest algorithm {manifest.get('algorithm')!r}", golden=MANIFEST)
    verified = {}
    for name in GOLDEN_FILES:
        expected = manifest["files"].get(name)
        path = os.path.join(directory, name)
        if expected is None or not os.path.exists(path):
            raise GoldenMismatch(f"Golden file {name} is missing", golden=name)
        actual = file_sha256(path)
        if actual != expected:
            raise GoldenMismatch(f"Golden file {name} does not match its locked hash", golden=name)
        verified[name] = actual
    logger.debug("Golden manifest verified for %s", directory)
    return verified


def load_golden(name: str, directory: Optional[str] = None, verify: bool = True) -> dict:
    """Reads one golden file, after checking the manifest unless `verify` is False."""
    if verify:
        verify_manifest(directory)
    return read_json(os.path.join(golden_dir(directory), name))


def decode_poly(obj: Mapping, refs: Optional[Mapping[str, Poly]] = None) -> Poly:
    """
    Decodes a Poly JSON object or a factor list.

    A factor list is {"factors": [{"poly": <Poly JSON>, "power": k}, ...]}; an
    entry may name another polynomial of the same file with {"ref": name}.
    """
    if "factors" not in obj:
        return Poly.from_json_obj(obj)
    product = Poly.one()
    for factor in obj["factors"]:
        if "ref" in factor:
            if refs is None or factor["ref"] not in refs:
                raise GoldenMismatch(f"Unresolved factor reference {factor['ref']!r}")
            base = refs[factor["ref"]]
        else:
            base = Poly.from_json_obj(factor["poly"])
        product = product * base ** int(factor.get("power", 1))
    return product


def appendix_a(directory: Optional[str] = None, verify: bool = True) -> Dict[str, Poly]:
    """The polynomials a, b, f, g, h, h1 and the stated low-M parts of f and A_2."""
    raw = load_golden("appendix_a.json", directory, verify)
    polys: Dict[str, Poly] = {}
    # Plain term lists first so factor lists can refer to them.
    for name, obj in raw.items():
        if name != "low_m" and "factors" not in obj:
            polys[name] = decode_poly(obj)
    for name, obj in raw.items():
        if name != "low_m" and "factors" in obj:
            polys[name] = decode_poly(obj, polys)
    for name, obj in raw.get("low_m", {}).items():
        polys[f"low_m_{name}"] = decode_poly(obj)
    return polys


def appendix_b(directory: Optional[str] = None, verify: bool = True) -> Dict[str, Poly]:
    """A_2 and A_4."""
    raw = load_golden("appendix_b.json", directory, verify)
    return {name: decode_poly(obj) for name, obj in raw.items()}


@dataclass(frozen=True)
class GoldenFraction:
    """
    A value printed as (2(LM^2 + 1))^(h/2) * (rational + z_part * z).

    `half_exponent` is h. For n < 0 the fraction is compared with the folded
    value (LM^2 + 1)^(1/2) p_2n, whose (LM^2 + 1) exponent is (h + 1)/2.
    """

    name: str
    n: int
    half_exponent: int
    elem: QuadElem

    def expected_lm2p1(self) -> int:
        """Denominator exponent of (LM^2 + 1) in the computed fraction."""
        shift = 1 if self.n < 0 else 0
        if (self.half_exponent + shift) % 2:
            raise GoldenMismatch(f"{self.name}: prefactor exponent {self.half_exponent}/2 does not fold to an integer", golden=self.name)
        return -(self.half_exponent + shift) // 2


def appendix_c(directory: Optional[str] = None, verify: bool = True) -> Dict[str, GoldenFraction]:
    """p_2(+-u), p_-2(+-u) and p_-4(+-u), keyed "p2", "p-2", "p-4"."""
    raw = load_golden("appendix_c.json", directory, verify)
    out = {}
    for name, obj in raw.items():
        elem = QuadElem(decode_poly(obj["rational"]), decode_poly(obj["z"]))
        out[name] = GoldenFraction(name, int(obj["n"]), int(obj["prefactor_half_exponent"]), elem)
    return out


@dataclass
class FractionComparison:
    """Outcome of comparing a computed fraction with a printed one."""

    name: str
    numerator_matches: bool
    conjugated: bool
    sign: int
    lm2p1_matches: bool
    two_exponent: int
    stated_two_exponent: float

    @property
    def passed(self) -> bool:
        return self.numerator_matches and self.lm2p1_matches

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "numerator_matches": self.numerator_matches,
            "conjugated": self.conjugated,
            "sign": self.sign,
            "lm2p1_matches": self.lm2p1_matches,
            "two_exponent": self.two_exponent,
            "stated_two_exponent": self.stated_two_exponent,
        }


def compare_fraction(computed: FactoredFraction, golden: GoldenFraction) -> FractionComparison:
    """
    Compares numerators up to a unit +-2^k M^j and the Galois sign of z, and
    compares the (LM^2 + 1) exponent exactly. The power of 2 is reported only.
    """
    printed = FactoredFraction(golden.elem)
    target = printed.num
    match, conjugated, sign = False, False, 1
    for conj_flag in (False, True):
        candidate = target.conj() if conj_flag else target
        for s in (1, -1):
            if computed.num == (candidate if s == 1 else -candidate):
                match, conjugated, sign = True, conj_flag, s
                break
        if match:
            break
    return FractionComparison(
        name=golden.name,
        numerator_matches=match,
        conjugated=conjugated,
        sign=sign,
        lm2p1_matches=computed.lm2p1 == golden.expected_lm2p1(),
        two_exponent=computed.two,
        stated_two_exponent=-(golden.half_exponent / 2) + printed.two,
    )


__all__ = [
    "GOLDEN_DIR",
    "GOLDEN_FILES",
    "verify_manifest",
    "load_golden",
    "decode_poly",
    "appendix_a",
    "appendix_b",
    "appendix_c",
    "GoldenFraction",
    "FractionComparison",
    "compare_fraction",
]
