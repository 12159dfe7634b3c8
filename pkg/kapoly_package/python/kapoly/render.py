"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Text, LaTeX and JSON renderings of a Poly. JSON is the canonical
# Poly schema and is the only lossless one. Text and LaTeX list terms
# by descending power of the first ordering variable, then the next.
# ==================================================================

import json
from typing import List, Sequence, Tuple

from .algebra.poly_core import VARIABLES, Poly

FORMATS = ("text", "latex", "json")

# A-polynomials read best by L then M; Riley-Mednykh polynomials by x then M.
A_ORDER = ("L", "M", "x")
RM_ORDER = ("x", "M", "L")


def display_order(p: Poly, order: Sequence[str] = A_ORDER) -> List[Tuple[tuple, int]]:
    """The terms of p sorted by descending exponents of `order`, variable by variable."""
    idx = [VARIABLES.index(v) for v in order]
    return sorted(p.terms().items(), key=lambda item: tuple(-item[0][i] for i in idx))


def render_text(p: Poly, order: Sequence[str] = A_ORDER) -> str:
    return p.to_text(display_order(p, order))


def render_latex(p: Poly, order: Sequence[str] = A_ORDER) -> str:
    """A LaTeX expression without math delimiters, e.g. `L^{4} M^{8} - 2 L^{3} M^{12}`."""
    items = display_order(p, order)
    if not items:
        return "0"
    out = []
    for i, (mono, c) in enumerate(items):
        factors = []
        for name, e in zip(VARIABLES, mono):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{{{e}}}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = f"{mag} " + " ".join(factors)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def render_json(p: Poly) -> str:
    """The Poly JSON schema, one term per line, ending in a newline."""
    return json.dumps(p.to_json_obj(), indent=1) + "\n"


def render(p: Poly, fmt: str = "text", order: Sequence[str] = A_ORDER) -> str:
    """
    Renders p in one of FORMATS.

    Raises:
        ValueError: For an unknown format.
    """
    if fmt == "json":
        return render_json(p)
    if fmt == "latex":
        return render_latex(p, order) + "\n"
    if fmt == "text":
        return render_text(p, order) + "\n"
    raise ValueError(f"Unknown format {fmt!r}; choose from {FORMATS}")


__all__ = ["FORMATS", "A_ORDER", "RM_ORDER", "display_order", "render_text", "render_latex", "render_json", "render"]
