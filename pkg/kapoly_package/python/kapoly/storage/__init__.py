"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

from .serialization import canonical_dumps, canonical_hash, read_json, write_json
from . import goldens

__all__ = ['canonical_dumps', 'canonical_hash', 'read_json', 'write_json', 'goldens']
