"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.
"""

import sys

from .cli import main

sys.exit(main())
