# ==================================================================
# This script walks through the kapoly library: the Riley-Mednykh
# polynomial, the substituted fraction, the A-polynomial by every
# route, and a couple of the identities the verifier checks.
# ==================================================================

import os
import sys

# This adds the kapoly_package/python directory to the path so we can import kapoly
kapoly_python_path = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "python"))
if kapoly_python_path not in sys.path:
    sys.path.insert(0, kapoly_python_path)

print(f"Added to Python path: {kapoly_python_path}")

try:
    import kapoly

    print(f"Successfully imported kapoly {kapoly.__version__} from: {kapoly.__file__}")
except ImportError as e:
    print(f"Failed to import kapoly: {e}")
    raise e

# Set APOLY_DEBUG_STREAM to 'True' to trace every computation step
os.environ["APOLY_DEBUG_STREAM"] = "False"

from kapoly.algebra import L, M
from kapoly.knots.apoly import ROUTES, compute_routes, check_route_agreement
from kapoly.knots.rep_oracle import relator_check
from kapoly.knots.substitution import q_of_z
from kapoly.log import configure_logging
from kapoly.render import RM_ORDER, render

configure_logging("INFO")

N = 2

# --- 1. The Riley-Mednykh polynomial ---
print(f"\n1. P_{2 * N}(M, x) from the recursion and from the closed sum")
rm = kapoly.rm_recursive(N)
print(f"   {len(rm.poly)} terms, x-degree {rm.degree_x()}")
print(f"   closed sum agrees: {kapoly.rm_closed(N).poly == rm.poly}")
print("   " + render(rm.poly, "text", order=RM_ORDER)[:100] + " ...")

# --- 2. x substituted ---
print(f"\n2. q_{2 * N}(z): P_{2 * N} with x = x(L, M) substituted")
q = q_of_z(N)
print(f"   denominator 2^{q.two} M^{q.m} (LM^2+1)^{q.lm2p1}")
print(f"   rational part {len(q.num.a)} terms, z part {len(q.num.b)} terms")

# --- 3. The A-polynomial by every route ---
print(f"\n3. A_{2 * N}(L, M) by {', '.join(ROUTES)}")
records = compute_routes(N, ROUTES, parallel=False)
check_route_agreement(records)
record = records["closed"]
print(f"   all routes agree, hash {record.hash[:16]}")
print(f"   summary: {record.summary()}")
print(f"   A(0, M) = {record.a.specialize('L', 0).to_text()}")
print(f"   A(L, 0) = {record.a.specialize('M', 0).to_text()}")

# --- 4. Negative n ---
print("\n4. A_-4(L, M)")
negative = kapoly.a_polynomial(-2)
print(f"   summary: {negative.summary()}")
print(f"   constant term {negative.a.terms()[(0, 0, 0)]}, A(L, 0) = {negative.a.specialize('M', 0).to_text()}")

# --- 5. The representation oracle ---
print(f"\n5. Relator check for n={N}")
report = relator_check(N)
print(f"   passed: {report.passed}")
for entry in report.details["entries"]:
    print(f"   entry {entry['entry']}: M shift {entry['M_shift']}, lc power {entry['lc_power']}")

print("\nLaTeX of A_2:")
print(render(kapoly.a_polynomial(1).a, "latex"))
print(f"L and M are Poly objects too: {(L * M**2 + 1).to_text()}")
