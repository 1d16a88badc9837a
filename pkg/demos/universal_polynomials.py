"""Build the universal Riemann-Roch polynomials and look at their structure.

Run with ``python3 demos/universal_polynomials.py``.
"""
from chernring.arith import IVPoly
from chernring.render import render_series
from chernring.universal import (
    koszul_quotient_series,
    normalized_twist_series,
    rr_homogeneous_part,
    universal_rr_polynomial,
)

# The Koszul quotient series for a rank r bundle starts with (-1)^(r-1) (r-1)!.
for r in range(1, 5):
    G = koszul_quotient_series(r, r + 2)
    print(f"r={r}: constant term {G.constant_term()}, first terms {G.retruncate(1).to_text()}")

# J_{1,1} = (1+a)(1-b)/(1+a-b), expanded.
print("\nnormalized twist (n=1, r=1):", normalized_twist_series(1, 1, 4).to_text())

# The degree n + r part with symbolic rank t0, before and after the change of basis.
print("homogeneous part (n=1, r=1):", rr_homogeneous_part(1, 1).to_text())
print("P_{1,1}:", universal_rr_polynomial(1, 1).to_text())

print("\nA small table, in LaTeX:")
for total in range(1, 5):
    for r in range(1, total + 1):
        n = total - r
        print(f"  P_{{{n},{r}}} = {render_series(universal_rr_polynomial(n, r), 'latex')}")

# Every coefficient is an integer-valued polynomial in t0.
P = universal_rr_polynomial(3, 2)
assert all(c.is_integer_valued() for c in P.terms.values() if isinstance(c, IVPoly))
print("\nP_{3,2} has", len(P.terms), "terms, all with integer-valued coefficients.")
for m in (-1, 0, 1, 2):
    print(f"  t0 = {m}: {P.eval_t0(m).to_text()}")
