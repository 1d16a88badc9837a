"""Riemann-Roch checks for the zero section of a projective completion.

Works in the ring of P(E + 1) over a base where E splits with roots x1..xr,
pushes a class forward along the zero section and compares Chern classes
(integral form) and Chern characters (rational form).

Run with ``python3 demos/riemann_roch_check.py``.
"""
from chernring.bundlering import (
    ProjectiveModel,
    verify_grr_zero_section,
    verify_rr_without_denominators,
    verify_zero_section_suite,
)
from chernring.chern import VirtualBundle
from chernring.series import VarTable

r, N = 2, 5
m = ProjectiveModel(r, N, extra=VarTable.roots("a", 1))
print("relation: xi^3 =", (m.xi() ** 3).series.to_text())
print("c(Q)     =", m.quotient_chern().series.to_text())
print("c_2(Q)   =", m.top_chern_Q().series.to_text())

alpha = VirtualBundle.split(["a1"], m.base_vars, N)
pushed = m.pushforward_class(alpha)
print("\nrank of the pushed-forward class:", pushed.rank)
for i, part in enumerate(m.reduce(pushed.chern).series.components()[: r + 2]):
    print(f"  c_{i} = {part.to_text()}")

print()
for report in (
    verify_zero_section_suite(r, 6),
    verify_rr_without_denominators(1, r, 6),
    verify_grr_zero_section(1, r, 6),
):
    print(report.to_text().splitlines()[-1])

# Symbolic rank t0 and generic Chern classes tau_j for alpha.
print(verify_rr_without_denominators(0, 1, 4, generic=True).to_text().splitlines()[-1])
