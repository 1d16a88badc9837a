"""Chern classes, characters and Todd classes of split and virtual bundles.

Run with ``python3 demos/lambda_ring_calculus.py``.
"""
from chernring.chern import (
    VirtualBundle,
    chern_character,
    dual,
    exterior_power,
    lambda_minus_one_dual,
    todd,
)
from chernring.series import Series, VarTable

N = 4
vars = VarTable.roots("x", 3)
x1, x2, x3 = (Series.variable(vars, N, f"x{i}") for i in (1, 2, 3))

E = VirtualBundle.split(["x1", "x2"], vars, N)
L = VirtualBundle.line(x3)

print("c(E)          =", E.chern.to_text())
print("c(E dual)     =", dual(E).chern.to_text())
print("c(E (x) L)    =", (E * L).chern.to_text())
print("c(Lambda^2 E) =", exterior_power(E, 2).chern.to_text())

# A virtual bundle: E minus L has rank 1 and an inverted factor.
V = E - L
print("\nrank(E - L) =", V.rank)
print("c(E - L)    =", V.chern.to_text())
print("ch(E - L)   =", chern_character(V).to_text())

# The character is a ring map: ch(E (x) L) = ch(E) ch(L).
assert chern_character(E * L) == chern_character(E) * chern_character(L)

print("\ntd(L)       =", todd(L).to_text())
print("td(E)       =", todd(E).to_text())
assert todd(V) == todd(E) * todd(L).inverse()

# The Koszul class of E: rank zero, character prod(1 - exp(-x_i)) = c_top / td.
K = lambda_minus_one_dual(E)
print("\nrank(lambda_-1(E dual)) =", K.rank)
print("c(lambda_-1(E dual))    =", K.chern.to_text())
kernel = E.chern.component(2) * todd(E).inverse()
assert chern_character(K) == kernel
print("ch(lambda_-1(E dual))   =", chern_character(K).to_text())
