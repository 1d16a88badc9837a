import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from chernring.series import Series, VarTable
from chernring.symfunc import (
    Alphabet,
    NotSymmetric,
    elementary,
    from_elementary_basis,
    power_sum_in_elementary,
    power_sums,
    star0,
    star_table,
    subset_product,
    to_elementary_basis,
)
from oracles import kernel_by_roots, root_symbols, same, subset_product_by_roots, to_sympy
from randgen import rand_coeff, rand_unit

seeds = st.integers(0, 2**32 - 1)


def roots(n, N, prefix="x"):
    vt = VarTable.roots(prefix, n)
    return vt, [Series.variable(vt, N, f"{prefix}{i}") for i in range(1, n + 1)]


def test_power_sum_of_two_roots():
    vt, (x1, x2) = roots(2, 3)
    e = to_elementary_basis(x1**2 + x2**2, [(Alphabet.of("x", 2), ("e1", "e2"))])
    e1, e2 = (Series.variable(e.vars, 3, n) for n in ("e1", "e2"))
    assert e == e1**2 - 2 * e2


def test_mixed_monomials():
    vt, (x1, x2) = roots(2, 3)
    e = to_elementary_basis(x1**2 * x2 + x1 * x2**2, [(Alphabet.of("x", 2), ("e1", "e2"))])
    assert e.to_text() == "e1*e2"


def test_not_symmetric():
    vt, (x1, x2) = roots(2, 3)
    with pytest.raises(NotSymmetric):
        to_elementary_basis(x1**2, [(Alphabet.of("x", 2), ("e1", "e2"))])


def test_parameters_ride_along():
    vt = VarTable(("a", "x1", "x2"), (1, 1, 1))
    a, x1, x2 = (Series.variable(vt, 3, n) for n in vt.names)
    e = to_elementary_basis(a * (x1 + x2) + x1 * x2, [(Alphabet.of("x", 2), ("e1", "e2"))])
    assert e.vars.names == ("a", "e1", "e2")
    assert e.to_text() == "a*e1 + e2"


def test_elementary_values():
    vt, xs = roots(3, 3)
    e2 = elementary(vt, 3, Alphabet.of("x", 3), 2)
    assert e2 == xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2]
    with pytest.raises(ValueError):
        elementary(vt, 3, Alphabet.of("x", 3), 4)


def test_newton_identities():
    vt, xs = roots(3, 5)
    c = Series.one(vt, 5)
    for x in xs:
        c = c * (1 + x)
    p = power_sums(c)
    for m in range(1, 6):
        assert p[m] == sum((x**m for x in xs), Series.zero(vt, 5))
        in_e = power_sum_in_elementary(("e1", "e2", "e3"), VarTable.graded("e", 3), 5, m)
        back = from_elementary_basis(in_e, [(Alphabet.of("x", 3), ("e1", "e2", "e3"))], vt)
        assert back == p[m]


def test_virtual_power_sums_subtract():
    vt, (x, y) = roots(2, 4)
    c = (1 + x) * (1 + y).inverse()
    p = power_sums(c)
    for m in range(1, 5):
        assert p[m] == x**m - y**m


def test_subset_product_matches_oracle():
    for r in (1, 2, 3):
        vt, _ = roots(r, 5, "b")
        g = subset_product(vt, 5, Alphabet.of("b", r))
        assert same(g, subset_product_by_roots(root_symbols("b", r), 5))


def test_subset_product_with_shift():
    vt = VarTable(("a", "b1", "b2"), (1, 1, 1))
    a = Series.variable(vt, 4, "a")
    g = subset_product(vt, 4, Alphabet.of("b", 2), a)
    assert same(g, subset_product_by_roots(root_symbols("b", 2), 4, sp.Symbol("a")))


def test_star0_basic_values():
    vt = VarTable(("a", "b"), (1, 1))
    a, b = Series.variable(vt, 3, "a"), Series.variable(vt, 3, "b")
    assert star0(1 + a, 1 + b) == (1 + a + b) * (1 + a).inverse() * (1 + b).inverse()
    assert star0(1 + a, (1 - b).inverse()) == 1 - a * b + a * a * b - a * b * b


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_star_table_against_root_expansion(N):
    """The universal table, specialized to N roots on each side, equals the direct product."""
    xs, ys = root_symbols("x", N), root_symbols("y", N)
    want = kernel_by_roots(xs, ys, N)
    vt = VarTable.roots("x", N) + VarTable.roots("y", N)
    vals = {}
    for k in range(1, N + 1):
        vals[f"E{k}"] = elementary(vt, N, Alphabet.of("x", N), k)
        vals[f"F{k}"] = elementary(vt, N, Alphabet.of("y", N), k)
    got = star_table(N).substitute(vals, vt, N)
    assert same(got, want)


def test_star_table_small():
    assert star_table(2).to_text() == "1 - E1*F1"


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 1), (1, 3)])
def test_star0_with_fewer_roots_than_truncation(n, m):
    N = 4
    xs, ys = root_symbols("x", n), root_symbols("y", m)
    vt = VarTable.roots("x", n) + VarTable.roots("y", m)
    u = Series.one(vt, N)
    for i in range(1, n + 1):
        u = u * (1 + Series.variable(vt, N, f"x{i}"))
    v = Series.one(vt, N)
    for j in range(1, m + 1):
        v = v * (1 + Series.variable(vt, N, f"y{j}"))
    assert same(star0(u, v), kernel_by_roots(xs, ys, N))


def test_star0_needs_units():
    vt = VarTable(("a",), (1,))
    a = Series.variable(vt, 2, "a")
    with pytest.raises(ValueError):
        star0(2 + a, 1 + a)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 6))
def test_star0_commutative_unital(seed, N):
    rng = random.Random(seed)
    u, v = rand_unit(rng, N), rand_unit(rng, N)
    one = Series.one(u.vars, N)
    assert star0(u, v) == star0(v, u)
    assert star0(u, one) == one


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 6))
def test_star0_associative(seed, N):
    rng = random.Random(seed)
    u, v, w = rand_unit(rng, N), rand_unit(rng, N), rand_unit(rng, N)
    assert star0(star0(u, v), w) == star0(u, star0(v, w))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 5))
def test_star0_stable_under_truncation(seed, N):
    rng = random.Random(seed)
    u, v = rand_unit(rng, N + 1), rand_unit(rng, N + 1)
    assert star0(u, v).retruncate(N) == star0(u.retruncate(N), v.retruncate(N))


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 3), st.integers(0, 5))
def test_elementary_round_trip(seed, n, N):
    rng = random.Random(seed)
    evars = VarTable.graded("e", n)
    f = Series.zero(evars, N)
    for _ in range(rng.randint(0, 5)):
        f = f + Series.monomial(evars, N, {f"e{k}": rng.randint(0, 3) for k in range(1, n + 1)}, rand_coeff(rng))
    target = [(Alphabet.of("x", n), tuple(evars.names))]
    roots_form = from_elementary_basis(f, target, VarTable.roots("x", n))
    assert to_elementary_basis(roots_form, target) == f


def test_conversion_preserves_sympy_value():
    vt, xs = roots(3, 4)
    f = Series.one(vt, 4)
    for x in xs:
        f = f * (1 + x + x * x)
    target = [(Alphabet.of("x", 3), ("e1", "e2", "e3"))]
    back = from_elementary_basis(to_elementary_basis(f, target), target, vt)
    assert to_sympy(back) == to_sympy(f)


def test_fraction_coefficients_survive():
    vt, (x1, x2) = roots(2, 2)
    f = (x1 + x2).scale(Fraction(1, 3))
    e = to_elementary_basis(f, [(Alphabet.of("x", 2), ("e1", "e2"))])
    assert e.to_text() == "1/3 e1"
