"""Seeded random generators shared by the property tests."""
from __future__ import annotations

import random
from fractions import Fraction

from chernring.chern import VirtualBundle
from chernring.series import Series, VarTable

# two degree-one roots and one weight-two class
VARS = VarTable(("x", "y", "z"), (1, 1, 2))


def rand_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))


def rand_series(rng: random.Random, N: int, vars: VarTable = VARS, terms: int = 5, const=None) -> Series:
    s = Series.zero(vars, N)
    for _ in range(rng.randint(0, terms)):
        exps = {n: rng.randint(0, 3) for n in vars.names}
        s = s + Series.monomial(vars, N, exps, rand_coeff(rng))
    if const is not None:
        s = s - s.constant_term() + const
    return s


def rand_unit(rng: random.Random, N: int, vars: VarTable = VARS) -> Series:
    """Series with constant term 1 and no other constant part."""
    return rand_series(rng, N, vars, const=1)


def rand_linear(rng: random.Random, N: int, vars: VarTable = VARS) -> Series:
    s = Series.zero(vars, N)
    for n, w in vars.pairs():
        if w == 1:
            s = s + Series.variable(vars, N, n).scale(rng.randint(-2, 2))
    return s


def rand_rooted_bundle(rng: random.Random, N: int, vars: VarTable = VARS, max_roots: int = 3) -> VirtualBundle:
    roots = [(rand_linear(rng, N, vars), rng.choice((1, 1, -1))) for _ in range(rng.randint(0, max_roots))]
    return VirtualBundle.from_roots(roots, vars, N)


def rand_bundle(rng: random.Random, N: int, vars: VarTable = VARS) -> VirtualBundle:
    return VirtualBundle(rng.randint(-3, 3), rand_unit(rng, N, vars))
