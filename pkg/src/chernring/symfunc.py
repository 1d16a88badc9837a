"""Chern-root alphabets and symmetric-function algorithms.

Covers elementary symmetric polynomials of an alphabet, conversion of a
symmetric series into the elementary basis (leading-term descent), Newton's
identities, subset products over an alphabet, and the rank-zero tensor kernel
:func:`star0`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from operator import add
from typing import Sequence

from .series import Series, VarTable, _norm

__all__ = [
    "Alphabet",
    "NotSymmetric",
    "elementary",
    "expand_elementary_monomial",
    "to_elementary_basis",
    "from_elementary_basis",
    "power_sums",
    "power_sum_in_elementary",
    "subset_product",
    "star0",
    "star_table",
]


class NotSymmetric(ValueError):
    """A series handed to the elementary-basis conversion is not symmetric."""


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of degree-1 root variable names."""

    names: tuple[str, ...]

    @classmethod
    def of(cls, prefix: str, n: int) -> "Alphabet":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def table(self) -> VarTable:
        return VarTable(self.names, (1,) * len(self.names))


def elementary(vars: VarTable, trunc: int, alphabet: Alphabet, k: int) -> Series:
    """``e_k`` of the alphabet as a series over ``vars``."""
    if not 0 <= k <= len(alphabet):
        raise ValueError(f"e_{k} undefined for an alphabet of size {len(alphabet)}")
    idx = [vars.index(n) for n in alphabet]
    terms = {}
    for subset in combinations(idx, k):
        e = [0] * len(vars)
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return Series(vars, trunc, terms)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def expand_elementary_monomial(p: int, exps: tuple[int, ...]) -> dict:
    """Expand ``prod_k e_k(x_1..x_p) ** exps[k-1]`` into root monomials (integer coefficients)."""
    if any(exps[k - 1] for k in range(p + 1, len(exps) + 1)):
        return {}
    out = {(0,) * p: 1}
    for k, m in enumerate(exps, start=1):
        if not m:
            continue
        ek = {}
        for subset in combinations(range(p), k):
            e = [0] * p
            for i in subset:
                e[i] = 1
            ek[tuple(e)] = 1
        for _ in range(m):
            out = _poly_mul(out, ek)
    return out


def _convert_one(f: Series, roots: Sequence[str], enames: Sequence[str]) -> Series:
    vars = f.vars
    p = len(roots)
    if len(enames) != p:
        raise ValueError("need one elementary variable per root")
    idx = [vars.index(n) for n in roots]
    for i in idx:
        if vars.weights[i] != 1:
            raise ValueError(f"root {vars.names[i]} must have weight 1")
    idx_set = set(idx)
    rest = [i for i in range(len(vars)) if i not in idx_set]

    # output table: the alphabet block is replaced by e_1..e_p where it first appeared
    first = min(idx) if idx else len(vars)
    out_names: list[str] = []
    out_weights: list[int] = []
    slot: list[tuple[str, int]] = []  # ("r", position in rest) or ("e", k)
    for i in range(len(vars)):
        if i == first:
            for k in range(p):
                out_names.append(enames[k])
                out_weights.append(k + 1)
                slot.append(("e", k))
        if i not in idx_set:
            out_names.append(vars.names[i])
            out_weights.append(vars.weights[i])
            slot.append(("r", rest.index(i)))
    if first == len(vars):
        for k in range(p):
            out_names.append(enames[k])
            out_weights.append(k + 1)
            slot.append(("e", k))
    out_vars = VarTable(tuple(out_names), tuple(out_weights))

    buckets: dict[tuple, dict] = {}
    for e, c in f.terms.items():
        a = tuple(e[i] for i in idx)
        r = tuple(e[i] for i in rest)
        buckets.setdefault(a, {})[r] = c

    result: dict = {}
    zero = (0,) * p
    while buckets:
        lam = max(buckets, key=lambda a: (sum(a), a))
        poly = buckets.pop(lam)
        if lam == zero:
            eexp = (0,) * p
        else:
            if any(lam[i] < lam[i + 1] for i in range(p - 1)):
                raise NotSymmetric(f"leading root exponent {lam} is not a partition")
            eexp = tuple(lam[i] - (lam[i + 1] if i + 1 < p else 0) for i in range(p))
            expansion = expand_elementary_monomial(p, eexp)
            for m, k in expansion.items():
                if m == lam:
                    continue
                bucket = buckets.setdefault(m, {})
                for r, c in poly.items():
                    v = _norm(bucket.get(r, 0) - k * c)
                    if v:
                        bucket[r] = v
                    else:
                        bucket.pop(r, None)
                if not bucket:
                    del buckets[m]
        for r, c in poly.items():
            key = tuple(eexp[s[1]] if s[0] == "e" else r[s[1]] for s in slot)
            result[key] = c
    return Series(out_vars, f.trunc, result)


def to_elementary_basis(f: Series, targets: Sequence[tuple[Alphabet, Sequence[str]]]) -> Series:
    """Rewrite ``f`` in elementary symmetric variables, one alphabet at a time.

    ``targets`` pairs each alphabet with the names of its ``e_1..e_p``
    (weights ``1..p``).  Variables outside every alphabet ride along as
    parameters.  Raises :class:`NotSymmetric` when ``f`` is not symmetric in
    some alphabet.
    """
    for alphabet, enames in targets:
        f = _convert_one(f, tuple(alphabet), tuple(enames))
    return f


def from_elementary_basis(
    f: Series, targets: Sequence[tuple[Alphabet, Sequence[str]]], vars: VarTable
) -> Series:
    """Expand elementary variables back into roots over ``vars``."""
    values = {}
    for alphabet, enames in targets:
        for k, name in enumerate(enames, start=1):
            values[name] = elementary(vars, f.trunc, alphabet, k)
    for name in f.vars.names:
        if name not in values:
            values[name] = Series.variable(vars, f.trunc, name)
    return f.substitute(values, vars, f.trunc)


def power_sums(c: Series) -> list[Series]:
    """Power sums ``p_0..p_N`` of the formal roots of ``c`` by Newton's identities.

    ``p_0`` is returned as zero; callers add the rank themselves.  The graded
    pieces of ``c`` play the elementary symmetric functions, so virtual
    classes (negative roots) come out with their power sums subtracted.
    """
    if c.constant_term() != 1:
        raise ValueError("total class needs constant term 1")
    e = c.components()
    N = c.trunc
    p = [Series.zero(c.vars, N)]
    for k in range(1, N + 1):
        acc = e[k].scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + (e[i] * p[k - i]).scale((-1) ** (i - 1))
        p.append(acc)
    return p


def power_sum_in_elementary(enames: Sequence[str], vars: VarTable, trunc: int, m: int) -> Series:
    """Newton polynomial expressing ``p_m`` in the elementary variables ``enames``."""
    e = [Series.one(vars, trunc)] + [Series.variable(vars, trunc, n) for n in enames]
    while len(e) <= m:
        e.append(Series.zero(vars, trunc))
    p = [Series.constant(vars, trunc, len(enames))]
    for k in range(1, m + 1):
        acc = e[k].scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + (e[i] * p[k - i]).scale((-1) ** (i - 1))
        p.append(acc)
    return p[m]


def subset_product(vars: VarTable, trunc: int, alphabet: Alphabet, shift: Series | None = None) -> Series:
    """``prod over S of (1 + shift - sum_{k in S} b_k) ** (-1)**|S|``, S ranging over subsets."""
    one = Series.one(vars, trunc)
    base = one if shift is None else one + shift
    roots = [Series.variable(vars, trunc, n) for n in alphabet]
    num = one
    den = one
    for j in range(len(roots) + 1):
        for subset in combinations(roots, j):
            factor = base
            for b in subset:
                factor = factor - b
            if j % 2 == 0:
                num = num * factor
            else:
                den = den * factor
    return num * den.inverse()


def _e_names(prefix: str, N: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(1, N + 1))


@lru_cache(maxsize=None)
def star_table(N: int) -> Series:
    """``prod_{i,j<=N} (1 + x_i + y_j) * U**-N * V**-N`` in ``E_k = e_k(x)``, ``F_l = e_l(y)``.

    The x side is resolved through ``prod_i (z + x_i) = sum_k E_k z**(N-k)``
    with ``z = 1 + y``; the product over the y roots is taken through power
    sums, ``sum_j log f(y_j) = N d_0 + sum_m d_m p_m(y)``, and Newton's
    identities turn ``p_m(y)`` into the ``F`` variables.  Input independent,
    so cached per ``N``.
    """
    E = _e_names("E", N)
    F = _e_names("F", N)
    ey_vars = VarTable.graded("E", N) + VarTable(("y",), (1,))
    z = Series.one(ey_vars, N) + Series.variable(ey_vars, N, "y")
    f = z ** N
    for k, name in enumerate(E, start=1):
        f = f + Series.variable(ey_vars, N, name) * z ** (N - k)
    logf = f.log()

    ef_vars = VarTable.graded("E", N) + VarTable.graded("F", N)
    yi = ey_vars.index("y")
    d: list[dict] = [{} for _ in range(N + 1)]
    for e, c in logf.terms.items():
        d[e[yi]][e[:yi] + (0,) * N] = c
    total = Series(ef_vars, N, d[0]).scale(N)
    for m in range(1, N + 1):
        if d[m]:
            total = total + Series(ef_vars, N, d[m]) * power_sum_in_elementary(F, ef_vars, N, m)
    prod = total.exp()
    U = Series.one(ef_vars, N)
    V = Series.one(ef_vars, N)
    for k in range(N):
        U = U + Series.variable(ef_vars, N, E[k])
        V = V + Series.variable(ef_vars, N, F[k])
    return prod * U ** (-N) * V ** (-N)


def star0(u: Series, v: Series) -> Series:
    """Rank-zero tensor kernel of two unit series.

    With ``u`` and ``v`` read as total classes of N formal roots each
    (``e_k = component k``), returns ``prod (1 + x_i + y_j) * u**-N * v**-N``.
    """
    u._check(v)
    if u.constant_term() != 1 or v.constant_term() != 1:
        raise ValueError("star0 needs unit series (constant term 1)")
    N = u.trunc
    if N == 0:
        return Series.one(u.vars, N)
    table = star_table(N)
    uc = u.components()
    vc = v.components()
    values = {}
    for k in range(1, N + 1):
        values[f"E{k}"] = uc[k]
        values[f"F{k}"] = vc[k]
    return table.substitute(values, u.vars, N)
