"""Virtual bundles at the level of Chern data: sums, tensor products, duals,
exterior powers, the Koszul class, Chern character and Todd class.

A :class:`VirtualBundle` is an augmented total Chern class ``(rank, c)``,
optionally remembering a signed multiset of Chern roots.  The tensor product
of augmented classes is

    (m, u) * (n, v) = (m n, star0(u, v) * u**n * v**m)

with binomial powers when a rank is the symbol ``t0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .arith import IVPoly
from .series import Series, VarTable
from .symfunc import Alphabet, power_sums, star0, to_elementary_basis

Rank = Union[int, IVPoly]

__all__ = [
    "VirtualBundle",
    "whitney_sum",
    "star",
    "dual",
    "exterior_power",
    "lambda_minus_one_dual",
    "koszul_chern_in_elementary",
    "chern_character",
    "chern_character_from_roots",
    "todd",
    "todd_log_coefficients",
]


@dataclass(frozen=True)
class VirtualBundle:
    rank: Rank
    chern: Series
    roots: tuple[tuple[Series, int], ...] | None = None

    def __post_init__(self):
        if self.chern.constant_term() != 1:
            raise ValueError("total Chern class must have constant term 1")
        if self.roots is not None:
            if any(s not in (1, -1) for _, s in self.roots):
                raise ValueError("root signs must be +1 or -1")
            if self.rank != sum(s for _, s in self.roots):
                raise ValueError(
                    f"rank {self.rank} disagrees with signed root count "
                    f"{sum(s for _, s in self.roots)}"
                )

    @property
    def vars(self) -> VarTable:
        return self.chern.vars

    @property
    def trunc(self) -> int:
        return self.chern.trunc

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[Series, int]], vars: VarTable, trunc: int) -> "VirtualBundle":
        roots = tuple(roots)
        one = Series.one(vars, trunc)
        pos = one
        neg = one
        for x, s in roots:
            if s > 0:
                pos = pos * (one + x)
            else:
                neg = neg * (one + x)
        chern = pos if neg == one else pos * neg.inverse()
        return cls(sum(s for _, s in roots), chern, roots)

    @classmethod
    def split(cls, names: Sequence[str], vars: VarTable, trunc: int) -> "VirtualBundle":
        """Genuine bundle with the named variables as Chern roots."""
        return cls.from_roots(((Series.variable(vars, trunc, n), 1) for n in names), vars, trunc)

    @classmethod
    def line(cls, root: Series) -> "VirtualBundle":
        return cls.from_roots([(root, 1)], root.vars, root.trunc)

    @classmethod
    def trivial(cls, rank: int, vars: VarTable, trunc: int) -> "VirtualBundle":
        zero = Series.zero(vars, trunc)
        return cls(rank, Series.one(vars, trunc), tuple((zero, 1) for _ in range(rank)))

    @classmethod
    def zero(cls, vars: VarTable, trunc: int) -> "VirtualBundle":
        return cls(0, Series.one(vars, trunc), ())

    def has_roots(self) -> bool:
        return self.roots is not None

    def __add__(self, other):
        return whitney_sum(self, other)

    def __neg__(self):
        roots = None if self.roots is None else tuple((x, -s) for x, s in self.roots)
        return VirtualBundle(-self.rank, self.chern.inverse(), roots)

    def __sub__(self, other):
        return whitney_sum(self, -other)

    def __mul__(self, other):
        return star(self, other)


def whitney_sum(A: VirtualBundle, B: VirtualBundle) -> VirtualBundle:
    A.chern._check(B.chern)
    roots = A.roots + B.roots if A.roots is not None and B.roots is not None else None
    return VirtualBundle(A.rank + B.rank, A.chern * B.chern, roots)


def _power(c: Series, rank: Rank) -> Series:
    if isinstance(rank, IVPoly):
        if rank.is_constant():
            return c ** int(rank.constant_value())
        return c.pow_binomial(rank)
    return c ** int(rank)


def star(A: VirtualBundle, B: VirtualBundle) -> VirtualBundle:
    """Tensor product of augmented classes."""
    A.chern._check(B.chern)
    chern = star0(A.chern, B.chern) * _power(A.chern, B.rank) * _power(B.chern, A.rank)
    roots = None
    if A.roots is not None and B.roots is not None:
        roots = tuple((x + y, s * t) for x, s in A.roots for y, t in B.roots)
    return VirtualBundle(A.rank * B.rank, chern, roots)


def dual(A: VirtualBundle) -> VirtualBundle:
    roots = None if A.roots is None else tuple((-x, s) for x, s in A.roots)
    return VirtualBundle(A.rank, A.chern.graded_sign(), roots)


def exterior_power(A: VirtualBundle, k: int) -> VirtualBundle:
    """k-th exterior power of a genuine split bundle."""
    if A.roots is None:
        raise ValueError("exterior powers need explicit Chern roots")
    if any(s < 0 for _, s in A.roots):
        raise ValueError("exterior powers of virtual bundles are not supported")
    xs = [x for x, _ in A.roots]
    if not 0 <= k <= len(xs):
        raise ValueError(f"no {k}-th exterior power of a rank {len(xs)} bundle")
    zero = Series.zero(A.vars, A.trunc)
    roots = []
    for subset in combinations(xs, k):
        s = zero
        for x in subset:
            s = s + x
        roots.append((s, 1))
    assert len(roots) == comb(len(xs), k)
    return VirtualBundle.from_roots(roots, A.vars, A.trunc)


def lambda_minus_one_dual(A: VirtualBundle) -> VirtualBundle:
    """``sum_k (-1)**k [Lambda^k A^dual]`` for a genuine split bundle ``A``."""
    if A.roots is None or any(s < 0 for _, s in A.roots):
        raise ValueError("the Koszul class needs a genuine bundle with explicit roots")
    Ad = dual(A)
    out = VirtualBundle.zero(A.vars, A.trunc)
    for k in range(len(A.roots) + 1):
        term = exterior_power(Ad, k)
        out = out + term if k % 2 == 0 else out - term
    return out


@lru_cache(maxsize=None)
def koszul_chern_in_elementary(r: int, trunc: int, prefix: str = "w") -> Series:
    """Total Chern class of ``sum_k (-1)**k Lambda^k W`` for a rank-r bundle ``W``,
    written in the Chern classes ``w1..wr`` of ``W`` (weights ``1..r``)."""
    alphabet = Alphabet.of("z", r)
    vars = alphabet.table()
    W = VirtualBundle.split(alphabet.names, vars, trunc)
    # lambda_{-1}(W) = lambda_{-1}((W^dual)^dual)
    K = lambda_minus_one_dual(dual(W))
    names = [f"{prefix}{k}" for k in range(1, r + 1)]
    return to_elementary_basis(K.chern, [(alphabet, names)])


def _eta(log_c: Series) -> Series:
    out = Series.zero(log_c.vars, log_c.trunc)
    for i, part in enumerate(log_c.components()):
        if i == 0 or not part:
            continue
        out = out + part.scale(Fraction((-1) ** (i - 1), factorial(i - 1)))
    return out


def chern_character(A: VirtualBundle) -> Series:
    """``rank + eta(log c)``, with ``eta`` scaling degree i by ``(-1)**(i-1)/(i-1)!``."""
    return _eta(A.chern.log()) + A.rank


def chern_character_from_roots(A: VirtualBundle) -> Series:
    """``sum of sign * exp(root)`` over the explicit roots."""
    if A.roots is None:
        raise ValueError("no explicit roots")
    out = Series.zero(A.vars, A.trunc)
    for x, s in A.roots:
        out = out + x.exp().scale(s)
    return out


@lru_cache(maxsize=None)
def todd_log_coefficients(N: int) -> tuple[Fraction, ...]:
    """Coefficients ``a_k`` of ``log(x / (1 - exp(-x)))`` up to ``x**N``."""
    vt = VarTable(("x",), (1,))
    # (1 - e^{-x}) / x
    q = Series(vt, N, {(k,): Fraction((-1) ** k, factorial(k + 1)) for k in range(N + 1)})
    lg = q.inverse().log()
    return tuple(lg.terms.get((k,), Fraction(0)) for k in range(N + 1))


def todd(A: VirtualBundle) -> Series:
    """Multiplicative Todd class ``exp(sum_k a_k p_k)`` from Newton power sums."""
    N = A.trunc
    a = todd_log_coefficients(N)
    p = power_sums(A.chern)
    acc = Series.zero(A.vars, N)
    for k in range(1, N + 1):
        if a[k]:
            acc = acc + p[k].scale(a[k])
    return acc.exp()
