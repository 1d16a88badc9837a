"""Truncated, weighted-graded multivariate series with exact coefficients.

A :class:`Series` keeps every monomial of weighted degree at most ``trunc``
and drops everything above it, eagerly, after each operation.  Coefficients
are ``Fraction`` or :class:`~chernring.arith.IVPoly`; the two mix freely.

Canonical text order: ascending weighted degree, and inside one degree the
lexicographically larger exponent vector (in :class:`VarTable` order) first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC
from operator import add, mul
from typing import Callable, Iterable, Mapping, Sequence

from .arith import IVPoly, ivpoly_binomial

__all__ = [
    "VarTable",
    "Series",
    "ContextMismatch",
    "NotDivisible",
    "TruncationError",
    "series_mul",
    "series_inverse",
    "series_log",
    "series_exp",
    "series_pow_binomial",
    "series_divide_exact",
    "graded_component",
]


class ContextMismatch(ValueError):
    """Operands live over different variable tables or truncations."""


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""


class TruncationError(ValueError):
    """A request needs more graded pieces than the truncation keeps."""


def _norm(c):
    if isinstance(c, IVPoly):
        if c.is_constant():
            return c.constant_value()
        return c
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, _RationalABC, IVPoly))


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names with positive integer weights."""

    names: tuple[str, ...] = ()
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, int]]) -> "VarTable":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def roots(cls, prefix: str, n: int) -> "VarTable":
        """``prefix1 .. prefixn``, all of weight 1."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), (1,) * n)

    @classmethod
    def graded(cls, prefix: str, n: int) -> "VarTable":
        """``prefix1 .. prefixn`` with ``prefixj`` of weight j."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), tuple(range(1, n + 1)))

    def __add__(self, other: "VarTable") -> "VarTable":
        return VarTable(self.names + other.names, self.weights + other.weights)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def pairs(self):
        return list(zip(self.names, self.weights))


class Series:
    """Truncated series over a :class:`VarTable`.

    ``terms`` maps exponent tuples to nonzero coefficients.  Treat instances
    as immutable.
    """

    __slots__ = ("vars", "trunc", "terms")

    def __init__(self, vars: VarTable, trunc: int, terms: Mapping | None = None, *, _trusted=False):
        if trunc < 0:
            raise ValueError("truncation must be non-negative")
        self.vars = vars
        self.trunc = trunc
        if _trusted:
            self.terms = terms
            return
        w = vars.weights
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(w):
                raise ValueError(f"exponent {e} does not match {len(w)} variables")
            if sum(map(mul, e, w)) > trunc:
                continue
            c = _norm(c)
            if c:
                clean[e] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars: VarTable, trunc: int) -> "Series":
        return cls(vars, trunc, {}, _trusted=True)

    @classmethod
    def constant(cls, vars: VarTable, trunc: int, c=1) -> "Series":
        return cls(vars, trunc, {(0,) * len(vars): c})

    @classmethod
    def one(cls, vars: VarTable, trunc: int) -> "Series":
        return cls.constant(vars, trunc, 1)

    @classmethod
    def monomial(cls, vars: VarTable, trunc: int, exps: Mapping[str, int], c=1) -> "Series":
        e = [0] * len(vars)
        for name, k in exps.items():
            e[vars.index(name)] += k
        return cls(vars, trunc, {tuple(e): c})

    @classmethod
    def variable(cls, vars: VarTable, trunc: int, name: str) -> "Series":
        return cls.monomial(vars, trunc, {name: 1})

    def _like(self, terms) -> "Series":
        return Series(self.vars, self.trunc, terms, _trusted=True)

    # -- inspection -----------------------------------------------------

    def degree_of(self, exp: Sequence[int]) -> int:
        return sum(map(mul, exp, self.vars.weights))

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(self.degree_of(e) for e in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        return all(self.degree_of(e) == d for e in self.terms)

    def coefficient(self, exps: Mapping[str, int]):
        e = [0] * len(self.vars)
        for name, k in exps.items():
            e[self.vars.index(name)] += k
        return self.terms.get(tuple(e), Fraction(0))

    def has_symbolic_coefficients(self) -> bool:
        return any(isinstance(c, IVPoly) for c in self.terms.values())

    def sorted_terms(self):
        """Terms in canonical order."""
        w = self.vars.weights
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(map(mul, item[0], w)), tuple(-x for x in item[0])),
        )

    def _check(self, other: "Series"):
        if self.vars != other.vars or self.trunc != other.trunc:
            raise ContextMismatch(
                f"series contexts differ: {self.vars.names}/N={self.trunc} vs "
                f"{other.vars.names}/N={other.trunc}"
            )

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = Series.constant(self.vars, self.trunc, other)
        elif not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = _norm(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if _is_scalar(other):
            return self + (-other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = _norm(c)
        if not c:
            return Series.zero(self.vars, self.trunc)
        out = {}
        for e, v in self.terms.items():
            v = _norm(v * c)
            if v:
                out[e] = v
        return self._like(out)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        w = self.vars.weights
        N = self.trunc
        b_items = sorted(
            ((sum(map(mul, e, w)), e, c) for e, c in other.terms.items()), key=lambda t: t[0]
        )
        acc: dict = {}
        get = acc.get
        for ea, ca in self.terms.items():
            lim = N - sum(map(mul, ea, w))
            for db, eb, cb in b_items:
                if db > lim:
                    break
                e = tuple(map(add, ea, eb))
                prev = get(e)
                acc[e] = ca * cb if prev is None else prev + ca * cb
        out = {}
        for e, c in acc.items():
            c = _norm(c)
            if c:
                out[e] = c
        return self._like(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        """Integer power; negative exponents go through :meth:`inverse`."""
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Series.one(self.vars, self.trunc)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = Series.constant(self.vars, self.trunc, other)
        if not isinstance(other, Series):
            return NotImplemented
        return self.vars == other.vars and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, self.trunc, frozenset(self.terms.items())))

    # -- graded structure -----------------------------------------------

    def component(self, d: int) -> "Series":
        """Sum of the terms of weighted degree exactly ``d``."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        if d > self.trunc:
            raise TruncationError(f"degree {d} exceeds truncation {self.trunc}")
        w = self.vars.weights
        return self._like({e: c for e, c in self.terms.items() if sum(map(mul, e, w)) == d})

    def components(self) -> list["Series"]:
        w = self.vars.weights
        parts: list[dict] = [{} for _ in range(self.trunc + 1)]
        for e, c in self.terms.items():
            parts[sum(map(mul, e, w))][e] = c
        return [self._like(p) for p in parts]

    def retruncate(self, trunc: int) -> "Series":
        """Same terms, new truncation.

        Raising the truncation asserts that the dropped tail is zero, so only
        do it for genuine polynomials.
        """
        return Series(self.vars, trunc, self.terms)

    def graded_sign(self) -> "Series":
        """Multiply the degree-d part by ``(-1)**d``."""
        w = self.vars.weights
        return self._like(
            {e: (c if sum(map(mul, e, w)) % 2 == 0 else -c) for e, c in self.terms.items()}
        )

    # -- analytic operations --------------------------------------------

    def _unit_tail(self, what: str) -> "Series":
        if self.constant_term() != 1:
            raise ValueError(f"{what} needs constant term 1, got {self.constant_term()}")
        return self - 1

    def _horner(self, x: "Series", coeffs: Sequence) -> "Series":
        # sum_k coeffs[k] x^k; x has no constant term so x^k vanishes past trunc
        out = Series.zero(self.vars, self.trunc)
        for c in reversed(coeffs):
            out = out * x + c
        return out

    def inverse(self) -> "Series":
        w = self._unit_tail("inverse")
        return self._horner(w, [(-1) ** k for k in range(self.trunc + 1)])

    def log(self) -> "Series":
        w = self._unit_tail("log")
        return self._horner(
            w, [Fraction(0)] + [Fraction((-1) ** (k - 1), k) for k in range(1, self.trunc + 1)]
        )

    def exp(self) -> "Series":
        if self.constant_term() != 0:
            raise ValueError("exp needs zero constant term")
        return self._horner(self, [Fraction(1, factorial(k)) for k in range(self.trunc + 1)])

    def pow_binomial(self, y) -> "Series":
        """``sum_k binom(y, k) (self - 1)**k`` for ``y`` an integer or :class:`IVPoly`."""
        w = self._unit_tail("binomial power")
        y = y if isinstance(y, IVPoly) else IVPoly((y,))
        return self._horner(w, [ivpoly_binomial(k, y) for k in range(self.trunc + 1)])

    def divide_exact(self, g: "Series") -> "Series":
        """Quotient ``q`` with ``q * g == self``; raises :class:`NotDivisible` otherwise.

        ``g`` may be a single term or a unit; anything else goes through
        graded-lex long division of the polynomials as given.
        """
        self._check(g)
        if len(g.terms) == 1:
            (eg, cg), = g.terms.items()
            out = {}
            for e, c in self.terms.items():
                q = tuple(a - b for a, b in zip(e, eg))
                if min(q, default=0) < 0:
                    raise NotDivisible(f"term {e} is not divisible by {eg}")
                out[q] = c / cg
            return Series(self.vars, self.trunc, out)
        if g.constant_term() == 1:
            return self * g.inverse()
        return self._long_divide(g)

    def _long_divide(self, g: "Series") -> "Series":
        w = self.vars.weights

        def key(e):
            return (sum(map(mul, e, w)), e)

        lead_e = max(g.terms, key=key)
        lead_c = g.terms[lead_e]
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=key)
            q = tuple(a - b for a, b in zip(e, lead_e))
            if min(q, default=0) < 0:
                raise NotDivisible(f"remainder term {e} not divisible by leading term {lead_e}")
            c = rem[e] / lead_c
            quot[q] = c
            for eg, cg in g.terms.items():
                t = tuple(map(add, q, eg))
                v = _norm(rem.get(t, 0) - c * cg)
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Series(self.vars, self.trunc, quot)

    # -- change of variables --------------------------------------------

    def map_coefficients(self, fn: Callable) -> "Series":
        return Series(self.vars, self.trunc, {e: fn(c) for e, c in self.terms.items()})

    def eval_t0(self, m) -> "Series":
        """Substitute an integer for the symbol ``t0`` inside the coefficients."""
        return self.map_coefficients(lambda c: c(m) if isinstance(c, IVPoly) else c)

    def embed(self, vars: VarTable, trunc: int | None = None) -> "Series":
        """Re-index into a table that contains every current variable (same weights)."""
        trunc = self.trunc if trunc is None else trunc
        pos = []
        for name, wt in zip(self.vars.names, self.vars.weights):
            i = vars.index(name)
            if vars.weights[i] != wt:
                raise ContextMismatch(f"weight of {name} changes from {wt} to {vars.weights[i]}")
            pos.append(i)
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in zip(pos, e):
                ne[i] = k
            out[tuple(ne)] = c
        return Series(vars, trunc, out)

    def rename(self, mapping: Mapping[str, str]) -> "Series":
        names = tuple(mapping.get(n, n) for n in self.vars.names)
        return Series(VarTable(names, self.vars.weights), self.trunc, self.terms, _trusted=True)

    def drop_variables(self, names: Iterable[str]) -> "Series":
        """Set the named variables to zero and remove them from the table."""
        names = set(names)
        keep = [i for i, n in enumerate(self.vars.names) if n not in names]
        gone = [i for i, n in enumerate(self.vars.names) if n in names]
        vt = VarTable(
            tuple(self.vars.names[i] for i in keep), tuple(self.vars.weights[i] for i in keep)
        )
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in gone):
                continue
            out[tuple(e[i] for i in keep)] = c
        return Series(vt, self.trunc, out, _trusted=True)

    def substitute(self, values: Mapping[str, "Series"], vars: VarTable, trunc: int) -> "Series":
        """Evaluate at ``name -> Series`` over ``(vars, trunc)``.

        Every variable of ``self`` needs a value; values must share ``vars``
        and ``trunc``.
        """
        for name in self.vars.names:
            if name not in values:
                raise KeyError(f"no value for variable {name}")
        cols = [values[n] for n in self.vars.names]
        for s in cols:
            if s.vars != vars or s.trunc != trunc:
                raise ContextMismatch("substituted values must share the target context")
        powers: list[list[Series]] = [[Series.one(vars, trunc)] for _ in cols]

        def power(i, k):
            ps = powers[i]
            while len(ps) <= k:
                ps.append(ps[-1] * cols[i])
            return ps[k]

        out = Series.zero(vars, trunc)
        # group by the first variable's exponent would help; sizes here are small
        for e, c in self.sorted_terms():
            term = Series.constant(vars, trunc, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
                    if not term:
                        break
            out = out + term
        return out

    # -- rendering ------------------------------------------------------

    def monomial_text(self, e, sep: str = "*") -> str:
        parts = []
        for name, k in zip(self.vars.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return sep.join(parts)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = self.monomial_text(e)
            if isinstance(c, IVPoly):
                ctext = c.to_text()
                lead = c.coeffs[-1]
                if len([x for x in c.coeffs if x]) == 1:
                    neg = lead < 0
                    body = (-c).to_text() if neg else ctext
                else:
                    neg = False
                    body = f"({ctext})"
                body = f"{body} {mono}" if mono else body
            else:
                neg = c < 0
                mag = abs(c)
                if mono:
                    body = mono if mag == 1 else f"{mag} {mono}"
                else:
                    body = str(mag)
            pieces.append((neg, body))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Series({self.to_text()!r}, vars={self.vars.names}, N={self.trunc})"


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inverse(u: Series) -> Series:
    return u.inverse()


def series_log(u: Series) -> Series:
    return u.log()


def series_exp(f: Series) -> Series:
    return f.exp()


def series_pow_binomial(u: Series, y) -> Series:
    return u.pow_binomial(y)


def series_divide_exact(f: Series, g: Series) -> Series:
    return f.divide_exact(g)


def graded_component(f: Series, d: int) -> Series:
    return f.component(d)
