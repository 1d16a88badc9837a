"""Exact scalars: rationals and integer-valued polynomials in ``t0``.

Rationals are :class:`fractions.Fraction`.  :class:`IVPoly` is an element of
the ring of rational polynomials in one symbol ``t0`` that take integer values
at every integer.  It is stored in the monomial basis; integrality is checked
on demand with finite differences rather than maintained structurally.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]

__all__ = ["Rational", "IVPoly", "ivpoly_binomial", "ivpoly_mul", "ivpoly_eval", "T0"]


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IVPoly:
    """Polynomial in ``t0`` with rational coefficients; ``coeffs[k]`` multiplies ``t0**k``.

    Values are immutable.  Arithmetic mixes freely with ``int`` and ``Fraction``.
    The class itself does not enforce integrality (sums and products of
    integer-valued polynomials stay integer-valued, and that is all the
    library produces); call :meth:`is_integer_valued` to check.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence = ()):
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "IVPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree in ``t0``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- ring structure -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, IVPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return IVPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IVPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IVPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                return IVPoly()
            return IVPoly([c * other for c in self.coeffs])
        if not isinstance(other, IVPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IVPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IVPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return IVPoly([c / other for c in self.coeffs])
        if isinstance(other, IVPoly) and other.is_constant() and other.coeffs:
            return self / other.coeffs[0]
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = IVPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IVPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # agree with hash(Fraction) for constants so dict lookups stay consistent
            self._hash = hash(self.coeffs[0]) if len(self.coeffs) == 1 else (
                0 if not self.coeffs else hash(self.coeffs))
        return self._hash

    # -- evaluation and substitution -----------------------------------

    def __call__(self, m):
        return ivpoly_eval(self, m)

    def compose(self, inner: "IVPoly") -> "IVPoly":
        """Return ``self(inner(t0))``."""
        out = IVPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, c: int) -> "IVPoly":
        """Return ``self(t0 + c)``."""
        return self.compose(IVPoly((c, 1)))

    def is_integer_valued(self) -> bool:
        """Integer values at ``0..deg`` (equivalently at every integer)."""
        if not self.coeffs:
            return True
        return all(ivpoly_eval(self, m).denominator == 1 for m in range(self.degree + 1))

    def binomial_coordinates(self) -> list[Fraction]:
        """Coordinates in the basis ``binom(t0, k)``; integral iff integer-valued.

        The k-th coordinate is the k-th forward difference at 0.
        """
        vals = [ivpoly_eval(self, m) for m in range(self.degree + 1)]
        out = []
        while vals:
            out.append(vals[0])
            vals = [b - a for a, b in zip(vals, vals[1:])]
        return out

    @classmethod
    def from_binomial_coordinates(cls, coords: Sequence) -> "IVPoly":
        out = IVPoly()
        for k, c in enumerate(coords):
            if c:
                out = out + ivpoly_binomial(k) * Fraction(c)
        return out

    def __repr__(self):
        return f"IVPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_text()

    def to_text(self, symbol: str = "t0") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag} {mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


T0 = IVPoly((0, 1))


def ivpoly_binomial(k: int, arg: IVPoly = T0) -> IVPoly:
    """``binom(arg, k) = arg (arg-1) ... (arg-k+1) / k!``; ``arg`` defaults to ``t0``."""
    if k < 0:
        raise ValueError(f"binomial index must be non-negative, got {k}")
    out = IVPoly((1,))
    for i in range(k):
        out = out * (arg - i)
    return out / factorial(k)


def ivpoly_mul(a: IVPoly, b: IVPoly) -> IVPoly:
    return a * b


def ivpoly_eval(p: IVPoly, m) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * m + c
    return acc
