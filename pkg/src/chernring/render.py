"""Text, LaTeX and JSON renderings of series and t0-polynomials."""
from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

from .arith import IVPoly, T0, ivpoly_binomial
from .series import Series

_GREEK = {"xi", "tau", "sigma", "eta", "lambda", "alpha", "beta"}
_NAME = re.compile(r"^([A-Za-z]+?)(\d*)$")


def latex_name(name: str) -> str:
    m = _NAME.match(name)
    if not m:
        return name
    stem, idx = m.groups()
    stem = f"\\{stem}" if stem in _GREEK else stem
    if not idx:
        return stem
    return f"{stem}_{idx}" if len(idx) == 1 else f"{stem}_{{{idx}}}"


def latex_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def binomial_form(p: IVPoly) -> tuple[int, int, int] | None:
    """``(sign, shift, k)`` with ``p == sign * binom(t0 + shift, k)``, if any (k >= 2)."""
    k = p.degree
    if k < 2:
        return None
    lead = p.coeffs[k] * factorial(k)
    if lead not in (1, -1):
        return None
    sign = int(lead)
    q = p * sign
    shift = (q.coeffs[k - 1] * factorial(k) + Fraction(k * (k - 1), 2)) / k
    if shift.denominator != 1:
        return None
    shift = int(shift)
    if ivpoly_binomial(k, T0 + shift) != q:
        return None
    return sign, shift, k


def _latex_poly_t0(p: IVPoly) -> str:
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("t_0" if k == 1 else f"t_0^{{{k}}}")
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{latex_rational(mag)} {mono}".strip())
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        text += f" {s} {b}"
    return text


def latex_coefficient(c) -> tuple[bool, str, bool]:
    """``(negative, body, is_one)`` for a coefficient; ``body`` is signless."""
    if isinstance(c, IVPoly):
        bf = binomial_form(c)
        if bf is not None:
            sign, shift, k = bf
            arg = "t_0" if shift == 0 else f"t_0{'+' if shift > 0 else '-'}{abs(shift)}"
            return sign < 0, f"\\binom{{{arg}}}{{{k}}}", False
        nonzero = [x for x in c.coeffs if x]
        if len(nonzero) == 1:
            neg = c.coeffs[-1] < 0
            return neg, _latex_poly_t0(-c if neg else c), False
        return False, f"\\left({_latex_poly_t0(c)}\\right)", False
    return c < 0, latex_rational(abs(c)), abs(c) == 1


def series_latex(s: Series) -> str:
    if not s.terms:
        return "0"
    pieces = []
    for e, c in s.sorted_terms():
        mono = " ".join(
            latex_name(n) if k == 1 else f"{latex_name(n)}^{{{k}}}"
            for n, k in zip(s.vars.names, e) if k
        )
        neg, body, is_one = latex_coefficient(c)
        if mono:
            body = mono if is_one else f"{body} {mono}"
        pieces.append((neg, body))
    text = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


def coefficient_json(c):
    if isinstance(c, IVPoly):
        return {
            "t0_monomial": [str(x) for x in c.coeffs],
            "t0_binomial": [str(x) for x in c.binomial_coordinates()],
        }
    return str(c)


def series_json(s: Series) -> dict:
    return {
        "vars": [{"name": n, "weight": w} for n, w in s.vars.pairs()],
        "truncate": s.trunc,
        "terms": [
            {
                "monomial": {n: k for n, k in zip(s.vars.names, e) if k},
                "coefficient": coefficient_json(c),
            }
            for e, c in s.sorted_terms()
        ],
        "text": s.to_text(),
    }


def render_series(s: Series, fmt: str):
    """Text or LaTeX string, or a JSON-ready dict."""
    if fmt == "text":
        return s.to_text()
    if fmt == "latex":
        return series_latex(s)
    if fmt == "json":
        return series_json(s)
    raise ValueError(f"unknown format {fmt!r}")
