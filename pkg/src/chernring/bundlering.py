"""Cohomology ring of the projective completion P(E + 1) of a split bundle E.

The base carries the Chern roots ``x1..xr`` of ``E`` plus any extra graded
variables (roots ``a1..an`` of a class on the base, or generic Chern
variables).  The total space adds the hyperplane class ``xi`` subject to

    xi^(r+1) + c_1(E) xi^r + ... + c_r(E) xi = 0,

which is the defining relation for the rank r+1 bundle ``E + 1``.  Classes
are kept in normal form ``q_0 + q_1 xi + ... + q_r xi^r`` with base
coefficients ``q_j``.

Maps: ``p^#`` (pullback, an embedding), ``p_#`` (coefficient of ``xi^r``),
``f_!`` for the zero section (multiplication by ``c_r(Q)``), and restriction
along the zero section (``xi -> 0``).
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

from .arith import T0
from .chern import VirtualBundle, chern_character, koszul_chern_in_elementary, star, todd
from .report import Report, first_graded_difference
from .series import Series, VarTable, _norm
from .symfunc import Alphabet, elementary
from .universal import evaluate_rr_polynomial, universal_rr_polynomial

__all__ = ["ProjectiveModel", "RingClass", "verify_zero_section_suite",
           "verify_rr_without_denominators", "verify_grr_zero_section"]


class RingClass:
    """An element of the model ring in normal form (``xi``-degree at most r)."""

    __slots__ = ("model", "series")

    def __init__(self, model: "ProjectiveModel", series: Series):
        self.model = model
        self.series = series

    @property
    def coeffs(self) -> tuple[Series, ...]:
        """``(q_0, .., q_r)`` as series over the base table."""
        m = self.model
        xi = m.xi_index
        parts: list[dict] = [{} for _ in range(m.r + 1)]
        for e, c in self.series.terms.items():
            parts[e[xi]][e[:xi] + e[xi + 1:]] = c
        return tuple(Series(m.base_vars, m.trunc, p) for p in parts)

    def component(self, d: int) -> "RingClass":
        return RingClass(self.model, self.series.component(d))

    def _other(self, other):
        if isinstance(other, RingClass):
            if other.model is not self.model:
                raise ValueError("classes from different models")
            return other.series
        if isinstance(other, Series):
            return self.model.reduce(other).series
        return other

    def __add__(self, other):
        return RingClass(self.model, self.series + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return RingClass(self.model, self.series - self._other(other))

    def __rsub__(self, other):
        return RingClass(self.model, self._other(other) - self.series)

    def __neg__(self):
        return RingClass(self.model, -self.series)

    def __mul__(self, other):
        return self.model.reduce(self.series * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.model.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RingClass):
            return self.model is other.model and self.series == other.series
        return self.series == self._other(other)

    def __bool__(self):
        return bool(self.series)

    def __repr__(self):
        return f"RingClass({self.series.to_text()})"

    def __str__(self):
        return self.series.to_text()


class ProjectiveModel:
    """Formal model of ``X = P(E + 1)`` over a base with split ``E`` of rank ``r``.

    ``extra`` lists base variables besides the roots of ``E``.  With
    ``trivial=True`` the bundle ``E`` is trivial: no roots, all ``c_j(E) = 0``.
    """

    def __init__(self, r: int, trunc: int, extra: VarTable = VarTable(), trivial: bool = False,
                 root_prefix: str = "x"):
        if r < 1:
            raise ValueError("rank of E must be at least 1")
        if trunc < r:
            raise ValueError(f"truncation {trunc} below the rank {r} loses the top Chern class")
        self.r = r
        self.trunc = trunc
        self.trivial = trivial
        self.root_names = () if trivial else tuple(f"{root_prefix}{i}" for i in range(1, r + 1))
        self.base_vars = extra + VarTable(self.root_names, (1,) * len(self.root_names))
        self.vars = self.base_vars + VarTable(("xi",), (1,))
        self.xi_index = len(self.base_vars)
        N = trunc
        if trivial:
            self.base_chern = [Series.one(self.base_vars, N)] + [
                Series.zero(self.base_vars, N) for _ in range(r)]
        else:
            alphabet = Alphabet(self.root_names)
            self.base_chern = [elementary(self.base_vars, N, alphabet, j) for j in range(r + 1)]
        # c_j(E) pulled back to X, used by the rewrite rule
        self._relation = [c.embed(self.vars) for c in self.base_chern]

    # -- elements -------------------------------------------------------

    def xi(self) -> RingClass:
        return self.reduce(Series.variable(self.vars, self.trunc, "xi"))

    def one(self) -> RingClass:
        return RingClass(self, Series.one(self.vars, self.trunc))

    def variable(self, name: str) -> Series:
        return Series.variable(self.vars, self.trunc, name)

    def reduce(self, f: Series) -> RingClass:
        """Normal form: rewrite ``xi^(r+1)`` as ``-sum_j c_j(E) xi^(r+1-j)`` until xi-degree <= r."""
        if f.vars != self.vars:
            f = f.embed(self.vars, self.trunc)
        r = self.r
        xi = self.xi_index
        by_power: dict[int, dict] = {}
        for e, c in f.terms.items():
            by_power.setdefault(e[xi], {})[e[:xi] + (0,) + e[xi + 1:]] = c
        top = max(by_power, default=0)
        for k in range(top, r, -1):
            q = by_power.pop(k, None)
            if not q:
                continue
            qs = Series(self.vars, self.trunc, q)
            for j in range(1, r + 1):
                cj = self._relation[j]
                if not cj:
                    continue
                prod = qs * cj
                bucket = by_power.setdefault(k - j, {})
                for e, c in prod.terms.items():
                    v = _norm(bucket.get(e, 0) - c)
                    if v:
                        bucket[e] = v
                    else:
                        bucket.pop(e, None)
        out = {}
        for k, q in by_power.items():
            for e, c in q.items():
                out[e[:xi] + (k,) + e[xi + 1:]] = c
        return RingClass(self, Series(self.vars, self.trunc, out))

    def from_coeffs(self, coeffs: Sequence[Series]) -> RingClass:
        xi = Series.variable(self.vars, self.trunc, "xi")
        out = Series.zero(self.vars, self.trunc)
        for j, q in enumerate(coeffs):
            out = out + q.embed(self.vars) * xi ** j
        return self.reduce(out)

    # -- maps -----------------------------------------------------------

    def pullback(self, x: Series) -> RingClass:
        """``p^#``: a base class viewed on ``X``."""
        return RingClass(self, x.embed(self.vars, self.trunc))

    def pushforward(self, z: RingClass) -> Series:
        """``p_#``: the coefficient of ``xi^r``."""
        return z.coeffs[self.r]

    def restrict_to_zero_section(self, z: RingClass) -> Series:
        """Pullback along the zero section (``xi -> 0``): the coefficient ``q_0``."""
        return z.coeffs[0]

    def quotient_chern(self) -> RingClass:
        """``c(Q) = c(E) (1 - xi)^-1`` for ``Q = p^*(E + 1) / (L^taut)^dual``."""
        cE = Series.one(self.vars, self.trunc)
        for j in range(1, self.r + 1):
            cE = cE + self._relation[j]
        inv = (1 - Series.variable(self.vars, self.trunc, "xi")).inverse()
        return self.reduce(cE * inv)

    def top_chern_Q(self) -> RingClass:
        return self.quotient_chern().component(self.r)

    def gysin(self, x: Series) -> RingClass:
        """``f_!(x) = p^#(x) c_r(Q)`` for the zero section ``f``."""
        return self.pullback(x) * self.top_chern_Q()

    def koszul_Q_chern(self) -> RingClass:
        """Total Chern class of ``sum_k (-1)^k Lambda^k Q^dual``.

        Uses the universal expression in the Chern classes of ``Q^dual``,
        ``c_j(Q^dual) = (-1)^j c_j(Q)``.
        """
        N = self.trunc
        universal = koszul_chern_in_elementary(self.r, N)
        cQ = self.quotient_chern().series
        values = {f"w{j}": cQ.component(j).scale((-1) ** j) for j in range(1, self.r + 1)}
        return self.reduce(universal.substitute(values, self.vars, N))

    def pushforward_class(self, alpha: VirtualBundle) -> VirtualBundle:
        """Augmented class of ``f_* alpha = p^* alpha (x) lambda_{-1}(Q^dual)``; rank 0.

        ``alpha`` is a bundle over the base table; the chern series of the
        result is reduced to normal form.
        """
        a = VirtualBundle(alpha.rank, alpha.chern.embed(self.vars, self.trunc))
        K = VirtualBundle(0, self.koszul_Q_chern().series)
        out = star(a, K)
        return VirtualBundle(out.rank, self.reduce(out.chern).series)


# -- verifiers ------------------------------------------------------------


def _base_monomials(vars: VarTable, max_degree: int):
    n = len(vars)
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            if sum(k * w for k, w in zip(e, vars.weights)) <= max_degree:
                yield tuple(e)


def verify_zero_section_suite(r: int, N: int) -> Report:
    """Top Chern class of Q, ``p_#(c_r(Q)) = 1``, ``p_# f_! = id``, trivial-E case,
    and the factored relation ``prod_i (xi + x_i) * xi = 0``."""
    rep = Report("zero-section")
    params = {"r": r, "N": N}
    m = ProjectiveModel(r, N)
    xi = m.variable("xi")
    cr_Q = m.top_chern_Q()

    expected = Series.zero(m.vars, N)
    for j in range(r + 1):
        expected = expected + m._relation[j] * xi ** (r - j)
    diff = first_graded_difference(cr_Q.series, m.reduce(expected).series)
    rep.add("top-chern-class-of-Q", params, diff is None, diff)

    push = m.pushforward(cr_Q)
    rep.add("pushforward-of-top-chern-class-is-one", params, push == 1,
            f"p_#(c_r(Q)) = {push.to_text()}")

    failure = None
    for e in _base_monomials(m.base_vars, N - r):
        x = Series(m.base_vars, N, {e: 1})
        back = m.pushforward(m.gysin(x))
        if back != x:
            failure = f"p_#(f_!({x.to_text()})) = {back.to_text()}"
            break
    rep.add("pushforward-after-gysin-is-identity", params, failure is None, failure)

    failure = None
    for e in _base_monomials(m.base_vars, N - r):
        x = Series(m.base_vars, N, {e: 1})
        back = m.restrict_to_zero_section(m.gysin(x))
        want = x * m.base_chern[r]
        if back != want:
            failure = f"f^# f_!({x.to_text()}) = {back.to_text()}"
            break
    rep.add("self-intersection", params, failure is None, failure)

    t = ProjectiveModel(r, N, trivial=True)
    got = t.gysin(Series.one(t.base_vars, N))
    want = t.reduce(Series.variable(t.vars, N, "xi") ** r)
    rep.add("trivial-bundle-gysin-is-xi-power", params, got == want, f"f_!(1) = {got}")

    fact = Series.one(m.vars, N)
    for name in m.root_names:
        fact = fact * (xi + m.variable(name))
    fact = m.reduce(fact * xi)
    rep.add("factored-relation", params, not fact, f"reduces to {fact}")
    return rep


def _alpha_bundle(m: ProjectiveModel, n: int, generic: bool) -> VirtualBundle:
    if generic:
        c = Series.one(m.base_vars, m.trunc)
        for j in range(1, m.trunc + 1):
            c = c + Series.variable(m.base_vars, m.trunc, f"tau{j}")
        return VirtualBundle(T0, c)
    names = [f"a{i}" for i in range(1, n + 1)]
    return VirtualBundle.split(names, m.base_vars, m.trunc)


def _alpha_table(n: int, N: int, generic: bool) -> VarTable:
    return VarTable.graded("tau", N) if generic else VarTable.roots("a", n)


def verify_rr_without_denominators(n: int, r: int, N: int, generic: bool = False) -> Report:
    """Compare ``C_i(f_* alpha)`` with ``f_!(P_{i-r,r}(rk alpha, c(alpha); c(E)))`` for ``i <= N``.

    ``alpha`` has ``n`` Chern roots, or with ``generic=True`` symbolic rank
    ``t0`` and generic Chern classes ``tau_j``.
    """
    rep = Report("rr-without-denominators")
    m = ProjectiveModel(r, N, extra=_alpha_table(n, N, generic))
    alpha = _alpha_bundle(m, n, generic)
    pushed = m.pushforward_class(alpha)
    params = {"n": "generic" if generic else n, "r": r, "N": N}
    rep.add("rank-zero", params, pushed.rank == 0, f"rank {pushed.rank}")

    c_alpha = alpha.chern.components()[1:]
    c_E = m.base_chern[1:]
    cf = m.reduce(pushed.chern)
    for i in range(N + 1):
        got = cf.component(i)
        if i == 0:
            want = m.one()
        elif i < r:
            want = RingClass(m, Series.zero(m.vars, N))
        else:
            P = universal_rr_polynomial(i - r, r)
            val = evaluate_rr_polynomial(P, alpha.rank, c_alpha, c_E, m.base_vars, N)
            want = m.gysin(val)
        diff = first_graded_difference(got.series, want.series)
        rep.add(f"degree-{i}", dict(params, degree=i), diff is None, diff)
    return rep


def verify_grr_zero_section(n: int, r: int, N: int) -> Report:
    """``ch(f_* alpha) = f_!(ch(alpha) td(E)^-1)`` in the model, plus the kernel identities."""
    rep = Report("grr-zero-section")
    params = {"n": n, "r": r, "N": N}
    m = ProjectiveModel(r, N, extra=VarTable.roots("a", n))
    alpha = _alpha_bundle(m, n, False)
    K = VirtualBundle(0, m.koszul_Q_chern().series)
    ch_K = m.reduce(chern_character(K))

    cQ = m.quotient_chern().series
    td_Q = todd(VirtualBundle(r, cQ))
    kernel = m.top_chern_Q() * td_Q.inverse()
    diff = first_graded_difference(ch_K.series, kernel.series)
    rep.add("koszul-character-equals-top-chern-over-todd", params, diff is None, diff)

    ch_alpha = chern_character(alpha)
    td_E = todd(VirtualBundle.split(m.root_names, m.base_vars, N))
    lhs = m.pullback(ch_alpha) * ch_K
    rhs = m.gysin(ch_alpha * td_E.inverse())
    diff = first_graded_difference(lhs.series, rhs.series)
    rep.add("grr", params, diff is None, diff)

    # ch of the pushed-forward augmented class, straight from its Chern series
    pushed = m.pushforward_class(alpha)
    ch_pushed = m.reduce(chern_character(pushed))
    diff = first_graded_difference(ch_pushed.series, lhs.series)
    rep.add("character-of-tensor-class", params, diff is None, diff)

    # free roots: sum_S (-1)^|S| exp(-sum_S b) = prod (1 - exp(-b_i)) = c_r td^-1
    rep.extend(verify_koszul_character_kernel(r, N))
    return rep


def verify_koszul_character_kernel(r: int, N: int) -> Report:
    from .chern import chern_character_from_roots, lambda_minus_one_dual

    rep = Report("koszul-kernel")
    params = {"r": r, "N": N}
    names = [f"b{i}" for i in range(1, r + 1)]
    vars = VarTable.roots("b", r)
    E = VirtualBundle.split(names, vars, N)
    K = lambda_minus_one_dual(E)
    by_roots = chern_character_from_roots(K)
    by_log = chern_character(K)
    prod = Series.one(vars, N)
    for name in names:
        prod = prod * (1 - (-Series.variable(vars, N, name)).exp())
    top = E.chern.component(r)
    via_todd = top * todd(E).inverse()
    for label, lhs, rhs in (
        ("alternating-exponentials-equal-product", by_roots, prod),
        ("log-character-equals-product", by_log, prod),
        ("product-equals-top-chern-over-todd", prod, via_todd),
    ):
        diff = first_graded_difference(lhs, rhs)
        rep.add(label, params, diff is None, diff)
    return rep
