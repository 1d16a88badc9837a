"""The universal Riemann-Roch polynomials and the series they come from.

Alphabets ``a1..an`` and ``b1..br`` are Chern roots; ``sigma_j`` and ``s_j``
are their elementary symmetric functions.  The pipeline is

    koszul_twist_series     prod_i prod_{S subset b} (1 + a_i - sum_S b)^{(-1)^|S|}
    koszul_series           the same with n = 1, a = 0
    koszul_quotient_series  (koszul_series - 1) / s_r, in s_1..s_r
    normalized_twist_series koszul_twist_series * koszul_series^{-n}
    rr_homogeneous_part     degree n + r part of normalized_twist * koszul^{t0}
    universal_rr_polynomial the latter in (sigma; s), divided by s_r,
                            with sigma_j -> t_j and s_j -> u_j

All results are cached; they are immutable values.
"""
from __future__ import annotations

from functools import lru_cache

from .arith import IVPoly, T0
from .report import Report, first_graded_difference
from .series import NotDivisible, Series, VarTable
from .symfunc import Alphabet, star0, subset_product, to_elementary_basis
from .chern import VirtualBundle, lambda_minus_one_dual

__all__ = [
    "root_table",
    "koszul_twist_series",
    "koszul_series",
    "koszul_quotient_series",
    "normalized_twist_series",
    "rr_homogeneous_part",
    "rr_homogeneous_part_via_twist",
    "universal_rr_polynomial",
    "evaluate_rr_polynomial",
    "check_twist_divisibility",
    "check_star_twist",
    "check_koszul_formula",
    "verify_generating_identity",
]


def _names(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def root_table(n: int, r: int) -> VarTable:
    """``a1..an, b1..br``, all of weight 1."""
    return VarTable.roots("a", n) + VarTable.roots("b", r)


def _root_product(vars: VarTable, N: int, names) -> Series:
    out = Series.one(vars, N)
    for name in names:
        out = out * Series.variable(vars, N, name)
    return out


@lru_cache(maxsize=None)
def koszul_twist_series(n: int, r: int, N: int) -> Series:
    vars = root_table(n, r)
    b = Alphabet.of("b", r)
    out = Series.one(vars, N)
    for name in _names("a", n):
        out = out * subset_product(vars, N, b, Series.variable(vars, N, name))
    return out


@lru_cache(maxsize=None)
def koszul_series(r: int, N: int) -> Series:
    """The twist series for ``n = 1`` at ``a = 0``, over ``b1..br`` only."""
    vars = VarTable.roots("b", r)
    return subset_product(vars, N, Alphabet.of("b", r))


@lru_cache(maxsize=None)
def koszul_quotient_series(r: int, N: int) -> Series:
    """Series ``Q`` in ``s1..sr`` with ``koszul_series = 1 + s_r Q``; kept to weight ``N - r``."""
    if N < r:
        raise ValueError(f"truncation {N} below r = {r}")
    g = koszul_series(r, N)
    e = to_elementary_basis(g - 1, [(Alphabet.of("b", r), _names("s", r))])
    sr = Series.variable(e.vars, N, f"s{r}")
    q = e.divide_exact(sr)
    return q.retruncate(N - r)


@lru_cache(maxsize=None)
def normalized_twist_series(n: int, r: int, N: int) -> Series:
    vars = root_table(n, r)
    g = koszul_series(r, N).embed(vars)
    return koszul_twist_series(n, r, N) * g ** (-n)


@lru_cache(maxsize=None)
def rr_homogeneous_part(n: int, r: int) -> Series:
    """Degree ``n + r`` component of ``normalized_twist * koszul ** t0``."""
    N = n + r
    vars = root_table(n, r)
    g = koszul_series(r, N).embed(vars)
    return (normalized_twist_series(n, r, N) * g.pow_binomial(T0)).component(N)


def rr_homogeneous_part_via_twist(n: int, r: int) -> Series:
    """Same component through ``koszul_twist * koszul ** (t0 - n)``."""
    N = n + r
    vars = root_table(n, r)
    g = koszul_series(r, N).embed(vars)
    return (koszul_twist_series(n, r, N) * g.pow_binomial(T0 - n)).component(N)


@lru_cache(maxsize=None)
def universal_rr_polynomial(n: int, r: int) -> Series:
    """``P_{n,r}`` over ``t1..tn, u1..ur`` (``t_j``, ``u_j`` of weight j), coefficients in ``t0``.

    Raises :class:`NotDivisible` if the homogeneous part fails to be a
    multiple of ``s_r``.
    """
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    h = rr_homogeneous_part(n, r)
    e = to_elementary_basis(
        h,
        [(Alphabet.of("a", n), _names("sigma", n)), (Alphabet.of("b", r), _names("s", r))],
    )
    sr = Series.variable(e.vars, e.trunc, f"s{r}")
    p = e.divide_exact(sr)
    mapping = {f"sigma{j}": f"t{j}" for j in range(1, n + 1)}
    mapping.update({f"s{j}": f"u{j}" for j in range(1, r + 1)})
    return p.rename(mapping).retruncate(n)


def evaluate_rr_polynomial(
    P: Series, rank, t_values, u_values, vars: VarTable, trunc: int
) -> Series:
    """Evaluate a universal polynomial at a rank and lists of graded values.

    ``rank`` is an integer or an :class:`IVPoly` (substituted for ``t0``);
    ``t_values[j-1]`` and ``u_values[j-1]`` are the values of ``t_j`` and
    ``u_j``.  Missing ``t_j`` values count as zero.
    """
    if isinstance(rank, IVPoly):
        P = P.map_coefficients(lambda c: c.compose(rank) if isinstance(c, IVPoly) else c)
    else:
        P = P.eval_t0(rank)
    zero = Series.zero(vars, trunc)
    values = {}
    for name in P.vars.names:
        j = int(name[1:])
        src = t_values if name[0] == "t" else u_values
        values[name] = src[j - 1] if j <= len(src) else zero
    return P.substitute(values, vars, trunc)


# -- checks ---------------------------------------------------------------


def check_twist_divisibility(n: int, r: int, N: int) -> Report:
    """``twist - 1``, ``koszul - 1`` and ``normalized twist - 1`` are multiples of ``b1...br``."""
    rep = Report("divisibility")
    params = {"n": n, "r": r, "N": N}
    vars = root_table(n, r)
    bprod = _root_product(vars, N, _names("b", r))
    for label, s in (
        ("twist", koszul_twist_series(n, r, N)),
        ("koszul", koszul_series(r, N).embed(vars)),
        ("normalized-twist", normalized_twist_series(n, r, N)),
    ):
        try:
            q = (s - 1).divide_exact(bprod)
            ok = (q * bprod) == (s - 1)
            rep.add(f"{label}-minus-one-divisible", params, ok, "quotient does not multiply back")
        except NotDivisible as exc:
            rep.add(f"{label}-minus-one-divisible", params, False, str(exc))
    return rep


def check_star_twist(n: int, r: int, N: int) -> Report:
    """``star0(prod (1 + a_i), koszul_series) == normalized_twist_series``."""
    rep = Report("star-twist")
    vars = root_table(n, r)
    u = Series.one(vars, N)
    for name in _names("a", n):
        u = u * (1 + Series.variable(vars, N, name))
    g = koszul_series(r, N).embed(vars)
    lhs = star0(u, g)
    rhs = normalized_twist_series(n, r, N)
    diff = first_graded_difference(lhs, rhs)
    rep.add("star-equals-normalized-twist", {"n": n, "r": r, "N": N}, diff is None, diff)
    return rep


def check_koszul_formula(r: int, N: int) -> Report:
    """Chern class of the alternating sum of exterior powers of the dual, in
    elementary form, equals ``1 + s_r * koszul_quotient_series``."""
    rep = Report("koszul-formula")
    b = Alphabet.of("b", r)
    vars = b.table()
    E = VirtualBundle.split(b.names, vars, N)
    K = lambda_minus_one_dual(E)
    lhs = to_elementary_basis(K.chern, [(b, _names("s", r))])
    q = koszul_quotient_series(r, N).retruncate(N)
    sr = Series.variable(q.vars, N, f"s{r}")
    rhs = 1 + sr * q
    diff = first_graded_difference(lhs, rhs)
    params = {"r": r, "N": N}
    rep.add("rank-zero", params, K.rank == 0, f"rank {K.rank}")
    rep.add("chern-class-formula", params, diff is None, diff)
    return rep


def verify_generating_identity(r: int, up_to: int) -> Report:
    """Check, degree by degree up to ``up_to``, that

        koszul(u) ** t0 * star0(1 + tau_1 + tau_2 + ..., koszul(u))

    has degree-n part ``u_r * P_{n-r,r}(t0, tau; u)`` for ``n >= r`` and
    vanishes for ``1 <= n < r``; here ``koszul(u) = 1 + u_r * Q(u_1..u_r)``.
    A final case sets every ``tau_j`` to zero.
    """
    rep = Report("generating-identity")
    D = up_to
    vars = VarTable.graded("tau", D) + VarTable.graded("u", r)
    q = koszul_quotient_series(r, D).rename({f"s{j}": f"u{j}" for j in range(1, r + 1)})
    q = q.retruncate(D).embed(vars)
    ur = Series.variable(vars, D, f"u{r}")
    g = 1 + ur * q
    tau = Series.one(vars, D)
    for j in range(1, D + 1):
        tau = tau + Series.variable(vars, D, f"tau{j}")
    gt = g.pow_binomial(T0)
    lhs = gt * star0(tau, g)
    lhs0 = gt  # star0(1, g) = 1

    tau_vals = [Series.variable(vars, D, f"tau{j}") for j in range(1, D + 1)]
    u_vals = [Series.variable(vars, D, f"u{j}") for j in range(1, r + 1)]
    expected = Series.one(vars, D)
    expected0 = Series.one(vars, D)
    for n in range(r, D + 1):
        P = universal_rr_polynomial(n - r, r)
        expected = expected + ur * evaluate_rr_polynomial(P, T0, tau_vals, u_vals, vars, D)
        expected0 = expected0 + ur * evaluate_rr_polynomial(P, T0, [], u_vals, vars, D)

    for n in range(D + 1):
        got = lhs.component(n)
        want = expected.component(n)
        diff = first_graded_difference(got, want)
        rep.add(f"degree-{n}", {"r": r, "degree": n}, diff is None, diff)
    diff = first_graded_difference(lhs0, expected0)
    rep.add("tau-zero", {"r": r, "up_to": D}, diff is None, diff)
    return rep
