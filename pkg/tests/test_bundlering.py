import random

import pytest
from hypothesis import given, settings, strategies as st

from chernring.bundlering import (
    ProjectiveModel,
    verify_grr_zero_section,
    verify_koszul_character_kernel,
    verify_rr_without_denominators,
    verify_zero_section_suite,
)
from chernring.chern import VirtualBundle
from chernring.series import Series, VarTable
from randgen import rand_coeff

seeds = st.integers(0, 2**32 - 1)


def rand_poly(rng, vars, N, terms=4):
    s = Series.zero(vars, N)
    for _ in range(rng.randint(0, terms)):
        s = s + Series.monomial(vars, N, {n: rng.randint(0, 2) for n in vars.names}, rand_coeff(rng))
    return s


def test_relation_reduces_to_zero():
    m = ProjectiveModel(2, 5)
    xi = m.variable("xi")
    c1, c2 = m._relation[1], m._relation[2]
    assert not m.reduce(xi**3 + c1 * xi**2 + c2 * xi)
    assert m.xi() ** 3 == m.reduce(-(c1 * xi**2 + c2 * xi))


def test_normal_form_degree_bound():
    m = ProjectiveModel(2, 6)
    z = m.reduce(m.variable("xi") ** 6)
    assert all(e[m.xi_index] <= 2 for e in z.series.terms)


def test_rank_one_pushforward_of_one():
    N = 4
    m = ProjectiveModel(1, N)
    pushed = m.pushforward_class(VirtualBundle(1, Series.one(m.base_vars, N)))
    assert pushed.rank == 0
    xi, x = m.variable("xi"), m.variable("x1")
    want = sum(((xi + x) ** k for k in range(N + 1)), Series.zero(m.vars, N))
    assert m.reduce(pushed.chern) == m.reduce(want)


def test_zero_section_facts_rank_two():
    m = ProjectiveModel(2, 5)
    cQ = m.quotient_chern()
    assert m.restrict_to_zero_section(cQ) == m.base_chern[1] + m.base_chern[2] + 1
    assert m.restrict_to_zero_section(m.gysin(Series.one(m.base_vars, 5))) == m.base_chern[2]
    x = m.base_chern[1]
    assert m.restrict_to_zero_section(m.pullback(x)) == x


def test_trivial_model():
    t = ProjectiveModel(3, 5, trivial=True)
    assert t.top_chern_Q() == t.xi() ** 3
    assert t.pushforward(t.xi() ** 3) == 1


def test_rejects_bad_shapes():
    with pytest.raises(ValueError):
        ProjectiveModel(0, 3)
    with pytest.raises(ValueError):
        ProjectiveModel(3, 2)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 3), st.integers(3, 6))
def test_reduce_is_a_ring_map(seed, r, N):
    rng = random.Random(seed)
    m = ProjectiveModel(r, N)
    f, g = rand_poly(rng, m.vars, N), rand_poly(rng, m.vars, N)
    assert m.reduce(f * g) == m.reduce(f) * m.reduce(g)
    assert m.reduce(f + g) == m.reduce(f) + m.reduce(g)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 3), st.integers(0, 3))
def test_projection_formula(seed, r, extra):
    N = r + extra
    rng = random.Random(seed)
    m = ProjectiveModel(r, N)
    a = rand_poly(rng, m.base_vars, N)
    z = m.reduce(rand_poly(rng, m.vars, N))
    # p_# lowers degree by r, so compare modulo base degree > N - r
    lhs = m.pushforward(m.pullback(a) * z).retruncate(N - r)
    assert lhs == (a * m.pushforward(z)).retruncate(N - r)
    assert m.gysin(a) * m.xi() == m.reduce(Series.zero(m.vars, N))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_zero_section_suite(r):
    rep = verify_zero_section_suite(r, 6)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("n,r", [(n, r) for n in range(4) for r in range(1, 4)])
def test_rr_without_denominators(n, r):
    rep = verify_rr_without_denominators(n, r, 6)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("r", [1, 2])
def test_rr_without_denominators_generic(r):
    rep = verify_rr_without_denominators(0, r, 4, generic=True)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("n,r", [(n, r) for n in range(3) for r in range(1, 4)])
def test_grr(n, r):
    rep = verify_grr_zero_section(n, r, 6)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_kernel_identity(r):
    assert verify_koszul_character_kernel(r, 8).passed


def test_wrong_dual_sign_breaks_rr_and_grr(monkeypatch):
    """Negative control: dropping the dual sign in the Koszul class is caught."""
    from chernring import bundlering as B
    from chernring.chern import koszul_chern_in_elementary

    def unsigned(self):
        N = self.trunc
        universal = koszul_chern_in_elementary(self.r, N)
        cQ = self.quotient_chern().series
        values = {f"w{j}": cQ.component(j) for j in range(1, self.r + 1)}
        return self.reduce(universal.substitute(values, self.vars, N))

    monkeypatch.setattr(B.ProjectiveModel, "koszul_Q_chern", unsigned)
    assert not B.verify_rr_without_denominators(1, 1, 4).passed
    assert not B.verify_grr_zero_section(1, 1, 4).passed


def test_extra_base_variables():
    extra = VarTable(("c1", "c2"), (1, 2))
    m = ProjectiveModel(1, 4, extra=extra)
    assert m.base_vars.names == ("c1", "c2", "x1")
    assert m.vars.names[-1] == "xi"
