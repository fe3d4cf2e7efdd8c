import itertools

import pytest
from hypothesis import given, settings, strategies as st

from twisted_thue.diophantine.bounds import MatveevProvider, compose_bounds
from twisted_thue.diophantine.elimination import (
    eliminate_xy, parameter_profile, select_privileged, siegel_residual, solution_data, third_embedding,
)
from twisted_thue.embeddings import Embedded
from twisted_thue.errors import CoincidentEmbeddings, PrecisionExhausted
from twisted_thue.forms import twist
from twisted_thue.units import ExponentVector, embed_unit

samples = st.tuples(
    st.integers(-6, 6).filter(lambda n: n != -1),
    st.integers(-40, 40).filter(bool),
    st.integers(-40, 40).filter(bool),
)


def embedded_pair(basis, n, x, y):
    """alpha eps = eps^(n+1) and beta = x - alpha eps y under every embedding, with radii."""
    _, B = basis
    ae = embed_unit(B, ExponentVector((n + 1,)))
    beta = Embedded(tuple(x - v * y for v in ae.values), tuple(abs(y) * r for r in ae.radii))
    return ae, beta


@given(samples)
def test_eliminate_recovers_integers(stender21_wide, sample):
    n, x, y = sample
    ae, beta = embedded_pair(stender21_wide, n, x, y)
    for i, j in itertools.combinations(range(4), 2):
        yy, xx = eliminate_xy((beta[i], beta[j]), (ae[i], ae[j]), (beta.radii[i], beta.radii[j]),
                              (ae.radii[i], ae.radii[j]))
        assert abs(yy - y) < 1e-40 and abs(xx - x) < 1e-40


def test_eliminate_conjugate_pair_is_real(stender21_wide):
    ae, beta = embedded_pair(stender21_wide, 2, 3, -5)
    yy, xx = eliminate_xy((beta[0], beta[1]), (ae[0], ae[1]))
    assert abs(yy.imag) < 1e-40 and abs(xx.imag) < 1e-40


def test_eliminate_edge_cases():
    yy, _ = eliminate_xy((2 + 1j, 2 + 1j), (1j, 3 - 1j))
    assert yy == 0
    with pytest.raises(CoincidentEmbeddings):
        eliminate_xy((1, 2), (1 + 1j, 1 + 1j))


def test_siegel_residual_proportional_v():
    u = (1 + 2j, -3j, 0.5)
    assert siegel_residual(u, (7, 7, 7)).value == 0


@given(samples)
def test_siegel_residual_vanishes_on_solutions(stender21_wide, sample):
    n, x, y = sample
    ae, beta = embedded_pair(stender21_wide, n, x, y)
    ctx = stender21_wide[1].ctx
    for trip in itertools.permutations(range(4), 3):
        u = tuple(beta[j] for j in trip)
        v = tuple(ae[j] for j in trip)
        res = siegel_residual(u, v, tuple(beta.radii[j] for j in trip), tuple(ae.radii[j] for j in trip))
        assert res.value <= res.radius + ctx.ldexp(1, -128)
        assert res.value < ctx.ldexp(1, -64)


def test_siegel_residual_negative_control():
    res = siegel_residual((1, 2j, 3), (0.5, -1, 2 + 1j))
    assert res.value > 2 ** -8


def test_privileged_stender_large_n(stender21):
    K, B = stender21
    sd = solution_data(K.gen, B, 1, 1, ExponentVector((8,)), 10 ** 40)
    mods = [abs(v) for v in sd.ae.values]
    assert mods[sd.privileged.sigma_a] == max(mods)
    assert mods[sd.privileged.sigma_a] > 1
    assert mods[sd.privileged.tau_a] == min(mods)
    assert sd.privileged.tau_a_generic


def test_privileged_balanced_input_is_a_tie():
    vals = Embedded((1 + 0j, 1j, -1 + 0j, -1j), (1e-30,) * 4)
    with pytest.raises(PrecisionExhausted):
        select_privileged(vals, vals, (0, 1, 2, 3))


def test_tau_b_nonunique_flag():
    ae = Embedded((3 + 0j, 2j, 1 + 0j, 0.1j), (1e-30,) * 4)
    beta = Embedded((5 + 0j, 0.5 + 0j, -0.5 + 0j, 4j), (1e-30,) * 4)
    P = select_privileged(ae, beta, (0, 1, 2, 3))
    assert P.tau_b in (1, 2) and P.tau_b_nonunique
    assert (P.sigma_a, P.tau_a, P.sigma_b) == (0, 3, 0)


def test_third_embedding_rule():
    ae = Embedded((0j, 1 + 0j, 5 + 0j, 2 + 0j), (0,) * 4)
    assert third_embedding(ae, {0, 1}, 1) == 2
    with pytest.raises(CoincidentEmbeddings):
        third_embedding(ae, {0, 1, 2, 3}, 0)


@pytest.fixture(scope="module")
def report21(stender21):
    K, B = stender21
    return compose_bounds(K, B, K.gen, 10, MatveevProvider())


@settings(max_examples=25)
@given(samples)
def test_parameter_inequalities(stender21, sample):
    n, x, y = sample
    K, B = stender21
    e = ExponentVector((n,))
    m = max(2, abs(twist(K.gen, e, B)(x, y)))
    rep = compose_bounds(K, B, K.gen, m, MatveevProvider())
    prof = parameter_profile(K.gen, B, x, y, e, m)
    log_m = B.ctx.log(m)
    assert rep["direct.c4"] * prof.A <= prof.A_tilde <= rep["direct.c3"] * prof.A
    assert prof.B_tilde <= rep["direct.c8"] * (prof.B + log_m)
    assert prof.B <= rep["direct.c9"] * (prof.B_tilde + log_m)
    assert prof.rho_height <= rep["direct.c7"] * log_m


@given(samples)
def test_tau_b_of_alpha_eps_small_for_large_y(stender21, sample):
    """|tau_b(alpha eps)| <= 2 once |x| <= |y| and |y| >= (m / a0)^(1/d)."""
    n, x, y = sample
    K, B = stender21
    e = ExponentVector((n,))
    m = max(2, abs(twist(K.gen, e, B)(x, y)))
    if abs(x) > abs(y) or abs(y) < m ** 0.25:
        return
    sd = solution_data(K.gen, B, x, y, e, m)
    assert abs(sd.ae[sd.privileged.tau_b]) <= 2


def test_extreme_embedding_gaps_are_vacuous_at_desk_scale(report21, stender21):
    """The gap estimates apply only above kappa5 log m; desk-scale solutions never reach it."""
    K, B = stender21
    threshold = report21["direct.kappa5"] * B.ctx.log(10)
    applicable = 0
    for n, x, y in [(0, 1, 1), (-2, 1, -1), (3, 2, 5), (6, 1, 40)]:
        prof = parameter_profile(K.gen, B, x, y, ExponentVector((n,)), 10)
        if prof.A >= threshold and prof.B >= threshold:
            applicable += 1
    assert applicable == 0
