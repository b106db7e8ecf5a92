import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from borromean import charvar as cv
from borromean import sampling, tap
from borromean.errors import LabelMismatch, MissingTheta, NotDivisible, ZeroPolynomial
from borromean.laurent import LaurentPoly3, Mat2L, equal_up_to_unit
from borromean.matrices import E, random_sl2
from borromean.words import WIRTINGER, GroupRingElem

seeds = st.integers(0, 2**32 - 1)
labels = st.sampled_from(cv.ALL_LABELS)
S = [None] + [LaurentPoly3.var(j) for j in (1, 2, 3)]
ID = (1, 2, 3)


def holonomy_delta():
    f = [S[j] + LaurentPoly3.var(j, -1) - 2 for j in (1, 2, 3)]
    return f[0] * f[1] * f[2] - 8


def test_phi_examples():
    mats = [E, E, cv.mk_d(2)]
    got = tap.phi(GroupRingElem.one() - GroupRingElem.of("x3"), mats, ID)
    want = Mat2L(1 - 2 * S[3], LaurentPoly3(), LaurentPoly3(), 1 - 0.5 * S[3])
    assert got.distance(want) < 1e-15
    assert tap.phi(GroupRingElem.of("x1 X1"), mats, ID).distance(Mat2L.identity()) == 0


@given(seeds, st.integers(1, 3))
def test_denominator_quadratic(seed, v):
    rng = np.random.default_rng(seed)
    rho = cv.Representation(*(random_sl2(rng) for _ in range(3)))
    t = complex(np.trace(rho[v]))
    want = S[v] * S[v] - t * S[v] + 1
    assert tap.fox_denominator(rho, v).significant(1e-12).terms.keys() == want.terms.keys()
    assert equal_up_to_unit(tap.fox_denominator(rho, v), want, 1e-10)[0]


def test_x2_sample_pipeline():
    rho = cv.realize_X2(1, kappa_prev=3, kappa_next=2)
    fox = tap.tap_fox(rho, 3)
    s1, s2, s3 = S[1:]
    want = (s1 + LaurentPoly3.var(1, -1)) * (s2 + LaurentPoly3.var(2, -1) - 2.5) * (s3 + LaurentPoly3.var(3, -1) - 10 / 3)
    ok, _, scale = equal_up_to_unit(fox.raw, want)
    assert ok and abs(scale - 1) < 1e-9


@pytest.mark.parametrize("eps", [1, -1])
def test_holonomy_delta(eps):
    rho = sampling.holonomy(eps)
    for v in (1, 2, 3):
        fox = tap.tap_fox(rho, v)
        ok, _, scale = equal_up_to_unit(fox.raw, holonomy_delta())
        assert ok and abs(scale - 1) < 1e-9
    closed = tap.tap_closed(cv.character_of(rho), cv.ComponentLabel("X4"))
    assert equal_up_to_unit(closed.raw, holonomy_delta())[0]


def test_holonomy_wirtinger_route_agrees():
    rho = sampling.holonomy()
    w = tap.tap_fox(rho, 3, WIRTINGER)
    assert tap.compare(w, tap.tap_fox(rho, 3))[0]


@given(seeds, labels)
def test_fox_matches_closed_form(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    closed = tap.tap_closed(cv.character_of(rho), label)
    for v in (1, 2, 3):
        ok, _, scale = tap.compare(tap.tap_fox(rho, v), closed)
        assert ok and abs(abs(scale) - 1) <= 1e-7


@given(seeds, labels)
def test_conjugation_invariance(seed, label):
    rng = np.random.default_rng(seed)
    rho = sampling.sample(rng, label)
    a = tap.tap_fox(rho, 3)
    b = tap.tap_fox(sampling.random_conjugate(rng, rho), 3)
    assert tap.compare(a, b, 1e-8)[0]


@given(seeds, labels)
def test_reduced_determinant_and_expansion(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    red = tap.tap_reduced(rho)
    assert tap.compare(tap.tap_fox(rho, 3), tap._result(red, "reduced", 3))[0]
    exp = tap.det_expansion(rho)
    assert (red - exp).max_abs() <= 1e-9 * red.max_abs()


@given(seeds, labels)
def test_simplified_minor_matches_raw_jacobian(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    assert tap.simplified_minor_residual(rho) <= 1e-9 * max(1.0, *(np.abs(x).max() for x in rho.mats)) ** 6


@given(seeds, labels)
def test_xi_and_eta(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    assert tap.xi_cross_check(rho) <= 1e-8
    assert max(tap.eta_residuals(rho)) <= 1e-8


def test_xi_on_identity_triple():
    rho = cv.Representation(E, E, E)
    assert tap.xi_traces(rho) == 8
    assert tap.xi_cross_check(rho) == 0


def test_adjugate_identities_on_u(rng):
    u, v = tap.tap_uv(sampling.sample_X4(rng))
    tr_u = u.trace()
    lhs = u + u.adj()
    assert lhs.distance(Mat2L.identity() * tr_u) < 1e-9
    assert (u * u.adj()).distance(Mat2L.identity() * u.det()) < 1e-9


def test_closed_form_constants():
    c = cv.CharacterTuple(0.5, 0, 0, 0.3, 0.4, 0, 0.24, None)
    assert tap.closed_constant(c, cv.ComponentLabel("X3", 1)) == pytest.approx(4 * 0.24)
    assert tap.closed_constant(c, cv.ComponentLabel("X2", 2)) == 0


def test_closed_errors():
    rho = sampling.holonomy()
    c = cv.character_of(rho)
    bare = cv.CharacterTuple(*c.as_tuple())
    with pytest.raises(MissingTheta):
        tap.tap_closed(bare, cv.ComponentLabel("X4"))
    with pytest.raises(LabelMismatch):
        tap.tap_closed(c, cv.ComponentLabel("X2", 1))


def test_fox_rejects_non_representation(rng):
    # only column 1 detects it: columns 2 and 3 divide exactly for any triple
    rho = cv.Representation(*(random_sl2(rng) for _ in range(3)))
    with pytest.raises(NotDivisible):
        tap.tap_fox(rho, 1)
    tap.tap_fox(rho, 3)


def test_fox_column_range():
    with pytest.raises(IndexError):
        tap.tap_fox(sampling.holonomy(), 4)


def test_span_degree_examples():
    assert tap.span_degree(holonomy_delta()) == ((2, 2, 2), 6)
    assert tap.span_degree(LaurentPoly3.const(3)) == ((0, 0, 0), 0)
    assert tap.span_degree(LaurentPoly3.var(1, 3) + LaurentPoly3.var(1, -1))[0][0] == 4
    with pytest.raises(ZeroPolynomial):
        tap.span_degree(LaurentPoly3())


@given(seeds, labels)
def test_spans_are_two(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    assert tap.span_degree(tap.tap_fox(rho, 3).delta)[0] == (2, 2, 2)


def test_result_json_round_trip():
    r = tap.tap_fox(sampling.holonomy(), 2)
    back = tap.TapResult.from_json(r.to_json())
    assert back == r
    assert set(r.to_json()) == {"delta", "method", "column", "unit", "scale"}
