import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from borromean import charvar as cv
from borromean import sampling
from borromean.errors import (
    ConstraintError,
    DomainError,
    ExcludedHypersurfaceError,
    ReducibleError,
    UnclassifiedError,
)
from borromean.matrices import E, comm, det, dist, inv, random_sl2, tr

seeds = st.integers(0, 2**32 - 1)
labels = st.sampled_from(cv.ALL_LABELS)
I = 1j


def x2_sample():
    # x1 = w, x2 = d(2), x3 = d(3); x3 is the neighbour preceding x1 cyclically
    return cv.realize_X2(1, kappa_prev=3, kappa_next=2)


# ---------------------------------------------------------------- matrix families


def test_literal_families():
    assert np.array_equal(cv.mk_d(1), E)
    assert np.array_equal(cv.mk_p(0), E)
    w = cv.mk_w()
    assert tr(w) == 0 and det(w) == 1
    with pytest.raises(DomainError):
        cv.mk_d(0)


def test_mk_h_example():
    h = cv.mk_h(1, 4, 1)
    assert dist(h, np.array([[4, 1], [-21, 1]]) / 5) < 1e-15
    assert abs(tr(h) - 1) < 1e-15 and abs(det(h) - 1) < 1e-15


@pytest.mark.parametrize(
    "t, lam, mu, why",
    [(1, -1, 1, "lambda = -1"), (1, 4, 0, "mu = 0"), (2, 1, 1, "+-2"), (3, (7 + cmath.sqrt(45)) / 2, 1, "t^2 - 2")],
)
def test_mk_h_domain(t, lam, mu, why):
    with pytest.raises(DomainError, match=why.replace("+", r"\+").replace("^", r"\^")):
        cv.mk_h(t, lam, mu)


@given(seeds)
def test_mk_h_product_is_diagonal(seed):
    rng = np.random.default_rng(seed)
    t, lam, mu = (sampling.rand_complex(rng, 0.5, 2) for _ in range(3))
    try:
        a, b = cv.mk_h(t, lam, mu), cv.mk_h(t, lam, -mu / lam)
    except DomainError:
        return
    assert abs(tr(a) - t) < 1e-12 and abs(det(a) - 1) < 1e-12
    assert dist(a @ b, cv.mk_d(lam)) <= 1e-12


def test_mk_k_example():
    assert dist(cv.mk_k(2, 0), np.array([[1, 0], [4, 1]])) == 0
    with pytest.raises(DomainError):
        cv.mk_k(0, 1)


@given(seeds)
def test_mk_k_product_is_minus_p(seed):
    rng = np.random.default_rng(seed)
    t, alpha = sampling.rand_complex(rng, 0.5, 2), sampling.rand_complex(rng, 0.0, 2)
    k = cv.mk_k(t, alpha)
    assert abs(det(k) - 1) < 1e-12 and abs(tr(k) - t) < 1e-12
    assert dist(k @ cv.mk_k(t, alpha - t), -cv.mk_p()) <= 1e-12


@pytest.mark.parametrize("beta", [-1 + cmath.sqrt(-1), -1 - cmath.sqrt(-1)])
def test_condition_c_at_roots(beta):
    # alpha = 0, t1 = t2 = 2: residual is beta^2 + 2 beta + 2
    assert abs(cv.commutator_condition_residual_c(2, 2, 0, beta)) < 1e-15
    g = comm(cv.mk_k(2, 0), inv(cv.mk_k(2, beta)))
    assert dist(g, -cv.mk_p()) <= 1e-8


def test_condition_c_generic_nonzero():
    assert abs(cv.commutator_condition_residual_c(2, 3, 0.3, 0.7)) > 0.1


@given(seeds)
def test_condition_a_forward(seed):
    rng = np.random.default_rng(seed)
    t1, t2, lam, mu = (sampling.rand_complex(rng, 0.5, 2) for _ in range(4))
    d1 = t1 * t1 - lam - 1 / lam - 2
    d2 = t2 * t2 - lam - 1 / lam - 2
    # lam d1/mu nu^2 - (lam-1) t1 t2 nu - d2 mu = 0
    nu = np.roots([lam * d1 / mu, -(lam - 1) * t1 * t2, -d2 * mu])[0]
    try:
        a1, a2inv = cv.mk_h(t1, lam, mu), cv.mk_h(t2, lam, nu)
    except DomainError:
        return
    assert abs(cv.commutator_condition_residual_a(t1, t2, lam, mu, nu)) <= 1e-9 * max(1, abs(d1), abs(d2)) ** 2
    assert dist(comm(a1, inv(a2inv)), cv.mk_d(lam)) <= 1e-8 * max(1, abs(lam))


# ---------------------------------------------------------------- realizers


def test_x1_examples():
    rho = cv.realize_X1(1, 1, cv.mk_d(2), cv.mk_w())
    c = cv.character_of(rho)
    assert c.t1 == 2 and c.t12 == c.t2 and c.t13 == c.t3 and c.t123 == c.t23
    assert max(cv.relation_residuals(rho.mats)) == 0
    with pytest.raises(ReducibleError):
        cv.realize_X1(1, 1, cv.mk_d(2), cv.mk_d(3))


def test_x2_example_character():
    rho = x2_sample()
    assert dist(rho.x1, cv.mk_w()) == 0 and dist(rho.x2, cv.mk_d(2)) == 0 and dist(rho.x3, cv.mk_d(3)) == 0
    c = cv.character_of(rho)
    want = (0, 2.5, 10 / 3, 0, 0, 37 / 6, 0)
    assert max(abs(a - b) for a, b in zip(c.as_tuple(), want)) < 1e-15
    assert abs(cv.f_ij(c, 2, 3) - 2) < 1e-13


def test_f23_exact_arithmetic():
    t2, t3, t23 = Fraction(5, 2), Fraction(10, 3), Fraction(37, 6)
    assert t2**2 + t3**2 + t23**2 - t2 * t3 * t23 - 2 == 2


def test_x2_domain():
    with pytest.raises(DomainError):
        cv.realize_X2(1, 1, 2)


def test_x3_example():
    rho = cv.realize_X3(3, 0, 2, 0, 0)
    assert dist(rho.x3, np.array([[0, -1], [1, 0]])) == 0  # w inverse
    assert dist(rho.x2, cv.mk_w()) == 0
    assert abs(tr(rho.x3 @ rho.x2) - 2) < 1e-15
    assert max(cv.relation_residuals(rho.mats)) <= 1e-10


def test_x3_constraint_violation():
    with pytest.raises(ConstraintError):
        cv.realize_X3(1, 0.5, 1, 1, 1)


def test_solve_theta_holonomy():
    roots = cv.solve_theta(2, 2, 2)
    assert sorted(roots, key=lambda z: z.imag) == pytest.approx([-1j, 1j], abs=1e-15)


def test_solve_theta_444():
    # theta^2 solves u^2 - 1.25 u + 0.421875 = 0
    us = np.roots([1, -1.25, 0.421875])
    want = sorted([s * cmath.sqrt(u) for u in us for s in (1, -1)], key=lambda z: (z.real, z.imag))
    got = sorted(cv.solve_theta(4, 4, 4), key=lambda z: (z.real, z.imag))
    assert got == pytest.approx(want, abs=1e-12)
    assert all(cv.quartic_residual(4, 4, 4, th) <= 1e-10 for th in got)


def test_solve_theta_domain():
    with pytest.raises(DomainError, match="nonzero"):
        cv.solve_theta(2, 0, 2)


def test_cover_examples():
    plus, minus = cv.cover_t3(2, 2, I)
    assert {round(plus.real, 12), round(minus.real, 12)} == {2.0, -2.0}
    t1 = 1.5
    with pytest.raises(ExcludedHypersurfaceError):
        cv.cover_t3(t1, 2.3, cmath.sqrt(1 - 4 / t1**2))


@given(seeds)
def test_cover_round_trip_all_three_ways(seed):
    rng = np.random.default_rng(seed)
    t1, t2, t3 = (sampling.rand_complex(rng, 0.5, 3) for _ in range(3))
    try:
        thetas = cv.solve_theta(t1, t2, t3)
        for th in thetas:
            for got, want in (
                (cv.cover_t3(t1, t2, th), t3),
                (cv.cover_t1(t2, t3, th), t1),
                (cv.cover_t2(t1, t3, th), t2),
            ):
                assert min(abs(g - want) for g in got) <= 1e-9 * abs(want)
    except ExcludedHypersurfaceError:
        pass


def test_holonomy_realization():
    rho = cv.realize_X4(2, 2, 2, I)
    c = cv.character_of(rho)
    assert max(cv.relation_residuals(rho.mats)) < 1e-12
    assert abs(c.t12 - (2 + 2j)) < 1e-12
    want = (2, 2, 2, 2 + 2j, 2 + 2j, 2 + 2j, 4j)
    assert max(abs(a - b) for a, b in zip(c.as_tuple(), want)) < 1e-12
    _, after = sampling.parabolic_reference_matrices(1)
    reference = cv.character_of(cv.Representation(*after)).as_tuple()
    assert max(abs(a - b) for a, b in zip(c.as_tuple(), reference)) <= 1e-10


def test_parabolic_reference_matrices_are_conjugate():
    for eps in (1, -1):
        before, after = sampling.parabolic_reference_matrices(eps)
        got = sampling.conjugate_by_d_sqrt2(before)
        assert max(dist(a, b) for a, b in zip(got, after)) < 1e-12


def test_x4_domain_errors():
    with pytest.raises(DomainError, match="t_i must be nonzero on X4"):
        cv.realize_X4(2, 0, 2, I)
    with pytest.raises(ConstraintError):
        cv.realize_X4(2, 2, 2, 0.5)


@given(seeds)
def test_x4_lambda_and_commutator_traces(seed):
    rho = sampling.sample_X4(np.random.default_rng(seed))
    c = cv.character_of(rho)
    p = rho.params
    th = p["theta"]
    lam = cv.lambda_from_theta(p["kappa"], th, p["t3"])
    assert abs(lam + 1 / lam - cv.f_ij(c, 1, 2)) <= 1e-8 * max(1, abs(lam), abs(1 / lam))
    ts = (c.t1, c.t2, c.t3)
    for i in (1, 2, 3):
        a, b = ts[cv.prv(i) - 1], ts[cv.nxt(i) - 1]
        f = cv.f_ij(c, cv.prv(i), cv.nxt(i))
        assert abs(f - cv.outer_commutator_trace_x4(a, b, th)) <= 1e-8 * max(1, abs(f))


@given(seeds)
def test_kappa_branches_share_character(seed):
    rng = np.random.default_rng(seed)
    rho = sampling.sample_X4(rng)
    p = rho.params
    other = cv.realize_X4(p["t1"], p["t2"], p["t3"], p["theta"], 1 - p["kappa_branch"])
    a, b = cv.character_of(rho).as_tuple(), cv.character_of(other).as_tuple()
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-8 * max(1, *map(abs, a))


def test_kappa_principal_root():
    k1, k2 = cv.kappa_roots(2.5)
    assert k1 == pytest.approx(2) and k2 == pytest.approx(0.5)
    k1, _ = cv.kappa_roots(0)  # roots +-i, equal modulus
    assert k1 == pytest.approx(1j)


@given(seeds)
def test_alternative_gauges_agree(seed):
    rng = np.random.default_rng(seed)
    rho = sampling.sample_X4(rng)
    p = rho.params
    try:
        diag = cv.x4_diagonal_gauge(p["t1"], p["t2"], p["t3"], p["theta"])
    except DomainError:
        return
    q = diag.params
    scale = max(1.0, *(abs(v) for v in q.values() if isinstance(v, complex))) ** 4
    assert max(cv.relation_residuals(diag.mats)) <= 1e-8 * scale
    assert max(map(abs, cv.diagonal_gauge_residuals(q["t1"], q["t2"], q["lambda"], q["kappa"], q["nu"]))) <= 1e-8 * scale
    assert max(map(abs, cv.mu_and_inverse_residuals(q["t1"], q["t2"], q["lambda"], q["kappa"], q["nu"]))) <= 1e-8 * scale
    assert abs(cv.lambda_trace_residual(q["t1"], q["t2"], q["t3"], q["lambda"])) <= 1e-8 * scale
    a, b = cv.character_of(rho).as_tuple(), cv.character_of(diag).as_tuple()
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-8 * max(1, *map(abs, a))


@given(seeds, st.sampled_from([1, -1]))
def test_parabolic_gauge(seed, eps):
    rng = np.random.default_rng(seed)
    t1, t2 = sampling.rand_complex(rng, 0.7, 2.5), sampling.rand_complex(rng, 0.7, 2.5)
    theta = cmath.sqrt(1 - 4 / t1**2 - 4 / t2**2)
    if abs(theta) < 0.05:
        return
    rho = cv.x4_parabolic_gauge(t1, t2, eps, theta)
    assert max(cv.relation_residuals(rho.mats)) <= 1e-8
    assert max(map(abs, cv.parabolic_gauge_residuals(t1, t2, theta, rho.params["beta"]))) <= 1e-10
    assert max(cv.trace_expression_residuals(cv.character_of(rho), theta)) <= 1e-9


# ---------------------------------------------------------------- characters and classification


@given(seeds)
def test_f3_is_universal(seed):
    rng = np.random.default_rng(seed)
    c = cv.character_of(cv.Representation(*(random_sl2(rng) for _ in range(3))))
    assert cv.f3_residual(c) <= 1e-8


@given(seeds)
def test_f_ij_is_commutator_trace(seed):
    rng = np.random.default_rng(seed)
    mats = [random_sl2(rng) for _ in range(3)]
    c = cv.character_of(cv.Representation(*mats))
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert abs(cv.f_ij(c, i, j) - tr(comm(mats[i - 1], mats[j - 1]))) <= 1e-10 * max(1, abs(cv.f_ij(c, i, j)))


def test_commuting_pair_f_is_two():
    c = cv.character_of(cv.Representation(cv.mk_d(2), cv.mk_d(3), E))
    assert abs(cv.f_ij(c, 1, 2) - 2) < 1e-14


@given(seeds, labels)
def test_classify_contains_source_label(seed, label):
    rho = sampling.sample(np.random.default_rng(seed), label)
    assert label in cv.classify(cv.character_of(rho))


@given(seeds, labels)
def test_character_conjugation_invariant(seed, label):
    rng = np.random.default_rng(seed)
    rho = sampling.sample(rng, label)
    a = cv.character_of(rho).as_tuple()
    b = cv.character_of(sampling.random_conjugate(rng, rho)).as_tuple()
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-9 * max(1, *map(abs, a))


def test_classify_examples():
    c = cv.CharacterTuple(0, 2.5, 10 / 3, 0, 0, 37 / 6, 0)
    assert [str(x) for x in cv.classify(c)] == ["X2_1"]
    rho = cv.realize_X1(1, 1, cv.mk_d(2), cv.mk_w())
    assert [str(x) for x in cv.classify(cv.character_of(rho))] == ["X1+_1"]


def test_classify_intersection_x3_x2():
    # t2 = t3 = t23 = t12 = t123 = 0 and t13^2 = 4 - t1^2
    t1 = 0.8
    rho = cv.realize_X3(1, t1, cmath.sqrt(4 - t1 * t1), 0, 0)
    got = {str(x) for x in cv.classify(cv.character_of(rho))}
    assert {"X3_1", "X2_2"} <= got


def test_classify_rejects_reducible():
    c = cv.character_of(cv.Representation(E, E, E))
    with pytest.raises(UnclassifiedError, match="boundary"):
        cv.classify(c)
    members, boundary = cv.classify_detailed(c)
    assert not members and boundary


def test_irreducibility():
    assert not cv.is_irreducible([cv.mk_d(2), cv.mk_d(3), cv.mk_d(4)])
    assert cv.irreducibility_check(sampling.holonomy())
    assert cv.irreducibility_check(x2_sample())
    assert not cv.is_irreducible([E, E, -E])


@given(seeds)
def test_x4_samples_irreducible(seed):
    assert cv.irreducibility_check(sampling.sample_X4(np.random.default_rng(seed)))


def test_commutator_minus_e():
    assert cv.commutator_minus_e_check(cv.mk_d(I), cv.mk_w())
    assert not cv.commutator_minus_e_check(cv.mk_d(2), cv.mk_w())


def test_component_label_round_trip():
    for label in cv.ALL_LABELS:
        assert cv.ComponentLabel.parse(str(label)) == label
    assert str(cv.ComponentLabel("X1-", 2)) == "X1-_2"


def test_json_round_trips(rng):
    rho = sampling.sample_X4(rng)
    back = cv.Representation.from_json(rho.to_json())
    assert all(np.array_equal(a, b) for a, b in zip(rho.mats, back.mats))
    assert back.params == rho.params and back.component == "X4"
    c = cv.character_of(rho)
    assert cv.CharacterTuple.from_json(c.to_json()) == c
    assert c.to_json()["theta"] == [c.theta.real, c.theta.imag]
