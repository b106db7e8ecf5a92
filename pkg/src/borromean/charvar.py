"""Irreducible SL(2,C) characters of the Borromean link group.

Generators x1, x2, x3 are meridians; indices are taken mod 3 throughout,
so for component i the neighbours are ``prv(i)`` and ``nxt(i)``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .config import TOL
from .errors import (
    ConstraintError,
    DegenerateError,
    DomainError,
    ExcludedHypersurfaceError,
    ReducibleError,
    UnclassifiedError,
)
from .matrices import (
    E,
    comm,
    det,
    dist,
    eigenvectors,
    from_json as mat_from_json,
    inv,
    is_eigenvector,
    mat,
    to_json as mat_to_json,
    tr,
)
from .words import relation_residuals

I = 1j


def nxt(i: int) -> int:
    return i % 3 + 1


def prv(i: int) -> int:
    return (i - 2) % 3 + 1


def _check_index(i: int):
    if i not in (1, 2, 3):
        raise DomainError(f"component index must be 1, 2 or 3, got {i}")


# ---------------------------------------------------------------- matrices


def mk_d(kappa: complex) -> np.ndarray:
    if kappa == 0:
        raise DomainError("d(kappa) needs kappa != 0")
    return mat(kappa, 0, 0, 1 / kappa)


def mk_p(u: complex = 1.0) -> np.ndarray:
    return mat(1, u, 0, 1)


def mk_w() -> np.ndarray:
    return mat(0, 1, -1, 0)


def mk_h(t: complex, lam: complex, mu: complex, tol: float = TOL) -> np.ndarray:
    """h_t^lam(mu): trace t, and h(mu) h(-mu/lam) = d(lam)."""
    bad = []
    if abs(lam + 1) <= tol:
        bad.append("lambda = -1")
    if lam == 0:
        bad.append("lambda = 0")
    if abs(mu) <= tol:
        bad.append("mu = 0")
    if not bad:
        s = lam + 1 / lam
        if abs(s - (t * t - 2)) <= tol:
            bad.append("lambda + 1/lambda = t^2 - 2")
        if abs(s - 2) <= tol or abs(s + 2) <= tol:
            bad.append("lambda + 1/lambda = +-2")
    if bad:
        raise DomainError("h_t^lambda(mu) undefined: " + ", ".join(bad))
    delta = t * t - lam - 1 / lam - 2
    return mat(lam * t, mu, delta * lam / mu, t) / (lam + 1)


def mk_k(t: complex, alpha: complex) -> np.ndarray:
    """k_t(alpha): trace t, and k(alpha) k(alpha - t) = -p."""
    if t == 0:
        raise DomainError("k_t(alpha) needs t != 0")
    return mat(alpha + t / 2, (t * t / 4 - 1 - alpha * alpha) / (2 * t), 2 * t, -alpha + t / 2)


def commutator_condition_residual_a(t1, t2, lam, mu, nu, tol: float = TOL) -> complex:
    """(lam-1) t1 t2 - (lam d1 nu/mu - d2 mu/nu), with d_i = t_i^2 - lam - 1/lam - 2.

    Zero iff a1 = h_{t1}(mu), a2^-1 = h_{t2}(nu) have commutator d(lam).
    """
    d1 = t1 * t1 - lam - 1 / lam - 2
    d2 = t2 * t2 - lam - 1 / lam - 2
    if abs(d1) <= tol or abs(d2) <= tol:
        raise DomainError("delta_1 delta_2 must be nonzero")
    return (lam - 1) * t1 * t2 - (lam * d1 * nu / mu - d2 * mu / nu)


def commutator_condition_residual_c(t1, t2, alpha, beta, tol: float = TOL) -> complex:
    """Zero iff a1 = k_{t1}(alpha), a2^-1 = k_{t2}(beta) have commutator -p."""
    if abs(t1 * t2) <= tol:
        raise DomainError("t1 t2 must be nonzero")
    lhs = t2 / t1 * (alpha * alpha + 1) + t1 / t2 * (beta * beta + 1)
    return lhs - (2 * alpha * beta + t2 * alpha - t1 * beta)


# ---------------------------------------------------------------- data types


@dataclass(frozen=True, order=True)
class ComponentLabel:
    kind: str  # "X1+", "X1-", "X2", "X3", "X4"
    index: int | None = None

    def __post_init__(self):
        if self.kind not in ("X1+", "X1-", "X2", "X3", "X4"):
            raise ValueError(f"unknown component kind {self.kind!r}")
        if (self.kind == "X4") != (self.index is None):
            raise ValueError("X4 has no index; every other component needs one")

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> ComponentLabel:
        if text == "X4":
            return cls("X4")
        kind, _, idx = text.partition("_")
        return cls(kind, int(idx))


def _cjson(z) -> Any:
    if isinstance(z, (complex, np.complexfloating)):
        return [float(z.real), float(z.imag)]
    if isinstance(z, (float, np.floating)):
        return [float(z), 0.0]
    return z


def _cparse(v) -> Any:
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    return v


@dataclass(frozen=True, eq=False)
class Representation:
    x1: np.ndarray
    x2: np.ndarray
    x3: np.ndarray
    component: str = "Custom"
    params: dict = field(default_factory=dict)

    @property
    def mats(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.x1, self.x2, self.x3)

    def __getitem__(self, i: int) -> np.ndarray:
        return self.mats[i - 1]

    @property
    def label(self) -> ComponentLabel | None:
        return None if self.component == "Custom" else ComponentLabel.parse(self.component)

    def conjugate(self, g: np.ndarray) -> Representation:
        gi = inv(g)
        return Representation(*(g @ x @ gi for x in self.mats), self.component, dict(self.params))

    def to_json(self) -> dict:
        return {
            "x1": mat_to_json(self.x1),
            "x2": mat_to_json(self.x2),
            "x3": mat_to_json(self.x3),
            "component": self.component,
            "params": {k: _cjson(v) for k, v in self.params.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> Representation:
        return cls(
            mat_from_json(data["x1"]),
            mat_from_json(data["x2"]),
            mat_from_json(data["x3"]),
            data.get("component", "Custom"),
            {k: _cparse(v) for k, v in data.get("params", {}).items()},
        )


@dataclass(frozen=True)
class CharacterTuple:
    t1: complex
    t2: complex
    t3: complex
    t12: complex
    t13: complex
    t23: complex
    t123: complex
    theta: complex | None = None

    def t(self, i: int) -> complex:
        return (self.t1, self.t2, self.t3)[i - 1]

    def pair(self, i: int, j: int) -> complex:
        key = tuple(sorted((i, j)))
        return {(1, 2): self.t12, (1, 3): self.t13, (2, 3): self.t23}[key]

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.t1, self.t2, self.t3, self.t12, self.t13, self.t23, self.t123)

    def to_json(self) -> dict:
        return {
            "t": [_cjson(complex(z)) for z in self.as_tuple()],
            "theta": None if self.theta is None else _cjson(complex(self.theta)),
        }

    @classmethod
    def from_json(cls, data: dict) -> CharacterTuple:
        ts = [complex(*z) if isinstance(z, list) else complex(z) for z in data["t"]]
        if len(ts) != 7:
            raise ValueError("character needs 7 trace coordinates")
        th = data.get("theta")
        if th is not None:
            th = complex(*th) if isinstance(th, list) else complex(th)
        return cls(*ts, theta=th)


def character_of(rho: Representation) -> CharacterTuple:
    x1, x2, x3 = rho.mats
    theta = rho.params.get("theta") if rho.component == "X4" else None
    return CharacterTuple(
        tr(x1), tr(x2), tr(x3),
        tr(x1 @ x2), tr(x1 @ x3), tr(x2 @ x3),
        tr(x1 @ x2 @ x3),
        theta=None if theta is None else complex(theta),
    )


def f3_nus(c: CharacterTuple) -> tuple[complex, complex]:
    t1, t2, t3, t12, t13, t23, _ = c.as_tuple()
    nu0 = (
        t1**2 + t2**2 + t3**2 + t12**2 + t13**2 + t23**2
        - t1 * t2 * t12 - t1 * t3 * t13 - t2 * t3 * t23
        + t12 * t13 * t23 - 4
    )
    nu1 = t1 * t23 + t2 * t13 + t3 * t12 - t1 * t2 * t3
    return nu0, nu1


def f3_residual(c: CharacterTuple) -> float:
    """|t123^2 - nu1 t123 + nu0|; vanishes for every triple in SL(2,C)."""
    nu0, nu1 = f3_nus(c)
    return abs(c.t123**2 - nu1 * c.t123 + nu0)


def f_ij(c: CharacterTuple, i: int, j: int) -> complex:
    """tr [x_i, x_j] expressed in traces."""
    if i == j:
        raise DomainError("f_ij needs i != j")
    ti, tj, tij = c.t(i), c.t(j), c.pair(i, j)
    return ti * ti + tj * tj + tij * tij - ti * tj * tij - 2


# ---------------------------------------------------------------- realizers


def _check_sl2(m: np.ndarray, name: str, tol: float):
    if m.shape != (2, 2) or abs(det(m) - 1) > tol:
        raise DomainError(f"{name} must be a unimodular 2x2 matrix")


def realize_X1(i: int, sign: int, x_prev: np.ndarray, x_next: np.ndarray, tol: float = TOL) -> Representation:
    """x_i = sign * e with arbitrary neighbours lacking a common eigenvector."""
    _check_index(i)
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    x_prev = mat(*np.asarray(x_prev).ravel())
    x_next = mat(*np.asarray(x_next).ravel())
    _check_sl2(x_prev, "x_prev", tol)
    _check_sl2(x_next, "x_next", tol)
    f = tr(comm(x_prev, x_next))
    if abs(f - 2) <= tol:
        raise ReducibleError(f"x_{prv(i)}, x_{nxt(i)} share an eigenvector (tr of commutator = {f:.6g})")
    xs = {i: sign * E, prv(i): x_prev, nxt(i): x_next}
    kind = "X1+" if sign == 1 else "X1-"
    return Representation(xs[1], xs[2], xs[3], f"{kind}_{i}", {"i": i, "sign": sign})


def realize_X2(i: int, kappa_prev: complex, kappa_next: complex, tol: float = TOL) -> Representation:
    """x_i = w, x_{i-1} = d(kappa_prev), x_{i+1} = d(kappa_next)."""
    _check_index(i)
    for name, k in (("kappa_prev", kappa_prev), ("kappa_next", kappa_next)):
        if abs(k) <= tol or abs(k - 1) <= tol or abs(k + 1) <= tol:
            raise DomainError(f"{name} must avoid 0 and +-1 (trace would be +-2), got {k}")
    xs = {i: mk_w(), prv(i): mk_d(kappa_prev), nxt(i): mk_d(kappa_next)}
    params = {"i": i, "kappa_prev": complex(kappa_prev), "kappa_next": complex(kappa_next)}
    return Representation(xs[1], xs[2], xs[3], f"X2_{i}", params)


def x3_constraints(t_i, t_prev_pair, t_next_pair, t123) -> tuple[complex, complex]:
    """Residuals of t_i t123 = t_{i,i-1} t_{i,i+1} and of the sum of squares = 4."""
    return (
        t_i * t123 - t_prev_pair * t_next_pair,
        t_i**2 + t_prev_pair**2 + t_next_pair**2 + t123**2 - 4,
    )


def realize_X3(i: int, t_i, t_prev_pair, t_next_pair, t123, tol: float = TOL) -> Representation:
    """x_{i-1} = w, x_{i+1} = d(sqrt(-1)); x_i is read off from its traces."""
    _check_index(i)
    c1, c2 = x3_constraints(t_i, t_prev_pair, t_next_pair, t123)
    scale = max(1.0, abs(t_i), abs(t_prev_pair), abs(t_next_pair), abs(t123)) ** 2
    if abs(c1) > tol * scale or abs(c2) > tol * scale:
        raise ConstraintError(f"X3 trace constraints fail: residuals {abs(c1):.3e}, {abs(c2):.3e}")
    if abs(4 - t_i * t_i) <= tol:
        raise ConstraintError("X3 needs t_i^2 != 4")
    a11 = (t_i - t_next_pair * I) / 2
    a12 = -(t_prev_pair + t123 * I) / 2
    a21 = (t_prev_pair - t123 * I) / 2
    a22 = (t_i + t_next_pair * I) / 2
    xs = {i: mat(a11, a12, a21, a22), prv(i): mk_w(), nxt(i): mk_d(I)}
    params = {
        "i": i,
        "t_i": complex(t_i),
        "t_prev_pair": complex(t_prev_pair),
        "t_next_pair": complex(t_next_pair),
        "t123": complex(t123),
    }
    return Representation(xs[1], xs[2], xs[3], f"X3_{i}", params)


# ---------------------------------------------------------------- canonical component


def quartic_coeffs(t1, t2, t3) -> tuple[complex, complex]:
    """(b, c) with theta^4 + b theta^2 + c = 0 cutting out X4."""
    for t in (t1, t2, t3):
        if t == 0:
            raise DomainError("t_i must be nonzero on X4")
    q1, q2, q3 = 4 / t1**2, 4 / t2**2, 4 / t3**2
    return q1 + q2 + q3 - 2, (1 - q1) * (1 - q2) * (1 - q3)


def quartic_residual(t1, t2, t3, theta) -> float:
    """Relative residual of the X4 quartic at (t1, t2, t3, theta)."""
    b, c = quartic_coeffs(t1, t2, t3)
    u = theta * theta
    return abs(u * u + b * u + c) / max(1.0, abs(u * u) + abs(b * u) + abs(c))


def solve_theta(t1, t2, t3, tol: float = TOL) -> list[complex]:
    """Nonzero roots theta of the X4 quartic, ordered by (theta^2 root, sign)."""
    for t in (t1, t2, t3):
        if abs(t) <= tol:
            raise DomainError("t_i must be nonzero on X4")
    b, c = quartic_coeffs(t1, t2, t3)
    disc = cmath.sqrt(b * b - 4 * c)
    # stable quadratic formula
    q = -(b + disc) / 2 if abs(b + disc) >= abs(b - disc) else -(b - disc) / 2
    us = [q, c / q] if q != 0 else [0j, 0j]
    out = []
    for u in us:
        if abs(u) <= tol:
            continue
        r = cmath.sqrt(u)
        out.extend([r, -r])
    return out


def _cover_sq(a, b, theta, tol: float) -> complex:
    qa, qb = 4 / a**2, 4 / b**2
    u = theta * theta
    num = (u + qa - 1) * (u + qb - 1)
    den = (qa - 1) * (qb - 1) - u
    scale = max(1.0, abs(u), abs(qa), abs(qb)) ** 2
    if abs(u + qa - 1) <= tol * scale or abs(u + qb - 1) <= tol * scale or abs(den) <= tol * scale:
        raise ExcludedHypersurfaceError(
            "theta^2 lies on an excluded hypersurface (1-4/t^2 of either input, or their product)"
        )
    return 4 * den / num


def cover_t3(t1, t2, theta, tol: float = TOL) -> tuple[complex, complex]:
    """The two t3 with (t1, t2, t3, theta) on X4: principal root first."""
    if abs(t1) <= tol or abs(t2) <= tol:
        raise DomainError("t1, t2 must be nonzero")
    if abs(theta) <= tol:
        raise DomainError("theta must be nonzero")
    r = cmath.sqrt(_cover_sq(t1, t2, theta, tol))
    return r, -r


def cover_t1(t2, t3, theta, tol: float = TOL) -> tuple[complex, complex]:
    # same formula with the roles of the indices permuted (the quartic is symmetric)
    return cover_t3(t2, t3, theta, tol)


def cover_t2(t1, t3, theta, tol: float = TOL) -> tuple[complex, complex]:
    return cover_t3(t1, t3, theta, tol)


def kappa_roots(t3) -> tuple[complex, complex]:
    """Roots of k^2 - t3 k + 1 = 0; the principal one (|k| >= 1, ties by arg in [0, pi)) first."""
    r = cmath.sqrt(t3 * t3 - 4)
    k1, k2 = (t3 + r) / 2, (t3 - r) / 2
    if abs(abs(k1) - abs(k2)) > 1e-12:
        return (k1, k2) if abs(k1) > abs(k2) else (k2, k1)
    a1 = cmath.phase(k1) % (2 * cmath.pi)
    return (k1, k2) if a1 < cmath.pi else (k2, k1)


def lambda_from_theta(kappa, theta, t3) -> complex:
    """Eigenvalue of g_3 in the gauge x3 = d(kappa)."""
    s = kappa - 1 / kappa
    return (s + theta * t3) / (s - theta * t3)


def _x4_mats(t1, t2, t3, theta, kappa, tol):
    s = kappa - 1 / kappa
    a = t1 * t1 - 4
    x1 = mat(
        theta * t1 * t1 * t3 + s * a,
        a,
        theta**2 * t1**2 * t3**2 - a * (t3 * t3 - 4),
        theta * t1 * t1 * t3 - s * a,
    ) / (2 * theta * t1 * t3)
    m11 = kappa + (theta - 1) * t3 / 2
    m21 = 2 + (theta - 1) * t3 / kappa
    m22 = 1 / kappa + (1 - theta) * t3 / 2
    if abs(m21) <= tol * max(1.0, abs(m11), abs(m22)):
        return None
    # fills the remaining entry so that det x2 = 1
    star = (m11 * m22 - (t3 / t2) ** 2) / m21
    x2 = mat(m11, star, m21, m22) * (t2 / t3)
    x3 = mat(kappa, 1, 0, 1 / kappa)
    return x1, x2, x3


def realize_X4(t1, t2, t3, theta, kappa_branch: int = 0, tol: float = TOL) -> Representation:
    """Representation with character t_ij = (theta+1)/2 t_i t_j, t123 = ((theta+1)/2)^2 t1 t2 t3."""
    for t in (t1, t2, t3):
        if abs(t) <= tol:
            raise DomainError("t_i must be nonzero on X4")
    if abs(theta) <= tol:
        raise DomainError("theta must be nonzero on X4")
    res = quartic_residual(t1, t2, t3, theta)
    if res > tol:
        raise ConstraintError(f"(t1, t2, t3, theta) is off the X4 quartic (relative residual {res:.3e})")
    roots = kappa_roots(t3)
    for branch in (kappa_branch, 1 - kappa_branch):
        out = _x4_mats(t1, t2, t3, theta, roots[branch], tol)
        if out is not None:
            params = {
                "t1": complex(t1), "t2": complex(t2), "t3": complex(t3),
                "theta": complex(theta), "kappa_branch": branch, "kappa": complex(roots[branch]),
            }
            return Representation(*out, "X4", params)
    raise DegenerateError("x2 entry 2 + (theta-1) t3 / kappa vanishes on both kappa branches")


def x4_diagonal_gauge(t1, t2, t3, theta, kappa_branch: int = 0, tol: float = TOL) -> Representation:
    """X4 representation in the gauge x3 = d(kappa), x1 = h(1), x2 = h(nu).

    Only valid off t3 = +-2. The value of nu comes from
    delta_1 nu = (1 - 1/lam) t1 t2 / (1 + kappa^-2).
    """
    if abs(t3 * t3 - 4) <= tol:
        raise DomainError("diagonal gauge needs t3 != +-2")
    kappa = kappa_roots(t3)[kappa_branch]
    lam = lambda_from_theta(kappa, theta, t3)
    d1 = t1 * t1 - lam - 1 / lam - 2
    nu = (1 - 1 / lam) * t1 * t2 / ((1 + kappa**-2) * d1)
    params = {
        "t1": complex(t1), "t2": complex(t2), "t3": complex(t3), "theta": complex(theta),
        "kappa": complex(kappa), "lambda": complex(lam), "nu": complex(nu), "gauge": "diagonal",
    }
    return Representation(mk_h(t1, lam, 1, tol), mk_h(t2, lam, nu, tol), mk_d(kappa), "X4", params)


def x4_parabolic_gauge(t1, t2, eps: int, theta, tol: float = TOL) -> Representation:
    """X4 representation with t3 = 2 eps: x3 = eps p(theta/2), x1 = k(0), x2 = k(beta)."""
    res = theta * theta - (1 - 4 / t1**2 - 4 / t2**2)
    if abs(res) > tol * max(1.0, abs(theta) ** 2):
        raise ConstraintError("theta^2 must equal 1 - 4/t1^2 - 4/t2^2 when t3 = +-2")
    beta = (theta - 1) * t2 / 2
    params = {"t1": complex(t1), "t2": complex(t2), "t3": complex(2 * eps), "theta": complex(theta),
              "beta": complex(beta), "gauge": "parabolic"}
    return Representation(mk_k(t1, 0), mk_k(t2, beta), eps * mk_p(theta / 2), "X4", params)


def diagonal_gauge_residuals(t1, t2, lam, kappa, nu) -> tuple[complex, complex]:
    """Both commutator conditions in the diagonal gauge (mu = 1 and mu = kappa^2)."""
    d1 = t1 * t1 - lam - 1 / lam - 2
    d2 = t2 * t2 - lam - 1 / lam - 2
    lhs = (lam - 1) * t1 * t2
    return (
        lhs - (lam * d1 * nu - d2 / nu),
        lhs - (lam * d1 * nu / kappa**2 - d2 * kappa**2 / nu),
    )


def mu_and_inverse_residuals(t1, t2, lam, kappa, nu) -> tuple[complex, complex]:
    d1 = t1 * t1 - lam - 1 / lam - 2
    d2 = t2 * t2 - lam - 1 / lam - 2
    return (
        d1 * nu - (1 - 1 / lam) / (1 + kappa**-2) * t1 * t2,
        d2 / nu - (1 - lam) / (1 + kappa**2) * t1 * t2,
    )


def lambda_trace_residual(t1, t2, t3, lam) -> complex:
    s = lam + 1 / lam
    return t3**2 * (t1**2 - 2 - s) * (t2**2 - 2 - s) - (2 - s) * t1**2 * t2**2


def parabolic_gauge_residuals(t1, t2, theta, beta) -> tuple[complex, complex, complex]:
    """Parabolic-gauge conditions: both commutator equations and beta = (theta-1) t2 / 2."""
    r1 = t2 / t1 + t1 / t2 * (beta**2 + 1) + t1 * beta
    r2 = (
        t2 / t1 * (t1**2 * theta**2 + 1) + t1 / t2 * (beta**2 + 1)
        - (2 * t1 * theta * beta + t1 * t2 * theta - t1 * beta)
    )
    return r1, r2, beta - (theta - 1) * t2 / 2


def theta_from_character(c: CharacterTuple) -> complex:
    """theta recovered from t12 = (theta+1)/2 t1 t2."""
    if c.t1 * c.t2 == 0:
        raise DomainError("theta is only defined when t1 t2 != 0")
    return 2 * c.t12 / (c.t1 * c.t2) - 1


def trace_expression_residuals(c: CharacterTuple, theta) -> list[float]:
    """|t_ij - (theta+1)/2 t_i t_j| for the three pairs, then the t123 residual."""
    h = (theta + 1) / 2
    return [
        abs(c.t12 - h * c.t1 * c.t2),
        abs(c.t13 - h * c.t1 * c.t3),
        abs(c.t23 - h * c.t2 * c.t3),
        abs(c.t123 - h * h * c.t1 * c.t2 * c.t3),
    ]


def outer_commutator_trace_x4(t_a, t_b, theta) -> complex:
    """f_{i-1,i+1} on X4 in terms of theta and the two outer traces."""
    return (theta**2 - 1) / 4 * t_a**2 * t_b**2 + t_a**2 + t_b**2 - 2


# ---------------------------------------------------------------- classification


def _eq(a, b, tol) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _membership(c: CharacterTuple, label: ComponentLabel, tol: float) -> tuple[bool, bool]:
    """(equalities hold, inequations hold with margin)."""
    if label.kind == "X4":
        ts = (c.t1, c.t2, c.t3)
        if any(abs(t) <= tol for t in ts):
            return False, False
        theta = c.theta if c.theta is not None else theta_from_character(c)
        scale = max(1.0, *(abs(z) for z in c.as_tuple()))
        eqs = all(r <= tol * scale**3 for r in trace_expression_residuals(c, theta))
        eqs = eqs and quartic_residual(*ts, theta) <= tol * scale
        return eqs, abs(theta) > tol

    i, p, n = label.index, prv(label.index), nxt(label.index)
    ti, tp, tn = c.t(i), c.t(p), c.t(n)
    tip, tin, tpn = c.pair(i, p), c.pair(i, n), c.pair(p, n)
    if label.kind in ("X1+", "X1-"):
        s = 1 if label.kind == "X1+" else -1
        eqs = (
            _eq(ti, 2 * s, tol) and _eq(tip, s * tp, tol) and _eq(tin, s * tn, tol)
            and _eq(c.t123, s * tpn, tol)
        )
        return eqs, not _eq(f_ij(c, p, n), 2, tol)
    if label.kind == "X2":
        eqs = all(_eq(z, 0, tol) for z in (ti, tip, tin, c.t123)) and _eq(f_ij(c, p, n), 2, tol)
        return eqs, not _eq(tp * tp, 4, tol) and not _eq(tn * tn, 4, tol)
    # X3
    eqs = (
        all(_eq(z, 0, tol) for z in (tp, tn, tpn))
        and _eq(ti * c.t123, tip * tin, tol)
        and _eq(tip**2 + tin**2 + c.t123**2, 4 - ti**2, tol)
    )
    return eqs, not _eq(ti * ti, 4, tol)


ALL_LABELS = tuple(
    [ComponentLabel(k, i) for k in ("X1+", "X1-", "X2", "X3") for i in (1, 2, 3)] + [ComponentLabel("X4")]
)


def classify_detailed(c: CharacterTuple, tol: float = TOL) -> tuple[list[ComponentLabel], list[ComponentLabel]]:
    """(members, boundary): boundary labels satisfy the equalities but sit within tol of an inequation."""
    members, boundary = [], []
    for label in ALL_LABELS:
        eqs, ineqs = _membership(c, label, tol)
        if eqs and ineqs:
            members.append(label)
        elif eqs:
            boundary.append(label)
    return members, boundary


def classify(c: CharacterTuple, tol: float = TOL) -> list[ComponentLabel]:
    members, boundary = classify_detailed(c, tol)
    if not members:
        extra = f" (near boundary of {', '.join(map(str, boundary))})" if boundary else ""
        raise UnclassifiedError("character lies on no component of the irreducible variety" + extra)
    return members


# ---------------------------------------------------------------- reducibility


def is_irreducible(mats, tol: float = TOL) -> bool:
    """No common eigenvector among the matrices."""
    mats = [np.asarray(m) for m in mats]
    # most separated eigenvalues first: best-conditioned eigenvectors
    order = sorted(mats, key=lambda m: -abs(tr(m) ** 2 - 4))
    for m in order:
        vecs = eigenvectors(m, tol)
        if vecs:  # empty only for +-e
            return not any(all(is_eigenvector(x, v, tol) for x in mats) for v in vecs)
    return False


def irreducibility_check(rho: Representation, tol: float = TOL) -> bool:
    return is_irreducible(rho.mats, tol)


def commutator_minus_e_check(a: np.ndarray, b: np.ndarray, tol: float = TOL) -> bool:
    """Whether [a, b] = -e."""
    return dist(comm(a, b), -E) <= tol


def relation_residual(rho: Representation) -> float:
    return max(relation_residuals(rho.mats))
