"""Seeded random draws of representations on each component."""

import cmath

import numpy as np

from .charvar import (
    ComponentLabel,
    Representation,
    mk_d,
    realize_X1,
    realize_X2,
    realize_X3,
    realize_X4,
    solve_theta,
)
from .errors import BorromeanError
from .matrices import conj, max_norm, random_sl2

MAX_ENTRY = 30.0


def rand_complex(rng: np.random.Generator, lo: float = 0.6, hi: float = 2.5) -> complex:
    return cmath.rect(rng.uniform(lo, hi), rng.uniform(-np.pi, np.pi))


def sample_X1(rng: np.random.Generator, i: int, sign: int) -> Representation:
    while True:
        try:
            rho = realize_X1(i, sign, random_sl2(rng), random_sl2(rng))
        except BorromeanError:
            continue
        if max(max_norm(x) for x in rho.mats) <= MAX_ENTRY:
            return rho


def sample_X2(rng: np.random.Generator, i: int) -> Representation:
    while True:
        kp, kn = rand_complex(rng, 0.4, 2.5), rand_complex(rng, 0.4, 2.5)
        if min(abs(kp - 1), abs(kp + 1), abs(kn - 1), abs(kn + 1)) > 0.05:
            return realize_X2(i, kp, kn)


def sample_X3(rng: np.random.Generator, i: int) -> Representation:
    while True:
        t_i, tn = rand_complex(rng, 0.2, 2.5), rand_complex(rng, 0.2, 2.5)
        denom = t_i**2 + tn**2
        if abs(4 - t_i**2) < 0.05 or abs(denom) < 0.05:
            continue
        tp = cmath.sqrt(t_i**2 * (4 - t_i**2 - tn**2) / denom)
        if rng.integers(2):
            tp = -tp
        t123 = tp * tn / t_i
        rho = realize_X3(i, t_i, tp, tn, t123)
        if max(max_norm(x) for x in rho.mats) <= MAX_ENTRY:
            return rho


def sample_X4(rng: np.random.Generator) -> Representation:
    while True:
        ts = [rand_complex(rng, 0.7, 2.5) for _ in range(3)]
        try:
            thetas = [th for th in solve_theta(*ts) if abs(th) > 0.1]
            if not thetas:
                continue
            theta = thetas[rng.integers(len(thetas))]
            rho = realize_X4(*ts, theta, kappa_branch=int(rng.integers(2)))
        except BorromeanError:
            continue
        if max(max_norm(x) for x in rho.mats) <= MAX_ENTRY:
            return rho


def sample(rng: np.random.Generator, label: ComponentLabel) -> Representation:
    if label.kind == "X4":
        return sample_X4(rng)
    if label.kind == "X1+":
        return sample_X1(rng, label.index, 1)
    if label.kind == "X1-":
        return sample_X1(rng, label.index, -1)
    if label.kind == "X2":
        return sample_X2(rng, label.index)
    return sample_X3(rng, label.index)


def random_conjugate(rng: np.random.Generator, rho: Representation) -> Representation:
    return rho.conjugate(random_sl2(rng))


def holonomy(eps: int = 1) -> Representation:
    """Lift of the complete hyperbolic structure: all t_i = 2, theta = eps sqrt(-1)."""
    return realize_X4(2, 2, 2, eps * 1j)


def parabolic_reference_matrices(eps: int = 1):
    """The explicit parabolic triple with t_i = 2, before and after conjugation by d(sqrt 2)."""
    i = 1j * eps
    before = (
        np.array([[1, 0], [4, 1]], dtype=complex),
        np.array([[i, i / 2], [4, 2 - i]], dtype=complex),
        np.array([[1, i / 2], [0, 1]], dtype=complex),
    )
    after = (
        np.array([[1, 0], [2, 1]], dtype=complex),
        np.array([[i, i], [2, 2 - i]], dtype=complex),
        np.array([[1, i], [0, 1]], dtype=complex),
    )
    return before, after


def conjugate_by_d_sqrt2(mats):
    g = mk_d(np.sqrt(2))
    return tuple(conj(g, m) for m in mats)
