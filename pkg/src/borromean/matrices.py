"""2x2 complex matrices as read-only numpy arrays.

Matrices are plain ``np.ndarray`` of shape (2, 2) and dtype complex128.
Everything here returns fresh arrays; inputs are never mutated.
"""

import numpy as np

from .config import TOL

E = np.eye(2, dtype=complex)


def mat(a11, a12, a21, a22) -> np.ndarray:
    m = np.array([[a11, a12], [a21, a22]], dtype=complex)
    m.flags.writeable = False
    return m


def mat_mul(*ms: np.ndarray) -> np.ndarray:
    out = ms[0]
    for m in ms[1:]:
        out = out @ m
    return out


def det(m: np.ndarray) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def tr(m: np.ndarray) -> complex:
    return complex(m[0, 0] + m[1, 1])


def adj(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def inv(m: np.ndarray) -> np.ndarray:
    """Inverse of a unimodular matrix (the adjugate, no division)."""
    return adj(m)


def inv_general(m: np.ndarray) -> np.ndarray:
    return adj(m) / det(m)


def comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[a, b] = a b a^-1 b^-1."""
    return a @ b @ inv(a) @ inv(b)


def conj(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a b a^-1."""
    return a @ b @ inv(a)


def max_norm(m: np.ndarray) -> float:
    return float(np.max(np.abs(m)))


def dist(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def is_unimodular(m: np.ndarray, tol: float = TOL) -> bool:
    return abs(det(m) - 1) <= tol


def hamilton_cayley_check(m: np.ndarray) -> float:
    """Max-entry norm of m^2 - tr(m) m + e."""
    return max_norm(m @ m - tr(m) * m + E)


def random_sl2(rng: np.random.Generator, floor: float = 0.25) -> np.ndarray:
    """a, b, c complex standard normal and d = (1 + bc)/a, redrawn while |a| < floor.

    A small floor gives heavy-tailed entries (|d| ~ 1/|a|); 0.25 keeps products
    of a dozen draws well inside the absolute tolerances used downstream.
    """
    while True:
        a, b, c = (rng.standard_normal(3) + 1j * rng.standard_normal(3)) / np.sqrt(2)
        if abs(a) >= floor:
            return mat(a, b, c, (1 + b * c) / a)


def common_eigenvector(a: np.ndarray, b: np.ndarray, v: np.ndarray, tol: float = TOL) -> bool:
    """Whether v is (numerically) an eigenvector of both a and b."""
    return is_eigenvector(a, v, tol) and is_eigenvector(b, v, tol)


def is_eigenvector(m: np.ndarray, v: np.ndarray, tol: float = TOL) -> bool:
    v = v / np.linalg.norm(v)
    w = m @ v
    # v and m v are parallel iff the 2x2 determinant [v | m v] vanishes
    cross = v[0] * w[1] - v[1] * w[0]
    return abs(cross) <= tol * max(1.0, max_norm(m))


def eigenvectors(m: np.ndarray, tol: float = TOL) -> list[np.ndarray]:
    """Eigenvectors of m; the single fixed direction when m is parabolic, none for +-e."""
    t = tr(m)
    if abs(t * t - 4) > tol:
        _, vecs = np.linalg.eig(np.asarray(m))
        return [vecs[:, 0], vecs[:, 1]]
    eps = 1 if (t.real >= 0) else -1
    n = m - eps * E
    if max_norm(n) <= tol:
        return []
    # kernel of a rank-one nilpotent: any nonzero column spans its image == kernel
    col = n[:, 0] if abs(n[0, 0]) + abs(n[1, 0]) >= abs(n[0, 1]) + abs(n[1, 1]) else n[:, 1]
    return [col / np.linalg.norm(col)]


def to_json(m: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(m).ravel()]


def from_json(data) -> np.ndarray:
    if len(data) != 4:
        raise ValueError("Mat2C expects 4 row-major complex entries")
    return mat(*(complex(re, im) for re, im in data))
