"""Sparse Laurent polynomials in s1, s2, s3 and 2x2 matrices over them."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

import numpy as np

from .config import PRUNE, TOL
from .errors import NotDivisible, ZeroPolynomial

Exp = tuple[int, int, int]
ZERO_EXP: Exp = (0, 0, 0)


def _add_exp(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _neg_exp(a: Exp) -> Exp:
    return (-a[0], -a[1], -a[2])


class LaurentPoly3:
    """Immutable sparse Laurent polynomial with complex coefficients.

    Coefficients smaller than ``prune`` times the largest one are dropped
    on construction, so cancellation noise never accumulates.
    """

    __slots__ = ("terms",)
    __array_ufunc__ = None  # numpy scalars defer to our operators

    def __init__(self, terms: Mapping[Exp, complex] | None = None, prune: float = PRUNE):
        terms = {} if terms is None else terms
        top = max((abs(c) for c in terms.values()), default=0.0)
        cut = prune * top
        self.terms: dict[Exp, complex] = {
            tuple(e): complex(c) for e, c in terms.items() if c != 0 and abs(c) > cut
        }

    # construction helpers
    @classmethod
    def const(cls, c: complex) -> LaurentPoly3:
        return cls({ZERO_EXP: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: complex = 1.0) -> LaurentPoly3:
        return cls({tuple(exp): c})

    @classmethod
    def var(cls, j: int, power: int = 1) -> LaurentPoly3:
        """s_j ** power for j in 1..3."""
        e = [0, 0, 0]
        e[j - 1] = power
        return cls({tuple(e): 1.0})

    # arithmetic
    def __add__(self, other) -> LaurentPoly3:
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly3(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly3:
        return LaurentPoly3({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly3:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly3:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly3:
        if isinstance(other, (int, float, complex, np.number)):
            return LaurentPoly3({e: c * other for e, c in self.terms.items()})
        out: dict[Exp, complex] = defaultdict(complex)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])] += c1 * c2
        return LaurentPoly3(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly3:
        out = LaurentPoly3.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exp: Exp) -> LaurentPoly3:
        """Multiply by the monomial s^exp."""
        return LaurentPoly3({_add_exp(e, exp): c for e, c in self.terms.items()})

    # inspection
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        """Exact coefficient equality; use ``distance`` for tolerant comparison."""
        if isinstance(other, (int, float, complex)):
            other = LaurentPoly3.const(other)
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __getitem__(self, exp: Exp) -> complex:
        return self.terms.get(tuple(exp), 0j)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly3(0)"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(f"s{j + 1}^{k}" for j, k in enumerate(e) if k)
            parts.append(f"({c:.6g})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = TOL) -> bool:
        return self.max_abs() <= tol

    def min_exp(self) -> Exp:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return tuple(min(e[j] for e in self.terms) for j in range(3))

    def max_exp(self) -> Exp:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return tuple(max(e[j] for e in self.terms) for j in range(3))

    def __call__(self, s1: complex, s2: complex, s3: complex) -> complex:
        return complex(sum(c * s1 ** e[0] * s2 ** e[1] * s3 ** e[2] for e, c in self.terms.items()))

    def significant(self, tol: float) -> LaurentPoly3:
        """Drop terms below tol relative to the largest coefficient."""
        top = self.max_abs()
        return LaurentPoly3({e: c for e, c in self.terms.items() if abs(c) > tol * top})

    def to_json(self) -> list:
        return [
            {"exp": list(e), "coef": [self.terms[e].real, self.terms[e].imag]}
            for e in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, data) -> LaurentPoly3:
        return cls({tuple(int(k) for k in t["exp"]): complex(*t["coef"]) for t in data})


def _coerce(x) -> LaurentPoly3:
    if isinstance(x, LaurentPoly3):
        return x
    return LaurentPoly3.const(x)


def lp_mul(p: LaurentPoly3, q: LaurentPoly3) -> LaurentPoly3:
    return p * q


def distance(p: LaurentPoly3, q: LaurentPoly3) -> float:
    """Max coefficient difference."""
    keys = set(p.terms) | set(q.terms)
    return max((abs(p[e] - q[e]) for e in keys), default=0.0)


def normalize(p: LaurentPoly3) -> tuple[LaurentPoly3, Exp, complex]:
    """Canonical form of p up to monomial and scalar.

    Exponents are shifted so the minimum in every variable is 0, then the
    coefficient at the lexicographically smallest exponent is scaled to 1.
    Returns ``(canon, unit, scale)`` with ``p == scale * s^unit * canon``.
    """
    if not p:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    unit = p.min_exp()
    shifted = p.shift(_neg_exp(unit))
    anchor = min(shifted.terms)
    scale = shifted.terms[anchor]
    canon = shifted * (1 / scale)
    canon.terms[anchor] = 1 + 0j
    return canon, unit, scale


def equal_up_to_unit(
    p: LaurentPoly3, q: LaurentPoly3, tol: float = TOL
) -> tuple[bool, Exp | None, complex | None]:
    """Decide p == scale * s^unit * q, reporting unit and scale.

    Supports are compared after discarding coefficients below ``tol``
    relative to the largest one; the final check is coefficient-wise and
    relative to max|p|.
    """
    if not p or not q:
        raise ZeroPolynomial("equal_up_to_unit needs nonzero polynomials")
    ps, qs = p.significant(tol), q.significant(tol)
    unit = tuple(a - b for a, b in zip(ps.min_exp(), qs.min_exp()))
    anchor = max(qs.terms, key=lambda e: abs(qs.terms[e]))
    target = _add_exp(anchor, unit)
    if target not in ps.terms:
        return False, None, None
    scale = ps.terms[target] / qs.terms[anchor]
    resid = distance(p, q.shift(unit) * scale)
    if resid <= tol * p.max_abs():
        return True, unit, scale
    return False, None, None


def _split(p: LaurentPoly3, var: int) -> dict[int, LaurentPoly3]:
    """View p as a polynomial in s_var with coefficients in the other variables."""
    j = var - 1
    groups: dict[int, dict[Exp, complex]] = defaultdict(dict)
    for e, c in p.terms.items():
        rest = list(e)
        rest[j] = 0
        groups[e[j]][tuple(rest)] = c
    return {k: LaurentPoly3(v, prune=0.0) for k, v in groups.items()}


def lp_divide_exact(
    num: LaurentPoly3, den: LaurentPoly3, var: int, tol: float = TOL
) -> LaurentPoly3:
    """Exact quotient num / den by long division in s_var.

    The leading coefficient of den in s_var must be a single monomial (a unit
    of the Laurent ring), which holds for the s^2 - t s + 1 denominators
    arising from det(e - s x). Raises NotDivisible when the relative residual
    exceeds tol.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return LaurentPoly3()
    j = var - 1
    dgroups = _split(den, var)
    dlo, dhi = min(dgroups), max(dgroups)
    lead = dgroups[dhi].significant(tol)
    if len(lead) != 1:
        raise NotDivisible(f"leading coefficient of divisor in s{var} is not a monomial")
    (lead_exp, lead_coef), = lead.terms.items()
    dgroups = {k - dlo: v for k, v in dgroups.items()}
    ddeg = dhi - dlo

    rgroups = _split(num, var)
    nlo = min(rgroups)
    rem = {k - nlo: v for k, v in rgroups.items()}
    quot: dict[int, LaurentPoly3] = {}
    scale = num.max_abs()
    for k in range(max(rem), ddeg - 1, -1):
        c = rem.pop(k, None)
        if c is None:
            continue
        qk = c.shift(_neg_exp(lead_exp)) * (1 / lead_coef)
        quot[k - ddeg] = qk
        for dk, dc in dgroups.items():
            if dk == ddeg:
                continue
            idx = k - ddeg + dk
            rem[idx] = rem.get(idx, LaurentPoly3()) - qk * dc
    resid = max((v.max_abs() for v in rem.values()), default=0.0)
    if resid > tol * scale:
        raise NotDivisible(f"relative residual {resid / scale:.3e} exceeds {tol:.1e}")
    out: dict[Exp, complex] = {}
    for k, poly in quot.items():
        for e, c in poly.terms.items():
            ee = list(e)
            ee[j] = k + nlo - dlo
            out[tuple(ee)] = c
    return LaurentPoly3(out)


class Mat2L:
    """2x2 matrix over LaurentPoly3, immutable."""

    __slots__ = ("a",)

    def __init__(self, a11, a12, a21, a22):
        self.a = tuple(_coerce(x) for x in (a11, a12, a21, a22))

    @classmethod
    def from_complex(cls, m: np.ndarray, mono: LaurentPoly3 | None = None) -> Mat2L:
        """Embed a constant matrix, optionally scaled by a Laurent polynomial."""
        mono = LaurentPoly3.const(1) if mono is None else mono
        return cls(*(mono * complex(z) for z in np.asarray(m).ravel()))

    @classmethod
    def identity(cls) -> Mat2L:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Mat2L:
        return cls(0, 0, 0, 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.a[2 * i + j]

    def __add__(self, other: Mat2L) -> Mat2L:
        return Mat2L(*(x + y for x, y in zip(self.a, other.a)))

    def __sub__(self, other: Mat2L) -> Mat2L:
        return Mat2L(*(x - y for x, y in zip(self.a, other.a)))

    def __neg__(self) -> Mat2L:
        return Mat2L(*(-x for x in self.a))

    def __mul__(self, other) -> Mat2L:
        if isinstance(other, Mat2L):
            a11, a12, a21, a22 = self.a
            b11, b12, b21, b22 = other.a
            return Mat2L(
                a11 * b11 + a12 * b21,
                a11 * b12 + a12 * b22,
                a21 * b11 + a22 * b21,
                a21 * b12 + a22 * b22,
            )
        return Mat2L(*(x * other for x in self.a))

    def __rmul__(self, other) -> Mat2L:
        return Mat2L(*(other * x for x in self.a))

    def det(self) -> LaurentPoly3:
        a11, a12, a21, a22 = self.a
        return a11 * a22 - a12 * a21

    def trace(self) -> LaurentPoly3:
        return self.a[0] + self.a[3]

    def adj(self) -> Mat2L:
        a11, a12, a21, a22 = self.a
        return Mat2L(a22, -a12, -a21, a11)

    def distance(self, other: Mat2L) -> float:
        return max(distance(x, y) for x, y in zip(self.a, other.a))

    def max_abs(self) -> float:
        return max(x.max_abs() for x in self.a)


def matl_det(m: Mat2L) -> LaurentPoly3:
    return m.det()


def block_det(rows: list[list[LaurentPoly3]]) -> LaurentPoly3:
    """Determinant of a square matrix over LaurentPoly3 by memoized Laplace expansion."""
    n = len(rows)
    memo: dict[tuple[int, int], LaurentPoly3] = {}

    def minor(r: int, cols: int) -> LaurentPoly3:
        # determinant of rows r..n-1 restricted to the column bitmask cols
        if r == n:
            return LaurentPoly3.const(1)
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = LaurentPoly3()
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            entry = rows[r][c]
            if entry:
                sub = minor(r + 1, cols & ~(1 << c))
                if sub:
                    acc = acc + entry * sub * sign
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def expand_blocks(blocks: list[list[Mat2L]]) -> list[list[LaurentPoly3]]:
    """Flatten a k x k array of 2x2 blocks into a 2k x 2k scalar array."""
    k = len(blocks)
    out = [[LaurentPoly3() for _ in range(2 * k)] for _ in range(2 * k)]
    for bi, brow in enumerate(blocks):
        for bj, blk in enumerate(brow):
            for i in range(2):
                for j in range(2):
                    out[2 * bi + i][2 * bj + j] = blk[i, j]
    return out
