"""Twisted Alexander polynomial of the Borromean link.

Two independent routes: Fox calculus on the two-relator presentation
evaluated through the twisted homomorphism, and the closed formula in
trace coordinates. ``compare`` decides whether they agree up to a unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .charvar import (
    CharacterTuple,
    ComponentLabel,
    Representation,
    _membership,
    character_of,
)
from .config import TOL
from .errors import DegenerateError, LabelMismatch, MissingTheta, ZeroPolynomial
from .laurent import (
    Exp,
    LaurentPoly3,
    Mat2L,
    block_det,
    equal_up_to_unit,
    expand_blocks,
    lp_divide_exact,
    normalize,
)
from .matrices import E, inv, tr
from .words import (
    BORROMEAN,
    WIRTINGER,
    GroupRingElem,
    Presentation,
    delete_column,
    evaluate,
    jacobian,
    parse_word,
    wirtinger_images,
)


@dataclass(frozen=True)
class TapResult:
    delta: LaurentPoly3  # canonical form
    method: str
    column: int | None
    unit: Exp
    scale: complex

    @property
    def raw(self) -> LaurentPoly3:
        return self.delta.shift(self.unit) * self.scale

    def to_json(self) -> dict:
        return {
            "delta": self.delta.to_json(),
            "method": self.method,
            "column": self.column,
            "unit": list(self.unit),
            "scale": [self.scale.real, self.scale.imag],
        }

    @classmethod
    def from_json(cls, data: dict) -> TapResult:
        return cls(
            LaurentPoly3.from_json(data["delta"]),
            data["method"],
            data.get("column"),
            tuple(data["unit"]),
            complex(*data["scale"]),
        )


def _result(raw: LaurentPoly3, method: str, column: int | None) -> TapResult:
    canon, unit, scale = normalize(raw)
    return TapResult(canon, method, column, unit, scale)


def phi(g: GroupRingElem, mats: Sequence[np.ndarray], sigma: Sequence[int]) -> Mat2L:
    """Image of g: each word goes to (abelianization monomial) * (product of matrices)."""
    acc: list[dict[Exp, complex]] = [{}, {}, {}, {}]
    for w, c in g.terms.items():
        exp = [0, 0, 0]
        for gen, e in w.letters:
            exp[sigma[gen - 1] - 1] += e
        m = evaluate(w, mats).ravel()
        key = tuple(exp)
        for k in range(4):
            acc[k][key] = acc[k].get(key, 0) + c * m[k]
    return Mat2L(*(LaurentPoly3(a) for a in acc))


@lru_cache(maxsize=None)
def _jacobian(p: Presentation):
    return jacobian(p)


def _images(rho: Representation, p: Presentation):
    if p.generators == 3:
        return rho.mats
    if p == WIRTINGER:
        return wirtinger_images(rho.mats)
    raise ValueError("images of extra generators are only known for the built-in Wirtinger presentation")


def fox_numerator(rho: Representation, v: int, p: Presentation = BORROMEAN) -> LaurentPoly3:
    """det of the twisted Jacobian with column v deleted."""
    mats = _images(rho, p)
    mv = delete_column(_jacobian(p), v)
    blocks = [[phi(entry, mats, p.abelianization) for entry in row] for row in mv]
    return block_det(expand_blocks(blocks))


def fox_denominator(rho: Representation, v: int, p: Presentation = BORROMEAN) -> LaurentPoly3:
    mats = _images(rho, p)
    xv = GroupRingElem.one() - GroupRingElem.of(parse_word(f"x{v}"))
    return phi(xv, mats, p.abelianization).det()


def tap_fox(rho: Representation, v: int = 3, p: Presentation = BORROMEAN, tol: float = TOL) -> TapResult:
    """det Phi(M_v) / det Phi(1 - x_v), normalized."""
    if not 1 <= v <= p.generators:
        raise IndexError(f"column {v} out of range")
    den = fox_denominator(rho, v, p)
    if den.is_zero(tol):
        raise DegenerateError(f"det Phi(1 - x_{v}) vanishes identically")
    num = fox_numerator(rho, v, p)
    if num.is_zero(tol):
        raise ZeroPolynomial("twisted Jacobian minor vanishes")
    q = lp_divide_exact(num, den, p.abelianization[v - 1], tol)
    return _result(q, "fox", v)


def _base_product(c: CharacterTuple) -> LaurentPoly3:
    out = LaurentPoly3.const(1)
    for j in (1, 2, 3):
        out = out * (LaurentPoly3.var(j) + LaurentPoly3.var(j, -1) - c.t(j))
    return out


def closed_constant(c: CharacterTuple, label: ComponentLabel) -> complex:
    """Correction added to prod (s_j + 1/s_j - t_j) on each component."""
    if label.kind in ("X1+", "X1-", "X2"):
        return 0j
    if label.kind == "X3":
        return 4 * c.t123 + c.t1 * c.t2 * c.t3
    if c.theta is None:
        raise MissingTheta("the X4 closed form needs theta")
    return c.theta**2 * c.t1 * c.t2 * c.t3


def closed_form(c: CharacterTuple, label: ComponentLabel) -> LaurentPoly3:
    return _base_product(c) + closed_constant(c, label)


def tap_closed(c: CharacterTuple, label: ComponentLabel, tol: float = TOL) -> TapResult:
    if label.kind == "X4" and c.theta is None:
        raise MissingTheta("the X4 closed form needs theta")
    eqs, _ = _membership(c, label, tol)
    if not eqs:
        raise LabelMismatch(f"character does not satisfy the equations of {label}")
    return _result(closed_form(c, label), "closed", None)


def compare(a: TapResult, b: TapResult, tol: float = TOL):
    """equal_up_to_unit on the raw polynomials."""
    return equal_up_to_unit(a.raw, b.raw, tol)


# ---------------------------------------------------------------- derivation checks


def _s(j: int) -> LaurentPoly3:
    return LaurentPoly3.var(j)


def _c(m: np.ndarray) -> Mat2L:
    return Mat2L.from_complex(m)


def tap_uv(rho: Representation) -> tuple[Mat2L, Mat2L]:
    """u = (s1 e - x3 x1 X3)(e - s2 x2) x3 and v = (s1 e - x1)(s2 x2 - e)."""
    x1, x2, x3 = rho.mats
    e = Mat2L.identity()
    u = (e * _s(1) - _c(x3 @ x1 @ inv(x3))) * (e - _c(x2) * _s(2)) * _c(x3)
    v = (e * _s(1) - _c(x1)) * (_c(x2) * _s(2) - e)
    return u, v


def tap_reduced(rho: Representation) -> LaurentPoly3:
    """det(s3 u + v), the 2x2 reduction of the twisted Jacobian."""
    u, v = tap_uv(rho)
    return (u * _s(3) + v).det()


def det_expansion(rho: Representation) -> LaurentPoly3:
    """s3^2 det u + det v + s3 tr(u adj v)."""
    u, v = tap_uv(rho)
    s3 = _s(3)
    return s3 * s3 * u.det() + v.det() + s3 * (u * v.adj()).trace()


def xi_traces(rho: Representation) -> complex:
    x1, x2, x3 = rho.mats
    X1, X2, X3 = inv(x1), inv(x2), inv(x3)
    return (
        tr(x2 @ x3 @ X1) + tr(x3 @ X2 @ X1)
        + tr(x3 @ x1 @ X3 @ x2 @ x3) + tr(x3 @ x1 @ X2)
    )


def xi_closed(c: CharacterTuple) -> complex:
    return (c.t3**2 - 4) * c.t123 - c.t3 * c.t13 * c.t23 + 2 * c.t1 * c.t23 + 2 * c.t2 * c.t13


def xi_cross_check(rho: Representation) -> float:
    return abs(xi_traces(rho) - xi_closed(character_of(rho)))


def eta_values(rho: Representation) -> tuple[complex, complex, complex]:
    x1, x2, x3 = rho.mats
    X1, X2, X3 = inv(x1), inv(x2), inv(x3)
    c32 = X3 @ x2 @ x3 @ X2  # [X3, x2]
    eta1 = tr(x2 @ x3 @ X2 @ X1 + x3 @ x1 @ c32)
    eta2 = tr(x3 @ x1 @ c32 @ X1)
    eta3 = tr(x3 @ x1 @ X3 @ x2 @ x3 @ X1 + x3 @ x1 @ X2 @ X1)
    return eta1, eta2, eta3


def eta_residuals(rho: Representation) -> tuple[float, float, float]:
    """|eta_1 - t1 t3|, |eta_2 - t3|, |eta_3 - t2 t3|."""
    c = character_of(rho)
    e1, e2, e3 = eta_values(rho)
    return abs(e1 - c.t1 * c.t3), abs(e2 - c.t3), abs(e3 - c.t2 * c.t3)


def simplified_minor_entries() -> list[list[GroupRingElem]]:
    """Hand-simplified twisted Jacobian minor (column 3 deleted), valid in Z[pi]."""
    one = GroupRingElem.one()
    w = lambda s: GroupRingElem.of(parse_word(s))  # noqa: E731
    return [
        [(one - w("x2")) * w("x3 X1") * (one - w("X3")), one - w("[x3,X1]")],
        [(one - w("x3")) * (w("x1 X2 X1") - one), (one - w("x3")) * w("x1 X2") * (one - w("X1"))],
    ]


def simplified_minor_residual(rho: Representation) -> float:
    """Max distance between Phi of the raw Jacobian minor and of the simplified one."""
    raw = delete_column(_jacobian(BORROMEAN), 3)
    simp = simplified_minor_entries()
    sigma = BORROMEAN.abelianization
    return max(
        phi(raw[i][j], rho.mats, sigma).distance(phi(simp[i][j], rho.mats, sigma))
        for i in range(2)
        for j in range(2)
    )


def span_degree(p: LaurentPoly3) -> tuple[tuple[int, int, int], int]:
    if not p:
        raise ZeroPolynomial("span of the zero polynomial is undefined")
    lo, hi = p.min_exp(), p.max_exp()
    spans = tuple(h - l for h, l in zip(hi, lo))
    return spans, sum(spans)
