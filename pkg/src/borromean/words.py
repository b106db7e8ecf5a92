"""Free-group words, group-ring elements, Fox calculus and link presentations.

Word syntax: ``x1`` is a generator, ``X1`` its inverse, ``[u,v]`` the
commutator u v u^-1 v^-1, juxtaposition is product, parentheses group.
Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .config import TOL
from .errors import ConstraintError, WordSyntaxError
from .matrices import E, inv, max_norm

Letter = tuple[int, int]  # (generator index >= 1, exponent +1/-1)


def _reduce(letters) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for g, e in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True, order=True)
class FreeWord:
    """Freely reduced word; letters are (generator, +-1) pairs."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for g, e in self.letters:
            if g < 1 or e not in (1, -1):
                raise ValueError(f"bad letter ({g}, {e})")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, j: int, e: int = 1) -> FreeWord:
        return cls(((j, e),))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def __invert__(self) -> FreeWord:
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def exponent_sum(self, j: int) -> int:
        return sum(e for g, e in self.letters if g == j)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return ""
        out = []
        for g, e in self.letters:
            name = names[g - 1] if names else f"x{g}"
            out.append(name if e > 0 else name.upper())
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_string() or "1"


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v * ~u * ~v


_TOKEN = re.compile(r"\s*(?:([A-Za-z]+\d*)|(.))")


class _Parser:
    def __init__(self, text: str, alphabet: Mapping[str, int] | None):
        self.text = text
        self.alphabet = alphabet
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            name, sym = m.group(1), m.group(2)
            if name is None and (sym is None or sym.isspace()):
                continue
            pos = m.start(1) if name else m.start(2)
            if name:
                self.tokens.append(("name", name, pos))
            elif sym in "[](),":
                self.tokens.append((sym, sym, pos))
            else:
                raise WordSyntaxError(f"unexpected character {sym!r}", text, pos)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise WordSyntaxError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def letter(self, name: str, pos: int) -> FreeWord:
        lower = name.lower()
        if name != lower and name != name.upper():
            raise WordSyntaxError(f"mixed-case generator {name!r}", self.text, pos)
        e = 1 if name == lower else -1
        if self.alphabet is not None:
            if lower not in self.alphabet:
                raise WordSyntaxError(f"unknown generator {name!r}", self.text, pos)
            return FreeWord.gen(self.alphabet[lower], e)
        m = re.fullmatch(r"x(\d+)", lower)
        if not m or int(m.group(1)) < 1:
            raise WordSyntaxError(f"unknown generator {name!r}", self.text, pos)
        return FreeWord.gen(int(m.group(1)), e)

    def word(self) -> FreeWord:
        out = FreeWord()
        while True:
            kind, val, pos = self.peek()
            if kind == "name":
                self.i += 1
                out = out * self.letter(val, pos)
            elif kind == "[":
                self.i += 1
                u = self.word()
                self.expect(",")
                v = self.word()
                self.expect("]")
                out = out * commutator(u, v)
            elif kind == "(":
                self.i += 1
                u = self.word()
                self.expect(")")
                out = out * u
            else:
                return out

    def parse(self) -> FreeWord:
        w = self.word()
        kind, val, pos = self.peek()
        if kind != "end":
            raise WordSyntaxError(f"unexpected {val!r}", self.text, pos)
        return w


def parse_word(text: str, alphabet: Mapping[str, int] | None = None) -> FreeWord:
    """Parse a word; ``alphabet`` maps lowercase names to generator indices.

    Without an alphabet, any ``xN`` (N >= 1) names generator N.
    """
    return _Parser(text, alphabet).parse()


class GroupRingElem:
    """Integer combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        self.terms: dict[FreeWord, int] = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def of(cls, w: FreeWord | str, c: int = 1) -> GroupRingElem:
        if isinstance(w, str):
            w = parse_word(w)
        return cls({w: c})

    @classmethod
    def one(cls) -> GroupRingElem:
        return cls({FreeWord(): 1})

    def __add__(self, other) -> GroupRingElem:
        other = _as_elem(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElem(out)

    __radd__ = __add__

    def __neg__(self) -> GroupRingElem:
        return GroupRingElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> GroupRingElem:
        return self + (-_as_elem(other))

    def __rsub__(self, other) -> GroupRingElem:
        return _as_elem(other) - self

    def __mul__(self, other) -> GroupRingElem:
        if isinstance(other, int):
            return GroupRingElem({w: c * other for w, c in self.terms.items()})
        other = _as_elem(other)
        out: dict[FreeWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElem(out)

    def __rmul__(self, other) -> GroupRingElem:
        return _as_elem(other) * self

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({w})" for w, c in sorted(self.terms.items()))


def _as_elem(x) -> GroupRingElem:
    if isinstance(x, GroupRingElem):
        return x
    if isinstance(x, FreeWord):
        return GroupRingElem({x: 1})
    if isinstance(x, int):
        return GroupRingElem({FreeWord(): x})
    raise TypeError(f"cannot coerce {type(x).__name__} to GroupRingElem")


def fox_derivative(r: FreeWord, j: int) -> GroupRingElem:
    """Fox derivative d r / d x_j in Z[F]."""
    out: dict[FreeWord, int] = {}
    prefix = FreeWord()
    for g, e in r.letters:
        if g == j:
            if e == 1:
                out[prefix] = out.get(prefix, 0) + 1
            else:
                w = prefix * FreeWord.gen(j, -1)
                out[w] = out.get(w, 0) - 1
        prefix = prefix * FreeWord.gen(g, e)
    return GroupRingElem(out)


@dataclass(frozen=True)
class Presentation:
    generators: int
    relators: tuple[FreeWord, ...]
    abelianization: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.abelianization) != self.generators:
            raise ValueError("abelianization must list one meridian per generator")
        for r in self.relators:
            if any(g > self.generators for g, _ in r.letters):
                raise ValueError(f"relator {r} uses a generator beyond {self.generators}")

    def alphabet(self) -> dict[str, int] | None:
        if self.names is None:
            return None
        return {n: k + 1 for k, n in enumerate(self.names)}

    def to_json(self) -> dict:
        out = {
            "generators": self.generators,
            "relators": [r.to_string(self.names) for r in self.relators],
            "abelianization": list(self.abelianization),
        }
        if self.names is not None:
            out["names"] = list(self.names)
        return out

    @classmethod
    def from_json(cls, data: dict) -> Presentation:
        names = tuple(data["names"]) if data.get("names") else None
        alphabet = {n: k + 1 for k, n in enumerate(names)} if names else None
        return cls(
            generators=int(data["generators"]),
            relators=tuple(parse_word(r, alphabet) for r in data["relators"]),
            abelianization=tuple(int(a) for a in data["abelianization"]),
            names=names,
        )


def jacobian(p: Presentation) -> list[list[GroupRingElem]]:
    """Fox Jacobian: rows are relators, columns generators."""
    return [[fox_derivative(r, j) for j in range(1, p.generators + 1)] for r in p.relators]


def delete_column(m: list[list[GroupRingElem]], v: int) -> list[list[GroupRingElem]]:
    """M_v: drop column v (1-based)."""
    if not m or not 1 <= v <= len(m[0]):
        raise IndexError(f"column {v} out of range")
    return [row[: v - 1] + row[v:] for row in m]


BORROMEAN = Presentation(
    generators=3,
    relators=(parse_word("[x2,[x3,X1]]"), parse_word("[x3,[x1,X2]]")),
    abelianization=(1, 2, 3),
)

# y_i are the remaining arcs; yi and xi lie on the same component
_WIRT_NAMES = ("x1", "x2", "x3", "y1", "y2", "y3")
_WIRT_ALPHA = {n: k + 1 for k, n in enumerate(_WIRT_NAMES)}
WIRTINGER = Presentation(
    generators=6,
    relators=tuple(
        parse_word(r, _WIRT_ALPHA)
        for r in ("Y1 x3 x1 X3", "Y2 x1 x2 X1", "Y3 x2 x3 X2", "X3 Y2 y3 y2", "X2 Y1 y2 y1")
    ),
    abelianization=(1, 2, 3, 1, 2, 3),
    names=_WIRT_NAMES,
)
WIRTINGER_OMITTED = parse_word("X1 Y3 y1 y3", _WIRT_ALPHA)

# [x_i, [x_{i+1}, X_{i-1}]] for i = 1, 2, 3
LONGITUDE_RELATORS = (
    parse_word("[x1,[x2,X3]]"),
    parse_word("[x2,[x3,X1]]"),
    parse_word("[x3,[x1,X2]]"),
)


def evaluate(w: FreeWord, mats: Sequence[np.ndarray]) -> np.ndarray:
    """Image of w under x_j -> mats[j-1] (unimodular matrices)."""
    out = E
    invs: dict[int, np.ndarray] = {}
    for g, e in w.letters:
        if e > 0:
            out = out @ mats[g - 1]
        else:
            if g not in invs:
                invs[g] = inv(mats[g - 1])
            out = out @ invs[g]
    return out


def relation_residuals(mats: Sequence[np.ndarray]) -> tuple[float, float, float]:
    """||[x_i,[x_{i+1},X_{i-1}]] - e|| for i = 1, 2, 3."""
    return tuple(max_norm(evaluate(r, mats) - E) for r in LONGITUDE_RELATORS)


def relation_implication_check(mats: Sequence[np.ndarray], tol: float = TOL) -> float:
    """Residual of [x1,[x2,X3]] = e given the two presentation relators hold.

    Raises ConstraintError when the premises themselves fail.
    """
    r1, r2, r3 = relation_residuals(mats)
    if r2 > tol or r3 > tol:
        raise ConstraintError(f"premise relators fail: residuals {r2:.3e}, {r3:.3e}")
    return r1


def wirtinger_images(mats: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Extend (x1, x2, x3) to the six Wirtinger generators."""
    x1, x2, x3 = mats
    y1 = x3 @ x1 @ inv(x3)
    y2 = x1 @ x2 @ inv(x1)
    y3 = x2 @ x3 @ inv(x2)
    return [x1, x2, x3, y1, y2, y3]
