"""Command-line front end.

Exit codes: 0 ok, 2 constraint violation, 3 I/O or parse error,
4 mathematical inconsistency (division failure, oracle mismatch, failed verification).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import charvar as cv
from . import sampling, tap
from .config import Config
from .errors import (
    BorromeanError,
    LabelMismatch,
    NotDivisible,
)
from .matrices import det, max_norm
from .words import relation_implication_check, relation_residuals

EXIT_OK, EXIT_CONSTRAINT, EXIT_IO, EXIT_MATH = 0, 2, 3, 4


class CliFailure(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def cjson(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _load(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliFailure(EXIT_IO, f"cannot read {path}: {exc}")


def _load_rep(path: str) -> cv.Representation:
    try:
        return cv.Representation.from_json(_load(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliFailure(EXIT_IO, f"malformed representation JSON: {exc}")


def _component(text: str) -> tuple[str, int | None]:
    kind, _, idx = text.partition("_")
    if kind not in ("X1+", "X1-", "X2", "X3", "X4"):
        raise argparse.ArgumentTypeError(f"unknown component {text!r}")
    return kind, int(idx) if idx else None


def _rep_out(rho: cv.Representation) -> dict:
    out = rho.to_json()
    out["residuals"] = list(relation_residuals(rho.mats))
    return out


# ---------------------------------------------------------------- commands


def cmd_sample(args, cfg: Config):
    kind, idx = args.component
    i = args.i if args.i is not None else idx
    if kind != "X4" and i is None:
        raise CliFailure(EXIT_CONSTRAINT, f"{kind} needs --i")
    rng = np.random.default_rng(cfg.seed)
    tol = cfg.tol_abs

    def one() -> cv.Representation:
        if kind in ("X1+", "X1-"):
            return sampling.sample_X1(rng, i, 1 if kind == "X1+" else -1)
        if kind == "X2":
            if args.kappa_prev is None and args.kappa_next is None:
                return sampling.sample_X2(rng, i)
            return cv.realize_X2(i, args.kappa_prev, args.kappa_next, tol)
        if kind == "X3":
            vals = (args.t_i, args.t_prev_pair, args.t_next_pair, args.t123)
            if all(v is None for v in vals):
                return sampling.sample_X3(rng, i)
            if any(v is None for v in vals):
                raise CliFailure(EXIT_CONSTRAINT, "X3 needs all of --t-i --t-prev-pair --t-next-pair --t123")
            return cv.realize_X3(i, *vals, tol=tol)
        if args.t is None:
            return sampling.sample_X4(rng)
        if any(abs(t) <= tol for t in args.t):
            raise CliFailure(EXIT_CONSTRAINT, "t_i must be nonzero on X4")
        theta = args.theta
        if theta is None:
            roots = cv.solve_theta(*args.t, tol=tol)
            if not 0 <= args.theta_branch < len(roots):
                raise CliFailure(EXIT_CONSTRAINT, f"--theta-branch must be below {len(roots)}")
            theta = roots[args.theta_branch]
        return cv.realize_X4(*args.t, theta, args.kappa_branch, tol)

    if args.samples is None:
        return _rep_out(one())
    return [_rep_out(one()) for _ in range(args.samples)]


def verify_report(rho: cv.Representation, tol: float) -> dict:
    scale = max(1.0, *(max_norm(x) for x in rho.mats)) ** 4
    checks = {}
    for k, x in enumerate(rho.mats, 1):
        r = abs(det(x) - 1)
        checks[f"unimodular_x{k}"] = (r, r <= tol)
    res = relation_residuals(rho.mats)
    for k, r in enumerate(res, 1):
        checks[f"relation_{k}"] = (r, r <= tol * scale)
    try:
        r = relation_implication_check(rho.mats, tol * scale)
        checks["relation_implication"] = (r, r <= 10 * tol * scale)
    except BorromeanError:
        checks["relation_implication"] = (float("nan"), False)
    irr = cv.irreducibility_check(rho, tol)
    checks["irreducible"] = (0.0 if irr else 1.0, irr)
    c = cv.character_of(rho)
    r = cv.f3_residual(c)
    checks["f3_identity"] = (r, r <= tol * scale)
    r = tap.xi_cross_check(rho)
    checks["xi_cross_check"] = (r, r <= tol * scale)
    return {
        "checks": {k: {"residual": v, "pass": bool(ok)} for k, (v, ok) in checks.items()},
        "pass": all(ok for _, ok in checks.values()),
    }


def cmd_verify(args, cfg: Config):
    rep = verify_report(_load_rep(args.rep), cfg.tol_abs)
    return rep, (EXIT_OK if rep["pass"] else EXIT_MATH)


def cmd_char(args, cfg: Config):
    return cv.character_of(_load_rep(args.rep)).to_json()


def cmd_classify(args, cfg: Config):
    try:
        c = cv.CharacterTuple.from_json(_load(args.char))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliFailure(EXIT_IO, f"malformed character JSON: {exc}")
    labels = cv.classify(c, cfg.tol_abs)
    _, boundary = cv.classify_detailed(c, cfg.tol_abs)
    return {"labels": [str(x) for x in labels], "boundary": [str(x) for x in boundary]}


def _closed_for(rho: cv.Representation, tol: float) -> tap.TapResult:
    c = cv.character_of(rho)
    labels = cv.classify(c, tol)
    label = rho.label if rho.label in labels else labels[0]
    if label.kind == "X4" and c.theta is None:
        c = cv.CharacterTuple(*c.as_tuple(), theta=cv.theta_from_character(c))
    return tap.tap_closed(c, label, tol)


def cmd_tap(args, cfg: Config):
    rho = _load_rep(args.rep)
    tol = cfg.tol_abs
    if args.all_columns:
        results = [tap.tap_fox(rho, v, tol=tol) for v in (1, 2, 3)]
        matches = [bool(tap.compare(results[0], r, tol)[0]) for r in results[1:]]
        out = {"fox": [r.to_json() for r in results], "match": all(matches)}
        return out, (EXIT_OK if all(matches) else EXIT_MATH)
    if args.method == "fox":
        return tap.tap_fox(rho, args.column, tol=tol).to_json()
    if args.method == "closed":
        return _closed_for(rho, tol).to_json()
    fox = tap.tap_fox(rho, args.column, tol=tol)
    closed = _closed_for(rho, tol)
    ok, unit, scale = tap.compare(fox, closed, tol)
    out = {
        "fox": fox.to_json(),
        "closed": closed.to_json(),
        "match": bool(ok),
        "unit": list(unit) if ok else None,
        "scale": cjson(scale) if ok else None,
    }
    return out, (EXIT_OK if ok else EXIT_MATH)


def cmd_solve_theta(args, cfg: Config):
    return {"theta": [cjson(th) for th in cv.solve_theta(*args.t, tol=cfg.tol_abs)]}


def cmd_cover(args, cfg: Config):
    plus, minus = cv.cover_t3(args.t1, args.t2, args.theta, cfg.tol_abs)
    return {"t3": [cjson(plus), cjson(minus)]}


def cmd_holonomy(args, cfg: Config):
    rho = sampling.holonomy(args.eps)
    c = cv.character_of(rho)
    fox = tap.tap_fox(rho, 3, tol=cfg.tol_abs)
    closed = tap.tap_closed(c, cv.ComponentLabel("X4"), cfg.tol_abs)
    ok, _, scale = tap.compare(fox, closed, cfg.tol_abs)
    _, after = sampling.parabolic_reference_matrices(args.eps)
    reference = cv.character_of(cv.Representation(*after))
    spans, total = tap.span_degree(fox.delta)
    out = {
        "representation": _rep_out(rho),
        "character": c.to_json(),
        "reference_character_distance": max(abs(a - b) for a, b in zip(c.as_tuple(), reference.as_tuple())),
        "tap": fox.to_json(),
        "tap_matches_closed_form": bool(ok),
        "spans": list(spans),
        "total_span": total,
    }
    return out, (EXIT_OK if ok else EXIT_MATH)


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="borromean", description=__doc__.splitlines()[0])
    p.add_argument("--tol", type=float, default=Config.tol_abs)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.add_argument("--pretty", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", help="build a representation on a component")
    s.add_argument("component", type=_component, help="X1+, X1-, X2, X3 or X4 (optionally _i)")
    s.add_argument("--i", type=int)
    s.add_argument("--kappa-prev", type=parse_complex)
    s.add_argument("--kappa-next", type=parse_complex)
    s.add_argument("--t-i", type=parse_complex)
    s.add_argument("--t-prev-pair", type=parse_complex)
    s.add_argument("--t-next-pair", type=parse_complex)
    s.add_argument("--t123", type=parse_complex)
    s.add_argument("--t", type=parse_complex, nargs=3)
    s.add_argument("--theta", type=parse_complex)
    s.add_argument("--theta-branch", type=int, default=0)
    s.add_argument("--kappa-branch", type=int, default=0, choices=(0, 1))
    s.add_argument("--samples", type=int)
    s.set_defaults(func=cmd_sample)

    for name, func, help_ in (
        ("verify", cmd_verify, "check relations, irreducibility and trace identities"),
        ("char", cmd_char, "trace coordinates of a representation"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("rep")
        s.set_defaults(func=func)

    s = sub.add_parser("classify", help="components containing a character")
    s.add_argument("char")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("tap", help="twisted Alexander polynomial")
    s.add_argument("rep")
    s.add_argument("--method", choices=("fox", "closed", "both"), default="both")
    s.add_argument("--column", type=int, default=3, choices=(1, 2, 3))
    s.add_argument("--all-columns", action="store_true")
    s.set_defaults(func=cmd_tap)

    s = sub.add_parser("solve-theta", help="theta roots over (t1, t2, t3)")
    s.add_argument("--t", type=parse_complex, nargs=3, required=True)
    s.set_defaults(func=cmd_solve_theta)

    s = sub.add_parser("cover", help="t3 from (t1, t2, theta)")
    s.add_argument("--t1", type=parse_complex, required=True)
    s.add_argument("--t2", type=parse_complex, required=True)
    s.add_argument("--theta", type=parse_complex, required=True)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("holonomy", help="the parabolic point t1 = t2 = t3 = 2")
    s.add_argument("--eps", type=int, default=1, choices=(1, -1))
    s.set_defaults(func=cmd_holonomy)
    return p


def _emit(obj, cfg: Config, pretty: bool):
    text = json.dumps(obj, indent=2 if pretty else None, sort_keys=True, allow_nan=True)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(tol_abs=args.tol, seed=args.seed, output=args.output)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        result = args.func(args, cfg)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        _emit(result, cfg, args.pretty)
        return code
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (NotDivisible, LabelMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except BorromeanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
