"""Compare the Fox-calculus and closed-form polynomials on random samples of every component.

    python3 scripts/tap_sweep.py --per-class 50 --seed 1
"""

import argparse
import time

import numpy as np

from borromean import charvar as cv
from borromean import sampling, tap


def sweep(per_class: int, seed: int) -> list[tuple[str, int, float, float]]:
    rng = np.random.default_rng(seed)
    rows = []
    for label in cv.ALL_LABELS:
        t0 = time.perf_counter()
        bad, worst = 0, 0.0
        for _ in range(per_class):
            rho = sampling.sample(rng, label)
            closed = tap.tap_closed(cv.character_of(rho), label)
            for v in (1, 2, 3):
                ok, _, scale = tap.compare(tap.tap_fox(rho, v), closed)
                if ok:
                    worst = max(worst, abs(scale - 1))
                else:
                    bad += 1
        rows.append((str(label), bad, worst, time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-class", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'component':<8} {'mismatch':>8} {'max|scale-1|':>13} {'seconds':>8}")
    for name, bad, worst, secs in sweep(args.per_class, args.seed):
        print(f"{name:<8} {bad:>8} {worst:>13.2e} {secs:>8.2f}")


if __name__ == "__main__":
    main()
