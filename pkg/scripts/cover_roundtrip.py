"""theta -> t3 round trip over random (t1, t2, t3), with the spread of relative errors.

    python3 scripts/cover_roundtrip.py --points 1000
"""

import argparse

import numpy as np

from borromean import charvar as cv
from borromean.errors import BorromeanError
from borromean.sampling import rand_complex

ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
ap.add_argument("--points", type=int, default=1000)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

rng = np.random.default_rng(args.seed)
errs, skipped = [], 0
while len(errs) < args.points:
    t1, t2, t3 = (rand_complex(rng, 0.3, 4.0) for _ in range(3))
    try:
        for th in cv.solve_theta(t1, t2, t3):
            errs.append(min(abs(r - t3) for r in cv.cover_t3(t1, t2, th)) / abs(t3))
    except BorromeanError:
        skipped += 1

errs = np.array(errs)
print(f"{len(errs)} roots, {skipped} draws on excluded sets")
print("relative error quantiles (50/99/100%):", np.quantile(errs, [0.5, 0.99, 1.0]))
