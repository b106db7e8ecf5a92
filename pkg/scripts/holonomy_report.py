"""Print the parabolic representation at t1 = t2 = t3 = 2 and its twisted Alexander polynomial."""

import numpy as np

from borromean import charvar as cv
from borromean import sampling, tap

np.set_printoptions(precision=6, suppress=True)

for eps in (1, -1):
    rho = sampling.holonomy(eps)
    c = cv.character_of(rho)
    print(f"eps = {eps:+d}   theta roots at (2,2,2): {cv.solve_theta(2, 2, 2)}")
    for k, x in enumerate(rho.mats, 1):
        print(f"x{k} =\n{x}")
    print("traces:", np.round(c.as_tuple(), 12))
    _, ref = sampling.parabolic_reference_matrices(eps)
    ref_c = cv.character_of(cv.Representation(*ref)).as_tuple()
    print("distance to reference character:", max(abs(a - b) for a, b in zip(c.as_tuple(), ref_c)))
    fox = tap.tap_fox(rho, 3)
    spans, total = tap.span_degree(fox.delta)
    print("Delta (normalized):", fox.delta)
    print(f"spans {spans}, total {total}, unit {fox.unit}, scale {fox.scale:.6g}")
    print("relation residuals:", cv.relation_residuals(rho.mats))
    print()
