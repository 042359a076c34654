"""Brute-force reference computations, independent of the package code paths."""

import numpy as np

PITCH = 1e-4


def levy_grid_oracle(mu_atoms, nu_atoms):
    """Lévy distance by scanning the definition on an integer grid.

    Atom locations are integer multiples of ``PITCH`` and weights integers
    summing to ``1/PITCH``, so CDF levels and shifts share one unit and
    every comparison is exact integer arithmetic.  For each candidate
    epsilon (a multiple of ``PITCH``) the sandwich inequality is checked at
    every grid x in range; the smallest feasible epsilon is located by
    bisection using monotonicity of feasibility in epsilon.  The true
    distance lies within one ``PITCH`` below the result.
    """
    ft, fw = (np.array(v, dtype=np.int64) for v in zip(*sorted(mu_atoms)))
    gt, gw = (np.array(v, dtype=np.int64) for v in zip(*sorted(nu_atoms)))
    total = int(round(1 / PITCH))
    assert fw.sum() == total and gw.sum() == total
    F_lv = np.concatenate([[0], np.cumsum(fw)])
    G_lv = np.concatenate([[0], np.cumsum(gw)])
    lo = min(ft.min(), gt.min()) - total - 2
    hi = max(ft.max(), gt.max()) + total + 2
    x = np.arange(lo, hi + 1, dtype=np.int64)
    Gx = G_lv[np.searchsorted(gt, x, side="right")]

    def feasible(e):
        Flo = F_lv[np.searchsorted(ft, x - e, side="right")]
        Fhi = F_lv[np.searchsorted(ft, x + e, side="right")]
        return bool(np.all(Flo - e <= Gx) and np.all(Gx <= Fhi + e))

    a, b = 0, total
    if feasible(0):
        return 0.0
    while b - a > 1:
        m = (a + b) // 2
        if feasible(m):
            b = m
        else:
            a = m
    return b * PITCH

