"""Boolean convolution through additivity of ``F(z) - z``."""

from __future__ import annotations

import math

import numpy as np

from .errors import DegeneracyError, InvalidTransformError
from .measure import AtomicMeasure, check_probability, check_standardized, shrink
from .polynomial import Polynomial, RationalFn
from .transform import ReprData, eval_G, rational_F, recover_measure, _check_point

# residues this small after a convolution are remnants of factors that
# cancel in exact arithmetic but not in the float-derived input
CANCEL_TOL = 1e-12


def _recover(F: RationalFn, drop_below: float = 0.0) -> AtomicMeasure:
    try:
        return recover_measure(F, drop_below=drop_below)
    except (InvalidTransformError, DegeneracyError) as exc:
        raise DegeneracyError(f"Boolean convolution produced an invalid transform: {exc}") from exc


def boolean_convolve(mu: AtomicMeasure, nu: AtomicMeasure) -> AtomicMeasure:
    """``mu ⊎ nu``, defined by ``F = F_mu + F_nu - z``."""
    check_probability(mu, "first measure")
    check_probability(nu, "second measure")
    F = rational_F(mu) + rational_F(nu) - Polynomial.z()
    return _recover(F, drop_below=CANCEL_TOL)


def boolean_power_F(mu: AtomicMeasure, n: int) -> RationalFn:
    """Exact ``F`` of the n-fold Boolean power, ``(1 - n) z + n F_mu``."""
    F = rational_F(mu)
    P, Q = F.num, F.den
    num = Polynomial.z() * Q * (1 - n) + P * n
    # gcd(P, Q) = 1 already, so gcd(num, Q) = 1
    return RationalFn(num, Q, reduce=False)


def boolean_power(mu: AtomicMeasure, n: int) -> AtomicMeasure:
    """n-fold Boolean convolution power; keeps the number of atoms."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    check_probability(mu)
    if n == 1:
        return mu
    return _recover(boolean_power_F(mu, int(n)))


def clt_normalize(mu: AtomicMeasure, n: int) -> AtomicMeasure:
    """``mu_n = D_{1/sqrt(n)} mu^{⊎n}`` for a standardized ``mu``."""
    check_standardized(mu)
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    if n == 1:
        return mu
    root = math.isqrt(n)
    s = root if root * root == n else math.sqrt(n)
    return shrink(boolean_power(mu, n), s)


def eval_F_mu_n(data: ReprData, n: int, z):
    """``F_{mu_n}(z) = z - 1/W_n(z)`` from the (alpha, omega) representation.

    ``W_n(z) = z - alpha/sqrt(n) - G_omega(sqrt(n) z)/sqrt(n)``.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    z = _check_point(z)
    W = np.asarray(W_n(data, int(n), z))
    if np.any(W == 0):
        raise DegeneracyError("W_n vanishes")
    out = z - 1.0 / W
    return out if np.ndim(out) else complex(out)


def W_n(data: ReprData, n: int, z):
    z = _check_point(z)
    r = math.sqrt(n)
    out = z - float(data.alpha) / r - np.asarray(eval_G(data.omega, r * z)) / r
    return out if np.ndim(out) else complex(out)
