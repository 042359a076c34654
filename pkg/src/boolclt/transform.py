"""Cauchy and F transforms of atomic measures.

``G_mu(z) = sum_j w_j / (z - t_j)`` is held exactly as a :class:`RationalFn`;
``F_mu = 1 / G_mu``.  Measures are recovered from rational transforms
through the real poles of G and their residues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DegeneracyError,
    HypothesisError,
    InvalidPointError,
    InvalidTransformError,
    RepresentationError,
)
from .measure import HYPOTHESIS_TOL, AtomicMeasure, abs_moment, check_standardized, moment
from .polynomial import Polynomial, RationalFn

IMAG_TOL = 1e-9
RECON_TOL = 1e-10


def rational_G(mu: AtomicMeasure) -> RationalFn:
    """Cauchy transform of ``mu`` as a reduced rational function.

    For k atoms the numerator has degree k-1 and the monic denominator has
    degree k.  The zero measure gives the zero function.
    """
    if mu.is_zero:
        return RationalFn(Polynomial(), Polynomial([1]), reduce=False)
    den = Polynomial.from_roots(mu.locations)
    num = Polynomial()
    for j, (_, w) in enumerate(mu):
        others = Polynomial.from_roots(mu.locations[:j] + mu.locations[j + 1 :])
        num = num + others * w
    # distinct atoms with positive weights never share a root with den
    return RationalFn(num, den, reduce=False)


def rational_F(mu: AtomicMeasure) -> RationalFn:
    if mu.is_zero:
        raise DegeneracyError("the zero measure has no F-transform")
    return rational_G(mu).reciprocal()


def _check_point(z):
    z = np.asarray(z, dtype=complex)
    if np.any(~(z.imag > 0)):
        raise InvalidPointError("evaluation point must lie in the open upper half-plane")
    return z


def eval_G(mu, z):
    """``G(z)`` for an atomic measure (direct sum) or a rational G."""
    z = _check_point(z)
    if isinstance(mu, RationalFn):
        return mu(z)
    if mu.is_zero:
        out = np.zeros_like(z)
        return out if out.ndim else complex(out)
    out = np.sum(mu.w / (z[..., None] - mu.t), axis=-1)
    return out if out.ndim else complex(out)


def eval_F(mu, z):
    """``F(z) = 1/G(z)``."""
    g = np.asarray(eval_G(mu, z))
    if np.any(g == 0):
        raise DegeneracyError("G vanishes at the evaluation point")
    out = 1.0 / g
    return out if out.ndim else complex(out)


def bound_trivial(mu: AtomicMeasure, z) -> float:
    """``mu(R) / y``, valid for every z in the upper half-plane."""
    z = _check_point(z)
    return float(mu.total_mass()) / float(z.imag)


def bound_prop2(mu: AtomicMeasure, z, i: int) -> float:
    """``2 mu(R)/|x| + 2**i * int |t|**i dmu / (y |x|**i)``, for x != 0."""
    z = _check_point(z)
    x, y = float(z.real), float(z.imag)
    if x == 0:
        raise ValueError("the real-part bound needs x != 0")
    if i < 0:
        raise ValueError("i must be non-negative")
    ax = abs(x)
    return 2.0 * float(mu.total_mass()) / ax + 2.0**i * float(abs_moment(mu, i)) / (y * ax**i)


def measure_from_G(G: RationalFn, drop_below: float = 0.0) -> AtomicMeasure:
    """Atoms at the poles of a proper rational G, weighted by its residues.

    Residues with absolute value at most ``drop_below`` are discarded as
    remnants of near-cancelled factors; any other non-positive residue
    means G is not the transform of a non-negative measure.
    """
    if G.is_zero:
        return AtomicMeasure.zero()
    if G.num.degree >= G.den.degree:
        raise InvalidTransformError("G must decay at infinity (deg num < deg den)")
    poles = G.den.real_roots(IMAG_TOL)
    dden = G.den.deriv()
    atoms = []
    for x in poles:
        w = float(G.num.exact(x) / dden.exact(x))
        if abs(w) <= drop_below:
            continue
        if not w > 0:
            raise InvalidTransformError(f"non-positive residue {w!r} at {x!r}")
        atoms.append((x, w))
    return AtomicMeasure.from_atoms(atoms)


def recover_measure(F: RationalFn, drop_below: float = 0.0) -> AtomicMeasure:
    """Measure whose F-transform is ``F``; atoms at the real zeros of ``F.num``."""
    if F.num.degree != F.den.degree + 1:
        raise InvalidTransformError("F must grow like z at infinity (deg num = deg den + 1)")
    return measure_from_G(F.reciprocal(), drop_below=drop_below)


@dataclass(frozen=True)
class ReprData:
    """Two-level continued fraction ``F_mu(z) = z - 1/(z - alpha - G_omega(z))``.

    ``alpha`` is exact (a Fraction) whenever the input measure is.  ``nu``
    is the probability measure with ``G_nu = z - F_mu``, and ``omega_G`` is
    the exact rational Cauchy transform of ``omega``.
    """

    alpha: object
    omega: AtomicMeasure
    K: object
    nu: AtomicMeasure | None = None
    omega_G: RationalFn | None = None
    omega_mass: object = 0
    omega_m2: object = 0

    def summary(self) -> dict:
        return {"alpha": self.alpha, "K": self.K, "omega_mass": self.omega_mass, "omega_m2": self.omega_m2}


def _close(a, b, tol, strict=False) -> bool:
    if strict:
        return a == b
    return abs(float(a) - float(b)) <= tol * (1.0 + abs(float(b)))


def extract_representation(mu: AtomicMeasure, check_points: int = 20, seed: int = 0) -> ReprData:
    """Compute ``(alpha, omega, K)`` for a standardized atomic measure.

    Two exact polynomial divisions peel off ``G_nu = z - F_mu`` and then
    ``G_omega = z - alpha - F_nu``.  The result is cross-checked against
    ``alpha = m3(mu)`` and ``omega(R) = m4(mu) - m3(mu)**2 - 1`` (equality for
    exactly standardized rational input) and against the reconstruction identity at random
    points of the upper half-plane.
    """
    check_standardized(mu)
    if len(mu) < 2:
        raise HypothesisError("need at least two atoms")
    exact = mu.is_exact
    G = rational_G(mu)
    Q, P = G.num, G.den  # F_mu = P/Q

    # z - P/Q = m1 + r/Q with m1 the (vanishing) mean
    q, r = divmod(Polynomial.z() * Q - P, Q)
    if q.degree > 0 or abs(float(q.leading)) > HYPOTHESIS_TOL:
        raise RepresentationError("z - F_mu has a non-vanishing polynomial part")
    G_nu = RationalFn(r, Q, reduce=False)
    if G_nu.is_zero:
        raise RepresentationError("G_nu vanishes; measure is degenerate")
    try:
        nu = measure_from_G(G_nu)
    except (InvalidTransformError, DegeneracyError) as exc:
        raise RepresentationError(f"could not recover nu: {exc}") from exc

    # F_nu = Q_n / r_n = l1*z + l0 + s/r_n with l1 = 1/nu(R)
    Qn, rn = G_nu.den, G_nu.num
    lin, s = divmod(Qn, rn)
    l1 = lin.coef[1] if lin.degree >= 1 else Fraction(0)
    if lin.degree > 1 or abs(float(l1) - 1.0) > HYPOTHESIS_TOL:
        raise RepresentationError("nu is not a probability measure")
    l0 = lin.coef[0] if lin.coef else Fraction(0)
    alpha_exact = -l0
    G_omega = RationalFn(-s, rn, reduce=False)
    try:
        omega = measure_from_G(G_omega)
    except (InvalidTransformError, DegeneracyError) as exc:
        raise RepresentationError(f"could not recover omega: {exc}") from exc
    if G_omega.is_zero:
        om_mass, om_m2 = Fraction(0), Fraction(0)
    else:
        om_mass, _, om_m2 = G_omega.laurent(3)
    K_exact = max(om_mass, om_m2)

    m3, m4 = moment(mu, 3), moment(mu, 4)
    # equality is only exact when the input is standardized exactly, not just to tolerance
    strict = exact and moment(mu, 1) == 0 and moment(mu, 2) == 1
    if exact:
        alpha, K, om_mass_v, om_m2_v = alpha_exact, K_exact, om_mass, om_m2
        expected = m4 - m3**2 - 1
    else:
        alpha, K, om_mass_v, om_m2_v = (float(v) for v in (alpha_exact, K_exact, om_mass, om_m2))
        expected = float(m4) - float(m3) ** 2 - 1.0
    if not _close(alpha, m3, HYPOTHESIS_TOL, strict):
        raise RepresentationError(f"alpha={alpha!r} disagrees with m3={m3!r}")
    if not _close(om_mass_v, expected, HYPOTHESIS_TOL, strict):
        raise RepresentationError(f"omega(R)={om_mass_v!r} disagrees with m4 - m3^2 - 1 = {expected!r}")

    data = ReprData(alpha, omega, K, nu, G_omega, om_mass_v, om_m2_v)
    if check_points:
        rng = np.random.default_rng(seed)
        scale = 1.0 + float(np.max(np.abs(mu.t)))
        z = rng.uniform(-2 * scale, 2 * scale, check_points) + 1j * rng.uniform(0.05, 2 * scale, check_points)
        lhs = eval_F(mu, z)
        rhs = reconstruct_F(data, z)
        err = np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs))
        if np.max(err) > RECON_TOL:
            raise RepresentationError(f"reconstruction mismatch {np.max(err):.3e}")
    return data


def reconstruct_F(data: ReprData, z):
    """``z - 1/(z - alpha - G_omega(z))``."""
    z = _check_point(z)
    w = z - float(data.alpha) - eval_G(data.omega, z)
    if np.any(w == 0):
        raise DegeneracyError("continued-fraction denominator vanishes")
    out = z - 1.0 / w
    return out if np.ndim(out) else complex(out)


def _sqrt_exact(v: Fraction):
    if v < 0:
        raise ValueError("negative square root")
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return math.sqrt(v)


def two_atom(p=Fraction(4, 5)) -> AtomicMeasure:
    """The standardized two-atom law ``p delta_a + (1-p) delta_b``.

    ``a = -sqrt((1-p)/p)``, ``b = sqrt(p/(1-p))``.  A float ``p`` is read
    through its shortest decimal repr, and perfect-square ratios stay
    exact: ``p = 0.8`` gives ``0.8 delta_{-1/2} + 0.2 delta_2``.
    """
    p = Fraction(repr(p)) if isinstance(p, float) else Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    a = -_sqrt_exact((1 - p) / p)
    b = _sqrt_exact(p / (1 - p))
    return AtomicMeasure.from_atoms([(a, p), (b, 1 - p)])
