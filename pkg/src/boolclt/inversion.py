"""Finite-y Stieltjes-Perron bracketing and Lévy bounds from Cauchy data.

The Poisson-smoothed mass of ``[a, b]`` at height y,

    I = -(1/pi) * integral_a^b Im G(x + iy) dx,

satisfies ``mu((a+d, b-d]) - 2y/(pi d) <= I <= mu((a-d, b+d]) + 2y/(pi d)``
for ``0 < d < (b-a)/2``.  For atomic measures I has a closed arctan form;
for black-box transforms it is integrated numerically.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidTransformError, PreconditionError, UnsupportedError
from .measure import AtomicMeasure, abs_moment, check_probability
from .quadrature import integrate
from .transform import eval_G

QUAD_TOL = 1e-10


def poisson_smoothed_mass(mu: AtomicMeasure, a: float, b: float, y: float) -> float:
    """Closed form ``sum_j w_j/pi * [atan((b-t_j)/y) - atan((a-t_j)/y)]``."""
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    if not y > 0:
        raise ValueError("y must be positive")
    if mu.is_zero:
        return 0.0
    if a == -math.inf and b == math.inf:
        return float(mu.total_mass())
    hi = np.arctan((b - mu.t) / y) if b != math.inf else np.full(len(mu), math.pi / 2)
    lo = np.arctan((a - mu.t) / y) if a != -math.inf else np.full(len(mu), -math.pi / 2)
    return float(np.sum(mu.w * (hi - lo)) / math.pi)


@dataclass
class TransformEvaluator:
    """Black-box Cauchy transform ``z -> G(z)`` (vectorized over arrays).

    ``mass`` and ``abs_moment2`` (total mass and second absolute moment)
    are needed to truncate infinite integration ranges.  ``peaks`` lists
    real locations where ``-Im G(x + iy)`` may spike; the quadrature seeds
    its panels there.  The sign of ``Im G`` is checked on every batch of
    evaluations.
    """

    func: Callable
    mass: float | None = None
    abs_moment2: float | None = None
    peaks: tuple = ()

    @classmethod
    def from_measure(cls, mu: AtomicMeasure) -> "TransformEvaluator":
        return cls(
            func=lambda z: eval_G(mu, z),
            mass=float(mu.total_mass()),
            abs_moment2=float(abs_moment(mu, 2)),
            peaks=tuple(mu.t),
        )

    def __call__(self, z):
        g = np.asarray(self.func(z), dtype=complex)
        scale = np.abs(g).max(initial=0.0)
        if np.any(g.imag > 1e-12 * (1.0 + scale)):
            raise InvalidTransformError("Im G > 0 in the upper half-plane: not a Cauchy transform")
        return g

    def density(self, x, y: float):
        """``-(1/pi) Im G(x + iy)``."""
        return -np.asarray(self(np.asarray(x) + 1j * y)).imag / math.pi

    def tail_cutoff(self, y: float, tol: float) -> float:
        """X with ``integral_{|x|>X} -(1/pi) Im G(x+iy) dx <= tol / 2``.

        For ``|x| >= X`` the kernel obeys ``y/((x-t)^2+y^2) <= 4y/x^2`` on
        ``|t| <= |x|/2`` and ``<= 1/y`` elsewhere, where Chebyshev bounds
        the mass by ``4 m2 / x^2``.  Each tail is then at most
        ``(4 y m + 4 m2 / y) / (pi X)``.
        """
        if self.mass is None or self.abs_moment2 is None:
            raise UnsupportedError("infinite endpoint needs mass and second-moment data")
        c = (4.0 * y * self.mass + 4.0 * self.abs_moment2 / y) / math.pi
        peak = max((abs(p) for p in self.peaks), default=0.0)
        return max(c / (tol / 4.0), 2.0 * peak + 1.0)

    def tail_bound(self, y: float, X: float) -> float:
        c = (4.0 * y * self.mass + 4.0 * self.abs_moment2 / y) / math.pi
        return c / X


def _seed_points(lo: float, hi: float, peaks, y: float) -> np.ndarray:
    pts = [lo, hi]
    offsets = y * np.array([0.0, 1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6])
    for p in peaks:
        pts.extend(p + offsets)
        pts.extend(p - offsets[1:])
    pts = np.asarray(pts, dtype=float)
    if math.isfinite(lo) and math.isfinite(hi) and hi - lo > 1.0:
        # geometric seeding away from the data keeps huge truncated ranges cheap
        mag = 10.0 ** np.arange(0, int(math.log10(max(abs(lo), abs(hi)))) + 1)
        pts = np.concatenate([pts, mag, -mag])
    pts = pts[(pts >= lo) & (pts <= hi)]
    return np.unique(pts)


def smoothed_mass_quadrature(G, a: float, b: float, y: float, tol: float = QUAD_TOL):
    """Numerical ``-(1/pi) integral_a^b Im G(x + iy) dx``.

    ``G`` is a :class:`TransformEvaluator` or an :class:`AtomicMeasure`.
    Infinite endpoints are truncated at the cutoff from
    :meth:`TransformEvaluator.tail_cutoff`; the discarded tail bound is
    included in the returned error.  Returns ``(value, error)``.
    """
    if isinstance(G, AtomicMeasure):
        G = TransformEvaluator.from_measure(G)
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    if not y > 0:
        raise ValueError("y must be positive")
    lo, hi, tail = a, b, 0.0
    if not (math.isfinite(a) and math.isfinite(b)):
        X = G.tail_cutoff(y, tol)
        if a == -math.inf:
            lo = min(-X, b - 1.0)
            tail += G.tail_bound(y, X)
        if b == math.inf:
            hi = max(X, a + 1.0)
            tail += G.tail_bound(y, X)
    quad_tol = tol / 2.0 if tail else tol
    value, err = integrate(lambda x: G.density(x, y), _seed_points(lo, hi, G.peaks, y), tol=quad_tol)
    return value, err + tail


@dataclass(frozen=True)
class MassBracket:
    """Certificates ``mu((a+d, b-d]) <= inner_upper`` and ``mu((a-d, b+d]) >= outer_lower``."""

    a: float
    b: float
    y: float
    delta: float
    smoothed_integral: float
    margin: float
    inner_upper: float = field(init=False)
    outer_lower: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "inner_upper", self.smoothed_integral + self.margin)
        object.__setattr__(self, "outer_lower", self.smoothed_integral - self.margin)

    @property
    def inner_interval(self):
        return (self.a + self.delta, self.b - self.delta)

    @property
    def outer_interval(self):
        return (self.a - self.delta, self.b + self.delta)

    def slacks(self, mu: AtomicMeasure) -> tuple[float, float]:
        """Non-negative slacks mean both certificates hold for ``mu``."""
        inner = mu.interval_mass(*self.inner_interval)
        outer = mu.interval_mass(*self.outer_interval)
        return self.inner_upper - inner, outer - self.outer_lower

    def to_dict(self) -> dict:
        d = asdict(self)
        return {
            "a": d["a"], "b": d["b"], "y": d["y"], "delta": d["delta"],
            "integral": d["smoothed_integral"], "margin": d["margin"],
            "inner_upper": d["inner_upper"], "outer_lower": d["outer_lower"],
        }


def theorem2_bracket(mu, a: float, b: float, y: float, delta: float, tol: float = QUAD_TOL) -> MassBracket:
    """Two-sided interval-mass certificate at finite height ``y``.

    ``mu`` is an :class:`AtomicMeasure` (closed-form integral) or a
    :class:`TransformEvaluator` (quadrature).  ``delta`` must lie in
    ``(0, (b-a)/2)`` when both ends are finite; with an infinite end only
    the finite end is shifted.
    """
    if not a < b:
        raise PreconditionError(f"need a < b, got a={a!r}, b={b!r}")
    if not y > 0:
        raise PreconditionError("y must be positive")
    if not delta > 0:
        raise PreconditionError("delta must be positive")
    if math.isfinite(a) and math.isfinite(b) and not delta < (b - a) / 2:
        raise PreconditionError(f"delta must be below (b-a)/2 = {(b - a) / 2!r}")
    if isinstance(mu, AtomicMeasure):
        integral = poisson_smoothed_mass(mu, a, b, y)
    else:
        integral, _ = smoothed_mass_quadrature(mu, a, b, y, tol=tol)
    return MassBracket(a, b, y, delta, integral, 2.0 * y / (math.pi * delta))


def levy_smoothing_bound(y: float) -> float:
    """``sqrt(2y/pi)``: Lévy distance between mu and its Cauchy smoothing at scale y."""
    if not y > 0:
        raise ValueError("y must be positive")
    return math.sqrt(2.0 * y / math.pi)


class SmoothedMeasure:
    """The Cauchy-smoothed measure ``mu * C_y``, density ``-(1/pi) Im G_mu(x + iy)``."""

    def __init__(self, mu: AtomicMeasure, y: float):
        if not y > 0:
            raise ValueError("y must be positive")
        self.mu = mu
        self.y = y
        self.evaluator = TransformEvaluator.from_measure(mu)

    def density(self, x):
        return self.evaluator.density(x, self.y)

    def cdf(self, x):
        """``mu^y((-inf, x])`` in closed form; vectorized over x."""
        x = np.asarray(x, dtype=float)
        u = np.arctan((x[..., None] - self.mu.t) / self.y)
        out = np.sum(self.mu.w * (u + math.pi / 2), axis=-1) / math.pi
        return out if out.ndim else float(out)

    def discretize(self, grid) -> AtomicMeasure:
        """Atomic measure with the same CDF as ``mu^y`` at every grid point.

        The mass of ``(g_{i-1}, g_i]`` goes to ``g_i``; the two tails go to
        the first and last grid points.
        """
        grid = np.unique(np.asarray(grid, dtype=float))
        c = self.cdf(grid)
        w = np.diff(np.concatenate([[0.0], c]))
        w[-1] += float(self.mu.total_mass()) - c[-1]
        keep = w > 0
        return AtomicMeasure(tuple(grid[keep]), tuple(w[keep]))


def smoothed_measure(mu: AtomicMeasure, y: float) -> SmoothedMeasure:
    return SmoothedMeasure(mu, y)


def levy_cauchy_bound(mu: AtomicMeasure, nu: AtomicMeasure, y: float, tol: float = 1e-9) -> float:
    """``sqrt(8y/pi) + (1/pi) integral |Im G_mu(x+iy) - Im G_nu(x+iy)| dx``.

    The integral runs over the whole line; its tails are truncated where
    the sum of both envelopes falls below ``tol/4`` per side.
    """
    check_probability(mu, "first measure")
    check_probability(nu, "second measure")
    if not y > 0:
        raise ValueError("y must be positive")
    base = math.sqrt(8.0 * y / math.pi)
    if mu.locations == nu.locations and mu.weights == nu.weights:
        return base
    Gm = TransformEvaluator.from_measure(mu)
    Gn = TransformEvaluator.from_measure(nu)
    both = TransformEvaluator(
        func=lambda z: Gm(z) + Gn(z),
        mass=Gm.mass + Gn.mass,
        abs_moment2=Gm.abs_moment2 + Gn.abs_moment2,
        peaks=Gm.peaks + Gn.peaks,
    )
    X = both.tail_cutoff(y, tol)

    def integrand(x):
        z = x + 1j * y
        return np.abs(Gm(z).imag - Gn(z).imag) / math.pi

    value, _ = integrate(integrand, _seed_points(-X, X, both.peaks, y), tol=tol / 2.0)
    return base + value
