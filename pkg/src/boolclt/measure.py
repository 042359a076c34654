"""Finite atomic measures, their moments and CDFs, dilation and Lévy distance.

Atom data is kept in whatever number type it arrives in.  Integers and
:class:`fractions.Fraction` values are kept exact, so moments of measures
built from rational input are exact too; floats stay floats.  Every
numerical routine works on float views of the atoms.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, NamedTuple

import numpy as np

from .errors import HypothesisError, InvalidMeasureError

MERGE_TOL = 1e-14
MASS_TOL = 1e-12
HYPOTHESIS_TOL = 1e-9
LEVY_TOL = 1e-12


def _as_number(v):
    if isinstance(v, bool):
        raise InvalidMeasureError(f"not a number: {v!r}")
    if isinstance(v, Rational):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    v = float(v)
    if not math.isfinite(v):
        raise InvalidMeasureError(f"non-finite atom data: {v!r}")
    return v


def _exact(v) -> bool:
    return isinstance(v, Fraction)


@dataclass(frozen=True)
class AtomicMeasure:
    """A finite non-negative combination of point masses.

    ``locations`` is strictly increasing and every weight is strictly
    positive.  The empty measure is allowed and plays the role of the zero
    measure.  Build instances with :meth:`from_atoms` (which sorts and
    merges) rather than the raw constructor.
    """

    locations: tuple = ()
    weights: tuple = ()

    def __post_init__(self):
        if len(self.locations) != len(self.weights):
            raise InvalidMeasureError("locations and weights differ in length")
        for w in self.weights:
            if not w > 0:
                raise InvalidMeasureError(f"weights must be strictly positive, got {w!r}")
        for a, b in zip(self.locations, self.locations[1:]):
            if not a < b:
                raise InvalidMeasureError("locations must be strictly increasing")

    @classmethod
    def from_atoms(cls, atoms: Iterable, merge_tol: float = MERGE_TOL) -> "AtomicMeasure":
        """Build from ``(location, weight)`` pairs in any order.

        Locations closer than ``merge_tol`` are merged into one atom at their
        weighted mean.
        """
        pairs = sorted((_as_number(t), _as_number(w)) for t, w in atoms)
        locs, wts = [], []
        for t, w in pairs:
            if not w > 0:
                raise InvalidMeasureError(f"weights must be strictly positive, got {w!r}")
            if locs and abs(t - locs[-1]) < merge_tol:
                total = wts[-1] + w
                locs[-1] = (locs[-1] * wts[-1] + t * w) / total
                wts[-1] = total
            else:
                locs.append(t)
                wts.append(w)
        return cls(tuple(locs), tuple(wts))

    @classmethod
    def zero(cls) -> "AtomicMeasure":
        return cls()

    @classmethod
    def point_mass(cls, t=0) -> "AtomicMeasure":
        return cls.from_atoms([(t, 1)])

    @classmethod
    def bernoulli(cls) -> "AtomicMeasure":
        """The symmetric Bernoulli law 1/2 delta_{-1} + 1/2 delta_{1}."""
        return cls.from_atoms([(-1, Fraction(1, 2)), (1, Fraction(1, 2))])

    def __len__(self):
        return len(self.locations)

    def __iter__(self):
        return iter(zip(self.locations, self.weights))

    @property
    def is_zero(self) -> bool:
        return not self.locations

    @property
    def is_exact(self) -> bool:
        return all(map(_exact, self.locations)) and all(map(_exact, self.weights))

    @cached_property
    def t(self) -> np.ndarray:
        """Locations as a float array."""
        return np.array([float(v) for v in self.locations], dtype=float)

    @cached_property
    def w(self) -> np.ndarray:
        """Weights as a float array."""
        return np.array([float(v) for v in self.weights], dtype=float)

    @cached_property
    def _levels(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum(self.w)])

    def total_mass(self):
        return sum(self.weights, Fraction(0)) if self.is_exact else float(np.sum(self.w))

    def is_probability(self, tol: float = MASS_TOL) -> bool:
        return abs(self.total_mass() - 1) <= tol

    def cdf(self, x):
        """Right-continuous distribution function ``mu((-inf, x])``."""
        return self._levels[np.searchsorted(self.t, x, side="right")]

    def cdf_left(self, x):
        """Left limit ``mu((-inf, x))``."""
        return self._levels[np.searchsorted(self.t, x, side="left")]

    def interval_mass(self, lo, hi) -> float:
        """Mass of the half-open interval ``(lo, hi]``; infinite ends allowed."""
        if hi <= lo:
            return 0.0
        return float(self.cdf(hi) - self.cdf(lo))

    def to_json(self) -> str:
        atoms = [{"t": float(t), "w": float(w)} for t, w in self]
        return json.dumps({"atoms": atoms})

    @classmethod
    def from_json(cls, text: str) -> "AtomicMeasure":
        """Parse ``{"atoms": [{"t": ..., "w": ...}, ...]}``.

        Decimal literals are read as exact fractions, so ``0.8`` means 4/5.
        String values such as ``"1/3"`` are accepted as rationals.  The
        locations must already be strictly increasing.
        """
        try:
            data = json.loads(text, parse_float=Fraction)
            atoms = data["atoms"]
            pairs = [(_as_number(a["t"]), _as_number(a["w"])) for a in atoms]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidMeasureError(f"malformed measure JSON: {exc}") from exc
        if not isinstance(atoms, list):
            raise InvalidMeasureError("'atoms' must be a list")
        locs = tuple(t for t, _ in pairs)
        wts = tuple(w for _, w in pairs)
        return cls(locs, wts)


def moment(mu: AtomicMeasure, k: int):
    """``sum_j w_j t_j**k``; exact for exact atom data."""
    if k < 0:
        raise ValueError("moment order must be non-negative")
    if mu.is_exact:
        return sum((w * t**k for t, w in mu), Fraction(0))
    return math.fsum(float(w) * float(t) ** k for t, w in mu)


def abs_moment(mu: AtomicMeasure, k: int):
    """``sum_j w_j |t_j|**k``."""
    if k < 0:
        raise ValueError("moment order must be non-negative")
    if mu.is_exact:
        return sum((w * abs(t) ** k for t, w in mu), Fraction(0))
    return math.fsum(float(w) * abs(float(t)) ** k for t, w in mu)


def dilate(mu: AtomicMeasure, a) -> AtomicMeasure:
    """Push ``mu`` forward under ``t -> a*t`` (``D_a mu(B) = mu(B / a)``)."""
    if not a > 0:
        raise ValueError(f"dilation factor must be positive, got {a!r}")
    a = _as_number(a)
    if isinstance(a, float):
        locs = tuple(float(t) * a for t in mu.locations)
    else:
        locs = tuple(t * a for t in mu.locations)
    return AtomicMeasure(locs, mu.weights)


def shrink(mu: AtomicMeasure, s) -> AtomicMeasure:
    """Dilation by ``1/s``, computed as a division for correct rounding."""
    if not s > 0:
        raise ValueError(f"shrink factor must be positive, got {s!r}")
    s = _as_number(s)
    if isinstance(s, float):
        locs = tuple(float(t) / s for t in mu.locations)
    else:
        locs = tuple(t / s for t in mu.locations)
    return AtomicMeasure(locs, mu.weights)


def check_probability(mu: AtomicMeasure, name: str = "measure") -> None:
    if not mu.is_probability():
        raise InvalidMeasureError(f"{name} is not a probability measure (mass {float(mu.total_mass())!r})")


def check_standardized(mu: AtomicMeasure, tol: float = HYPOTHESIS_TOL) -> None:
    """Raise :class:`HypothesisError` unless mu is a probability measure with m1 = 0, m2 = 1."""
    if mu.is_zero or not mu.is_probability():
        raise HypothesisError("expected a probability measure")
    m1, m2 = moment(mu, 1), moment(mu, 2)
    if abs(m1) > tol or abs(m2 - 1) > tol:
        raise HypothesisError(f"expected mean 0 and variance 1, got m1={float(m1)!r}, m2={float(m2)!r}")


def _levy_feasible(mu: AtomicMeasure, nu: AtomicMeasure, eps: float) -> bool:
    # Sandwich condition F(x - eps) - eps <= G(x) <= F(x + eps) + eps, with F the
    # CDF of mu and G that of nu.  Both sides are step functions, so it is
    # enough to test right values and left limits at every jump of either side.
    F, G = mu, nu
    xs = G.t
    for side in ("right", "left"):
        Gx = G._levels[np.searchsorted(G.t, xs, side=side)]
        Flo = F._levels[np.searchsorted(F.t, xs - eps, side=side)]
        Fhi = F._levels[np.searchsorted(F.t, xs + eps, side=side)]
        if np.any(Flo - eps > Gx) or np.any(Gx > Fhi + eps):
            return False
    # Jumps of F(x -/+ eps) tested against the exact level of F rather than a
    # rounded shift, so x - eps landing one ulp off t_j cannot flip the test.
    for shift in (eps, -eps):
        p = F.t + shift
        right = F._levels[1:]
        left = F._levels[:-1]
        Gr = G._levels[np.searchsorted(G.t, p, side="right")]
        Gl = G._levels[np.searchsorted(G.t, p, side="left")]
        if shift > 0:
            if np.any(right - eps > Gr) or np.any(left - eps > Gl):
                return False
        else:
            if np.any(Gr > right + eps) or np.any(Gl > left + eps):
                return False
    return True


def levy_distance(mu: AtomicMeasure, nu: AtomicMeasure, tol: float = LEVY_TOL) -> float:
    """Lévy distance between two atomic probability measures.

    Bisection on ``[0, 1]`` with an exact feasibility test at each candidate;
    the returned value is a feasible epsilon within ``tol`` of the infimum.
    """
    check_probability(mu, "first measure")
    check_probability(nu, "second measure")
    if mu.locations == nu.locations and mu.weights == nu.weights:
        return 0.0
    if _levy_feasible(mu, nu, 0.0):
        return 0.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _levy_feasible(mu, nu, mid):
            hi = mid
        else:
            lo = mid
    return hi


class Concentration(NamedTuple):
    """Outcome of :func:`bernoulli_concentration`.

    ``eps_star`` and ``bound`` are ``None`` when no epsilon in (0, 1) works.
    """

    eps_star: float | None
    bound: float | None

    @property
    def concentrated(self) -> bool:
        return self.eps_star is not None


def bernoulli_concentration(mu: AtomicMeasure) -> Concentration:
    """Smallest eps in (0, 1) with mu((-1-eps,-1+eps) u (1-eps,1+eps)) >= 1 - eps.

    The mass function only changes at the atom distances to {-1, 1}, so the
    infimum is found exactly by scanning those breakpoints.  Returns the
    infimum together with the Lévy bound ``3.5 * eps_star`` against the
    symmetric Bernoulli law.  When all mass sits on {-1, 1} the infimum is 0.
    """
    check_standardized(mu)
    dist = np.minimum(np.abs(mu.t + 1.0), np.abs(mu.t - 1.0))
    order = np.argsort(dist, kind="stable")
    dist, wts = dist[order], mu.w[order]
    breaks = np.unique(np.concatenate([[0.0], dist]))
    breaks = breaks[breaks < 1.0]
    for k, lo in enumerate(breaks):
        hi = breaks[k + 1] if k + 1 < len(breaks) else 1.0
        # on (lo, hi] the open neighbourhoods contain exactly the atoms with dist <= lo
        inside = float(np.sum(wts[dist <= lo]))
        cand = max(lo, 1.0 - inside)
        if cand <= hi and cand < 1.0:
            return Concentration(cand, 3.5 * cand)
    return Concentration(None, None)
