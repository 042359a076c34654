"""Exact polynomial and rational-function algebra.

Coefficients are stored in ascending order as :class:`fractions.Fraction`.
Floats are converted exactly (``Fraction(0.1)`` is the binary value of the
double), so every algebraic step is exact and rounding happens only when
roots are located or values are evaluated numerically.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from numbers import Rational

import numpy as np

from .errors import DegeneracyError, InvalidTransformError


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (Rational, str)):
        return Fraction(c)
    return Fraction(float(c))


class Polynomial:
    """Polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coef", "__dict__")

    def __init__(self, coef=()):
        c = [_frac(v) for v in coef]
        while c and c[-1] == 0:
            c.pop()
        self.coef = tuple(c)

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @classmethod
    def z(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coef) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coef

    @property
    def leading(self) -> Fraction:
        return self.coef[-1] if self.coef else Fraction(0)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coef]})"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coef == other.coef
        return NotImplemented

    def __hash__(self):
        return hash(self.coef)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coef), len(other.coef))
        a = self.coef + (Fraction(0),) * (n - len(self.coef))
        b = other.coef + (Fraction(0),) * (n - len(other.coef))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coef])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coef) + len(other.coef) - 1)
        for i, a in enumerate(self.coef):
            if a:
                for j, b in enumerate(other.coef):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coef)
        dd = other.degree
        if len(rem) - 1 < dd:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - dd)
        lead = other.leading
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coef):
                    rem[k + j] -= q * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def deriv(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coef)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return Polynomial([c / self.leading for c in self.coef])

    def scale(self, s) -> "Polynomial":
        """``p(s*z)``."""
        s = _frac(s)
        return Polynomial([c * s**k for k, c in enumerate(self.coef)])

    def exact(self, x) -> Fraction:
        """Exact value at a rational (or float, read exactly) point."""
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coef):
            acc = acc * x + c
        return acc

    @cached_property
    def _float_coef(self) -> np.ndarray:
        return np.array([float(c) for c in self.coef], dtype=float)

    def __call__(self, x):
        """Floating evaluation by Horner's rule; accepts scalars or arrays."""
        x = np.asarray(x)
        acc = np.zeros_like(x, dtype=np.result_type(x, float))
        for c in self._float_coef[::-1]:
            acc = acc * x + c
        return acc

    def reversed_eval(self, u, degree: int):
        """``u**degree * p(1/u)``; stable form for evaluating at large ``|z|``."""
        c = np.zeros(degree + 1)
        c[: len(self._float_coef)] = self._float_coef
        acc = np.zeros_like(u)
        for coef in c:
            acc = acc * u + coef
        return acc

    def complex_roots(self) -> np.ndarray:
        """Companion-matrix eigenvalues (unpolished)."""
        if self.degree < 1:
            return np.array([], dtype=complex)
        return np.polynomial.polynomial.polyroots(self._float_coef).astype(complex)

    def cauchy_bound(self) -> float:
        """All roots lie in ``|z| <= 1 + max |c_k / c_n|``."""
        lead = self.leading
        return 1.0 + max((float(abs(c / lead)) for c in self.coef[:-1]), default=0.0)

    def real_roots(self, imag_tol: float = 1e-9) -> list[float]:
        """All roots, which must be real and simple, polished to full precision.

        Seeds come from the companion matrix.  Each seed gets an isolating
        interval bounded by midpoints to its neighbours (and the Cauchy
        bound at the ends); an exact sign change is required there, then a
        Newton iteration with bisection fallback converges to the correctly
        rounded root.
        """
        if self.degree < 1:
            return []
        seeds = self.complex_roots()
        bad = np.abs(seeds.imag) > imag_tol * (1.0 + np.abs(seeds.real))
        if np.any(bad):
            raise InvalidTransformError(
                f"non-real root {seeds[bad][0]!r}: not the transform of a measure"
            )
        xs = np.sort(seeds.real)
        bound = self.cauchy_bound()
        edges = [-bound - 1.0] + list(0.5 * (xs[1:] + xs[:-1])) + [bound + 1.0]
        dp = self.deriv()
        roots = []
        for k, x0 in enumerate(xs):
            roots.append(_polish(self, dp, float(x0), edges[k], edges[k + 1]) + 0.0)  # no -0.0
        for a, b in zip(roots, roots[1:]):
            if not a < b:
                raise DegeneracyError("roots could not be separated")
        return roots

    def to_list(self) -> list[float]:
        return [float(c) for c in self.coef]


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _polish(p: Polynomial, dp: Polynomial, x0: float, lo: float, hi: float, max_iter: int = 200) -> float:
    flo, fhi = _sign(p.exact(lo)), _sign(p.exact(hi))
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if flo == fhi:
        raise DegeneracyError(f"no sign change isolating the root near {x0!r}")
    x = min(max(x0, lo), hi)
    for _ in range(max_iter):
        fx = p.exact(x)
        s = _sign(fx)
        if s == 0:
            return x
        if s == flo:
            lo = x
        else:
            hi = x
        d = dp.exact(x)
        nxt = None
        if d != 0:
            cand = float(Fraction(x) - fx / d)
            if lo < cand < hi:
                nxt = cand
        if nxt is None:
            nxt = 0.5 * (lo + hi)
        if nxt == x or hi - lo <= 0 or nxt in (lo, hi):
            break
        x = nxt
    # pick the closer of the candidate floats around the root
    best = min({lo, x, hi}, key=lambda v: abs(p.exact(v)) / max(abs(dp.exact(v)), Fraction(1, 10**300)))
    return float(best)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (exact Euclid)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RationalFn:
    """Ratio ``num/den`` of exact polynomials, with ``den`` monic.

    Common factors are cancelled exactly at construction.
    """

    __slots__ = ("num", "den", "__dict__")

    def __init__(self, num, den=None, reduce: bool = True):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = Polynomial([1]) if den is None else den
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not num.is_zero and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        if num.is_zero:
            den = Polynomial([1])
        lead = den.leading
        self.num = Polynomial([c / lead for c in num.coef])
        self.den = den.monic()

    @classmethod
    def polynomial(cls, p) -> "RationalFn":
        return cls(p, Polynomial([1]), reduce=False)

    def __repr__(self):
        return f"RationalFn(num={self.num.to_list()}, den={self.den.to_list()})"

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        return RationalFn.polynomial(other if isinstance(other, Polynomial) else Polynomial([other]))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFn":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return RationalFn(self.den, self.num, reduce=False)

    def split(self):
        """Polynomial part and proper remainder: ``self = q + r/den``."""
        q, r = divmod(self.num, self.den)
        return q, RationalFn(r, self.den, reduce=False)

    def __call__(self, z):
        """Floating evaluation; uses the reversed form where ``|z| > 1``."""
        z = np.asarray(z, dtype=complex)
        dn, dd = self.num.degree, self.den.degree
        if self.is_zero:
            return np.zeros_like(z)
        out = np.empty_like(z)
        big = np.abs(z) > 1.0
        small = ~big
        if np.any(small):
            zs = z[small]
            out[small] = self.num(zs) / self.den(zs)
        if np.any(big):
            zb = z[big]
            u = 1.0 / zb
            d = max(dn, dd)
            out[big] = self.num.reversed_eval(u, d) / self.den.reversed_eval(u, d)
        return out if out.ndim else out[()]

    def laurent(self, count: int) -> list[Fraction]:
        """First ``count`` coefficients ``c_k`` of ``sum_k c_k z**-(k+1)``.

        Requires a proper function (deg num < deg den).  For the Cauchy
        transform of a measure these are its moments.
        """
        d = self.den.degree
        if self.num.degree >= d and not self.is_zero:
            raise ValueError("laurent expansion needs a proper rational function")
        N, D = self.num.coef, self.den.coef
        out: list[Fraction] = []
        for m in range(count):
            i = d - 1 - m
            acc = N[i] if 0 <= i < len(N) else Fraction(0)
            for j in range(m):
                idx = d - m + j
                if 0 <= idx < len(D):
                    acc -= D[idx] * out[j]
            out.append(acc)
        return out

    def to_json(self) -> str:
        return json.dumps({"num": self.num.to_list(), "den": self.den.to_list()})
