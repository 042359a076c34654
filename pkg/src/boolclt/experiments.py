"""Explicit constants, lemma integral checks and the Berry-Esseen rate experiment."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
from scipy import stats

from .boolean import clt_normalize
from .errors import DegenerateFitError, PreconditionError
from .inversion import poisson_smoothed_mass
from .measure import AtomicMeasure, check_standardized, levy_distance
from .transform import ReprData, extract_representation

BERNOULLI = AtomicMeasure.bernoulli()
LEMMA_SLACK = 1e-12


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(float(v))


@dataclass(frozen=True)
class ConstantLedger:
    """``C`` and the threshold ``n_min`` for the Berry-Esseen bound.

    ``C`` strictly exceeds ``max{5, |alpha|+2, 4(K+1)^2, 1 + (30K+1)/0.09}``
    and ``n_min`` strictly exceeds ``max{400 alpha^2, 600 K, 16 C^2}``.
    Experiments use ``y = 1/n``.
    """

    alpha: float
    K: float
    C: float
    n_min: int
    M: float
    y_rule: str = "y = 1/n"

    def bound(self, n: int) -> float:
        """``(7/2)(C + 2)/sqrt(n)``."""
        return 3.5 * (self.C + 2.0) / math.sqrt(n)

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "K": self.K, "C": self.C, "n_min": self.n_min}


def paper_constants(data: ReprData, c_override: float | None = None) -> ConstantLedger:
    """Constants from the representation; ``C = M + 1`` unless overridden.

    Arithmetic is exact when alpha and K are (0.09 is taken as 9/100).
    """
    alpha, K = _q(data.alpha), _q(data.K)
    M = max(Fraction(5), abs(alpha) + 2, 4 * (K + 1) ** 2, 1 + Fraction(100, 9) * (30 * K + 1))
    if c_override is None:
        C = M + 1
    else:
        C = _q(c_override)
        if not C > M:
            raise PreconditionError(f"C override {float(C)!r} must exceed {float(M)!r}")
    n_min = math.ceil(max(400 * alpha**2, 600 * K, 16 * C**2)) + 1
    return ConstantLedger(
        alpha=_num(data.alpha), K=_num(data.K), C=float(C), n_min=n_min, M=float(M)
    )


def _num(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else float(v)
    return float(v)


class LemmaCheck(NamedTuple):
    I_A1: float
    I_A2: float
    I_mid: float
    bound_tail: float
    bound_mid: float
    passed: bool


def lemma_integral_checks(mu: AtomicMeasure, n: int, ledger: ConstantLedger) -> LemmaCheck:
    """Smoothed masses of ``mu_n`` at height ``1/n`` on the tails and the middle.

    ``A1 = (-inf, -1 - C/sqrt(n)]``, ``A2 = [1 + C/sqrt(n), inf)`` must each
    carry at most ``1/(pi sqrt(n))``; the middle interval
    ``[-1 + C/sqrt(n), 1 - C/sqrt(n)]`` at most
    ``2C/(3 sqrt(n)) + 6/(pi sqrt(n))``.  Integrals use the closed form.
    """
    if not n > ledger.n_min:
        raise PreconditionError(f"lemma checks need n > n_min = {ledger.n_min}, got n = {n}")
    mu_n = clt_normalize(mu, n)
    y = 1.0 / n
    r = math.sqrt(n)
    e1 = ledger.C / r
    i_a1 = poisson_smoothed_mass(mu_n, -math.inf, -1.0 - e1, y)
    i_a2 = poisson_smoothed_mass(mu_n, 1.0 + e1, math.inf, y)
    i_mid = poisson_smoothed_mass(mu_n, -1.0 + e1, 1.0 - e1, y) if e1 < 1.0 else 0.0
    tail = 1.0 / (math.pi * r)
    mid = 2.0 * ledger.C / (3.0 * r) + 6.0 / (math.pi * r)
    ok = i_a1 <= tail + LEMMA_SLACK and i_a2 <= tail + LEMMA_SLACK and i_mid <= mid + LEMMA_SLACK
    return LemmaCheck(i_a1, i_a2, i_mid, tail, mid, ok)


def assembly_check(mu: AtomicMeasure, n: int, ledger: ConstantLedger) -> tuple[float, float]:
    """Mass of ``mu_n`` outside the ``(eps1+eps2)``-neighbourhoods of +-1, and ``eps1+eps2``.

    ``eps1 = C/sqrt(n)``, ``eps2 = 2/sqrt(n)``.
    """
    mu_n = clt_normalize(mu, n)
    eps = (ledger.C + 2.0) / math.sqrt(n)
    d = np.minimum(np.abs(mu_n.t + 1.0), np.abs(mu_n.t - 1.0))
    outside = float(np.sum(mu_n.w[d >= eps]))
    return outside, eps


class CltRow(NamedTuple):
    n: int
    d_lev: float
    thm1_bound: float
    sqrt_n_dlev: float


@dataclass
class CltReport:
    rows: list
    ledger: ConstantLedger
    fitted_slope: float | None = None
    slope_stderr: float | None = None
    status: str = "ok"
    fit_rows: list = field(default_factory=list)

    def summary(self) -> dict:
        out = self.ledger.to_dict()
        out.update(slope=self.fitted_slope, stderr=self.slope_stderr)
        return out

    def violations(self) -> list:
        """Rows past ``n_min`` where the distance exceeds the bound."""
        return [r for r in self.rows if r.n > self.ledger.n_min and r.d_lev > r.thm1_bound]


def rate_fit(report_or_rows) -> tuple[float, float]:
    """Least-squares slope of ``log d_lev`` against ``log n`` and its standard error."""
    rows = report_or_rows.rows if isinstance(report_or_rows, CltReport) else report_or_rows
    pts = [(r[0], r[1]) for r in rows if r[1] > 0]
    if len(pts) < 4:
        raise DegenerateFitError(f"need at least 4 rows with positive distance, have {len(pts)}")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    res = stats.linregress(x, y)
    return float(res.slope), float(res.stderr)


def worker_count() -> int:
    """Thread cap from ``BOOLCL_THREADS`` (0 = one per CPU, unset = 1)."""
    raw = os.environ.get("BOOLCL_THREADS", "1").strip() or "1"
    k = int(raw)
    if k < 0:
        raise ValueError("BOOLCL_THREADS must be >= 0")
    if k == 0:
        return os.cpu_count() or 1
    return k


def _row(mu: AtomicMeasure, n: int, ledger: ConstantLedger) -> CltRow:
    d = levy_distance(clt_normalize(mu, n), BERNOULLI)
    return CltRow(n, d, ledger.bound(n), math.sqrt(n) * d)


def theorem1_experiment(
    mu: AtomicMeasure,
    n_list: Sequence[int],
    c_override: float | None = None,
    workers: int | None = None,
) -> CltReport:
    """Lévy distance of ``mu_n`` to the Bernoulli law against the explicit bound.

    The slope is fitted over rows with ``n > n_min``.  If that is
    impossible the slope stays ``None`` and the status says why:
    ``"degenerate-fixed-point"`` when every such row has distance zero,
    ``"insufficient-rows"`` otherwise.
    """
    check_standardized(mu)
    n_list = [int(n) for n in n_list]
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be strictly increasing")
    ledger = paper_constants(extract_representation(mu), c_override)
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda n: _row(mu, n, ledger), n_list))
    else:
        rows = [_row(mu, n, ledger) for n in n_list]
    report = CltReport(rows, ledger)
    report.fit_rows = [r for r in rows if r.n > ledger.n_min]
    try:
        report.fitted_slope, report.slope_stderr = rate_fit(report.fit_rows)
    except DegenerateFitError:
        if report.fit_rows and all(r.d_lev == 0 for r in report.fit_rows):
            report.status = "degenerate-fixed-point"
        else:
            report.status = "insufficient-rows"
    return report


def powers_of_two(start: int, end: int, ratio: int = 2) -> list[int]:
    out, n = [], start
    while n <= end:
        out.append(n)
        n *= ratio
    return out
