from fractions import Fraction

import numpy as np
import pytest

from boolclt import AtomicMeasure, two_atom

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def bern():
    return AtomicMeasure.bernoulli()


@pytest.fixture
def mu2():
    """0.8 delta_{-1/2} + 0.2 delta_2."""
    return two_atom(Fraction(4, 5))


@pytest.fixture
def mu3():
    """1/4 delta_{-sqrt2} + 1/2 delta_0 + 1/4 delta_{sqrt2}."""
    r = 2**0.5
    return AtomicMeasure.from_atoms([(-r, 0.25), (0, 0.5), (r, 0.25)])


def random_rational_measure(rng, k_max=6, grid=10, span=3):
    """Probability measure with <= k_max atoms on the grid j/grid in [-span, span]."""
    k = int(rng.integers(1, k_max + 1))
    pts = rng.choice(np.arange(-span * grid, span * grid + 1), size=k, replace=False)
    raw = rng.integers(1, 20, size=k)
    total = int(raw.sum())
    return AtomicMeasure.from_atoms(
        [(Fraction(int(p), grid), Fraction(int(r), total)) for p, r in zip(pts, raw)]
    )


def random_standardized_rational(rng, k_min=2, k_max=6):
    """Exactly standardized rational measure (m1 = 0, m2 = 1).

    k-2 atoms are drawn freely; the last two, at a and b, are solved for.
    With W, S1, S2 the mass, first and second moments of the free part:
    a + b = (1 - S2 - (1-W) a^2) / (-S1 - (1-W) a), then q = (-S1 - (1-W) a)/(b - a).
    """
    while True:
        k = int(rng.integers(k_min, k_max + 1))
        free = []
        if k > 2:
            locs = rng.choice(np.arange(-20, 21), size=k - 2, replace=False)
            ws = rng.integers(1, 10, size=k - 2)
            scale = int(rng.integers(int(ws.sum()) + 2, 4 * int(ws.sum()) + 10))
            free = [(Fraction(int(t), 10), Fraction(int(w), scale)) for t, w in zip(locs, ws)]
        W = sum((w for _, w in free), Fraction(0))
        S1 = sum((w * t for t, w in free), Fraction(0))
        S2 = sum((w * t * t for t, w in free), Fraction(0))
        rest = 1 - W
        a = Fraction(int(rng.integers(-30, 30)), 10)
        den = -S1 - rest * a
        if den == 0:
            continue
        b = (1 - S2 - rest * a * a) / den - a
        if b == a:
            continue
        q = den / (b - a)
        p = rest - q
        if p <= 0 or q <= 0:
            continue
        locs = [t for t, _ in free] + [a, b]
        if len(set(locs)) != len(locs):
            continue
        mu = AtomicMeasure.from_atoms(free + [(a, p), (b, q)])
        return mu


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
