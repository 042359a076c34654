import numpy as np
import pytest

from boolclt import (
    AtomicMeasure,
    boolean_convolve,
    boolean_power,
    clt_normalize,
    eval_F,
    eval_F_mu_n,
    extract_representation,
    levy_distance,
    moment,
)
from boolclt.errors import HypothesisError, InvalidMeasureError

from conftest import random_rational_measure, random_standardized_rational


def _same(a, b, tol=1e-12):
    assert len(a) == len(b)
    np.testing.assert_allclose(a.t, b.t, atol=tol, rtol=0)
    np.testing.assert_allclose(a.w, b.w, atol=tol, rtol=0)


def test_identity(rng):
    d0 = AtomicMeasure.point_mass(0)
    for _ in range(20):
        mu = random_rational_measure(rng)
        _same(boolean_convolve(mu, d0), mu)


def test_bernoulli_square(bern):
    r = np.sqrt(2)
    _same(boolean_convolve(bern, bern), AtomicMeasure.from_atoms([(-r, 0.5), (r, 0.5)]), 1e-15)


def test_power_examples(bern, mu2):
    assert boolean_power(mu2, 1) == mu2
    p = boolean_power(bern, 4)
    assert p.locations == (-2.0, 2.0) and p.weights == (0.5, 0.5)


def test_commutative_and_square(rng):
    for _ in range(30):
        mu, nu = random_rational_measure(rng), random_rational_measure(rng)
        _same(boolean_convolve(mu, nu), boolean_convolve(nu, mu))
        _same(boolean_power(mu, 2), boolean_convolve(mu, mu))


def test_power_is_repeated_convolution(rng):
    for _ in range(10):
        mu = random_rational_measure(rng, k_max=4)
        acc = mu
        for n in range(2, 5):
            acc = boolean_convolve(acc, mu)
            _same(boolean_power(mu, n), acc, 1e-10)


def test_atom_count_and_moments(rng):
    for _ in range(30):
        mu = random_standardized_rational(rng)
        for n in (2, 7, 64, 1000):
            p = boolean_power(mu, n)
            assert len(p) == len(mu)
            assert float(p.total_mass()) == pytest.approx(1, abs=1e-12)
            assert float(moment(p, 1)) == pytest.approx(0, abs=1e-10 * n)
            assert float(moment(p, 2)) == pytest.approx(n, rel=1e-10)


def test_power_rejects():
    with pytest.raises(ValueError):
        boolean_power(AtomicMeasure.point_mass(0), 0)
    with pytest.raises(InvalidMeasureError):
        boolean_power(AtomicMeasure.from_atoms([(0, 0.5)]), 2)


def test_clt_normalize_fixed_point(bern, mu2):
    for k in range(1, 11):
        b = clt_normalize(bern, 2**k)
        assert b.locations == (-1.0, 1.0) and b.weights == (0.5, 0.5)
    assert clt_normalize(mu2, 1) == mu2
    m4 = clt_normalize(mu2, 4)
    assert len(m4) == 2
    assert float(moment(m4, 1)) == pytest.approx(0, abs=1e-12)
    assert float(moment(m4, 2)) == pytest.approx(1, abs=1e-12)
    assert levy_distance(m4, bern) > 0


def test_clt_normalize_rejects_unstandardized():
    with pytest.raises(HypothesisError):
        clt_normalize(AtomicMeasure.from_atoms([(-1, 0.5), (3, 0.5)]), 4)


def test_eval_F_mu_n_examples(bern, mu2):
    r = extract_representation(bern)
    z = np.array([0.3 + 0.2j, -2 + 1j, 1j])
    for n in (1, 5, 1024):
        np.testing.assert_allclose(eval_F_mu_n(r, n, z), z - 1 / z, rtol=1e-15)
    r2 = extract_representation(mu2)
    W = 1j - 0.15
    assert eval_F_mu_n(r2, 100, 1j) == pytest.approx(1j - 1 / W, rel=1e-15)


def test_dual_path(rng):
    for _ in range(50):
        mu = random_standardized_rational(rng)
        n = int(rng.integers(1, 65))
        z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
        a = eval_F_mu_n(extract_representation(mu), n, z)
        b = eval_F(clt_normalize(mu, n), z)
        assert abs(a - b) <= 1e-10 * abs(b)


def test_levy_eventually_decreasing(bern, mu2, mu3):
    for mu in (mu2, mu3):
        d = [levy_distance(clt_normalize(mu, 2**k), bern) for k in range(6, 17)]
        assert all(x > y for x, y in zip(d, d[1:]))
