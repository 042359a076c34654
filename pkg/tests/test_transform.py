from fractions import Fraction

import numpy as np
import pytest

from boolclt import (
    AtomicMeasure,
    Polynomial,
    RationalFn,
    bound_prop2,
    bound_trivial,
    eval_F,
    eval_G,
    extract_representation,
    moment,
    rational_G,
    recover_measure,
)
from boolclt.errors import (
    HypothesisError,
    InvalidPointError,
    InvalidTransformError,
)
from boolclt.transform import reconstruct_F

from conftest import random_rational_measure, random_standardized_rational


def _q(*c):
    return Polynomial([Fraction(x) for x in c])


# -- polynomial plumbing ---------------------------------------------------


def test_polynomial_arithmetic():
    p = _q(-1, 0, 1)  # z^2 - 1
    q = _q(1, 1)
    assert p * q == _q(-1, -1, 1, 1)
    quot, rem = divmod(p, q)
    assert quot == _q(-1, 1) and rem.is_zero
    assert (p + q) - q == p
    assert p.deriv() == _q(0, 2)
    assert p.exact(Fraction(1, 2)) == Fraction(-3, 4)
    assert Polynomial.from_roots([1, -1]) == p


def test_real_roots_exact_rounding():
    p = Polynomial.from_roots([Fraction(-7, 3), Fraction(1, 10), Fraction(5, 2)])
    assert p.real_roots() == [float(Fraction(-7, 3)), 0.1, 2.5]
    s = Polynomial([-2, 0, 1])
    assert s.real_roots() == [-2**0.5, 2**0.5]


def test_real_roots_rejects_complex():
    with pytest.raises(InvalidTransformError):
        Polynomial([1, 0, 1]).real_roots()


def test_rational_reduces_common_factor():
    r = RationalFn(_q(-1, 0, 1), _q(-1, 1))  # (z^2-1)/(z-1)
    assert r.den == _q(1) and r.num == _q(1, 1)


def test_laurent_moments(mu2):
    G = rational_G(mu2)
    assert G.laurent(5) == [moment(mu2, k) for k in range(5)]


def test_rational_json():
    import json

    d = json.loads(RationalFn(_q(1), _q(0, 1)).to_json())
    assert d == {"num": [1.0], "den": [0.0, 1.0]}


# -- transforms --------------------------------------------------------------


def test_rational_G_examples(bern, mu2):
    G = rational_G(bern)
    assert G.num == _q(0, 1) and G.den == _q(-1, 0, 1)
    assert rational_G(AtomicMeasure.point_mass(0)) == RationalFn(_q(1), _q(0, 1))
    G2 = rational_G(mu2)
    assert G2.num == _q(Fraction(-3, 2), 1)
    assert G2.den == _q(-1, Fraction(-3, 2), 1)
    assert rational_G(AtomicMeasure.zero()).is_zero


def test_rational_G_degrees(rng):
    for _ in range(20):
        mu = random_rational_measure(rng)
        G = rational_G(mu)
        assert G.den.degree == len(mu)
        assert G.num.degree == len(mu) - 1


def test_eval_examples(bern):
    assert eval_G(bern, 1j) == pytest.approx(-0.5j, abs=1e-15)
    x, y = 0.3, 0.7
    assert eval_G(AtomicMeasure.point_mass(0), x + 1j * y) == pytest.approx((x - 1j * y) / (x * x + y * y))
    assert eval_G(AtomicMeasure.zero(), 1 + 1j) == 0
    assert eval_F(bern, 2j) == pytest.approx(2.5j, abs=1e-15)
    z = 0.4 + 0.2j
    assert eval_F(AtomicMeasure.point_mass(0), z) == pytest.approx(z)


def test_eval_rejects_lower_half_plane(bern):
    with pytest.raises(InvalidPointError):
        eval_G(bern, 1 - 1j)
    with pytest.raises(InvalidPointError):
        eval_G(bern, 2.0 + 0j)


def test_rational_eval_matches_direct_sum(rng):
    for _ in range(50):
        mu = random_rational_measure(rng)
        z = rng.uniform(-5, 5, 30) + 1j * rng.uniform(1e-3, 5, 30)
        z = np.concatenate([z, [1e6 + 1j, 3 + 1e5j]])
        direct = eval_G(mu, z)
        rat = eval_G(rational_G(mu), z)
        assert np.max(np.abs(rat - direct) / np.abs(direct)) < 1e-12


def test_nevanlinna(rng):
    for _ in range(1000):
        mu = random_rational_measure(rng)
        z = complex(rng.uniform(-5, 5), rng.uniform(1e-3, 3))
        g = eval_G(mu, z)
        assert g.imag <= 0
        assert abs(g) <= float(mu.total_mass()) / z.imag * (1 + 1e-12)
        assert eval_F(mu, z).imag >= z.imag * (1 - 1e-12)


def test_bounds_examples(bern):
    z = 2 + 0.1j
    assert bound_prop2(bern, z, 2) == pytest.approx(11.0)
    assert abs(eval_G(bern, z)) == pytest.approx(0.664, abs=5e-4)
    mu = AtomicMeasure.from_atoms([(-0.3, 0.6), (1.1, 0.4)])
    assert bound_prop2(mu, z, 0) == pytest.approx(2 / 2 + 1 / 0.1)
    d0 = AtomicMeasure.point_mass(0)
    assert bound_trivial(d0, 0.5 + 1j) == 1
    with pytest.raises(ValueError):
        bound_prop2(bern, 0.0 + 1j, 2)


def test_moment_bound_negative_x(rng):
    # the bound is symmetric in x; check it also holds left of the origin
    for _ in range(200):
        mu = random_rational_measure(rng)
        z = complex(-rng.uniform(1e-3, 10), rng.uniform(1e-3, 3))
        for i in range(5):
            assert abs(eval_G(mu, z)) < bound_prop2(mu, z, i)


def test_recover_examples(bern):
    F = RationalFn(_q(-1, 0, 1), _q(0, 1))
    assert recover_measure(F) == AtomicMeasure((-1.0, 1.0), (0.5, 0.5))
    F = RationalFn(Polynomial([-2, -1.5, 1]), Polynomial([-1.5, 1]))
    mu = recover_measure(F)
    r = np.sqrt(10.25)
    np.testing.assert_allclose(mu.t, [(1.5 - r) / 2, (1.5 + r) / 2], rtol=1e-15)
    np.testing.assert_allclose(mu.t, [-0.85078, 2.35078], atol=1e-5)
    assert mu.total_mass() == pytest.approx(1.0, abs=1e-15)


def test_recover_round_trip(rng):
    for _ in range(50):
        mu = random_rational_measure(rng)
        back = recover_measure(rational_G(mu).reciprocal())
        np.testing.assert_allclose(back.t, mu.t, atol=1e-12, rtol=0)
        np.testing.assert_allclose(back.w, mu.w, atol=1e-12, rtol=0)


def test_recover_rejects_non_measures():
    with pytest.raises(InvalidTransformError):
        recover_measure(RationalFn(_q(1, 0, 1), _q(0, 1)))  # zeros at +-i
    with pytest.raises(InvalidTransformError):
        recover_measure(RationalFn(_q(1, 0, -1), _q(0, 1)))  # negative residues
    with pytest.raises(InvalidTransformError):
        recover_measure(RationalFn(_q(1, 1), _q(0, 1)))  # wrong degree


def test_representation_examples(bern, mu2, mu3):
    r = extract_representation(mu2)
    assert r.alpha == Fraction(3, 2) and r.omega.is_zero and r.K == 0
    assert r.nu == AtomicMeasure.from_atoms([(1.5, 1.0)])

    r = extract_representation(bern)
    assert r.alpha == 0 and r.omega.is_zero and r.K == 0
    assert r.nu.locations == (0.0,)

    r = extract_representation(mu3)
    assert r.alpha == pytest.approx(0, abs=1e-15)
    assert len(r.omega) == 1 and r.omega.t[0] == pytest.approx(0, abs=1e-15)
    assert r.omega.w[0] == pytest.approx(1, abs=1e-14)
    assert r.K == pytest.approx(1, abs=1e-14)
    np.testing.assert_allclose(r.nu.t, [-1, 1], atol=1e-15)


def test_representation_rejects():
    with pytest.raises(HypothesisError):
        extract_representation(AtomicMeasure.from_atoms([(-1, 0.5), (2, 0.5)]))
    with pytest.raises(HypothesisError):
        extract_representation(AtomicMeasure.point_mass(0))


def test_representation_degree_bookkeeping(rng):
    for k in range(2, 7):
        for _ in range(5):
            mu = random_standardized_rational(rng, k, k)
            r = extract_representation(mu)
            assert len(mu) == k
            assert len(r.nu) == k - 1
            assert len(r.omega) == k - 2


def test_representation_moment_identities_exact(rng):
    for _ in range(30):
        mu = random_standardized_rational(rng)
        r = extract_representation(mu)
        m3, m4 = moment(mu, 3), moment(mu, 4)
        assert r.alpha == m3
        assert r.omega_mass == m4 - m3**2 - 1
        assert isinstance(r.K, Fraction)
        z = rng.uniform(-3, 3, 20) + 1j * rng.uniform(0.01, 3, 20)
        np.testing.assert_allclose(reconstruct_F(r, z), eval_F(mu, z), rtol=1e-10)


def test_representation_rational_but_not_exactly_standardized():
    # decimals parse to exact rationals whose variance is 1 only to ~1e-17
    text = '{"atoms":[{"t":-1.4142135623730951,"w":0.25},{"t":0,"w":0.5},{"t":1.4142135623730951,"w":0.25}]}'
    mu = AtomicMeasure.from_json(text)
    assert mu.is_exact and moment(mu, 2) != 1
    r = extract_representation(mu)
    assert float(r.K) == pytest.approx(1, abs=1e-12)
    assert float(r.alpha) == 0
