import numpy as np
import pytest

from rmtlab.entries import EntryDistribution
from rmtlab.rng import RngStream


def test_gaussian_moments():
    d = EntryDistribution.gaussian(0.0, 2.0)
    assert d.mean == 0.0
    assert d.variance == 2.0
    assert not d.is_complex
    assert d.moment(1) == 0.0
    assert d.moment(2) == pytest.approx(2.0)
    assert d.moment(4) == pytest.approx(3.0 * 4.0)  # E X^4 = 3 sigma^4


def test_rademacher_moments():
    d = EntryDistribution.rademacher()
    assert d.mean == 0.0
    assert d.variance == 1.0
    assert d.moment(2) == 1.0
    assert d.moment(3) == 0.0
    assert d.moment(4) == 1.0


def test_complex_gaussian_unit_variance():
    d = EntryDistribution.complex_gaussian()
    assert d.is_complex
    assert d.variance == pytest.approx(1.0)  # E|z|^2 = 2 * 0.5
    g = RngStream(3, 0).generator()
    z = d.sample(g, 200_000)
    assert np.iscomplexobj(z)
    assert abs(np.mean(np.abs(z) ** 2) - 1.0) < 0.01
    assert abs(np.mean(z.real)) < 0.01


def test_uniform_centered():
    d = EntryDistribution.uniform_centered(np.sqrt(3.0))
    assert d.variance == pytest.approx(1.0)  # var = h^2/3
    g = RngStream(4, 0).generator()
    x = d.sample(g, 100_000)
    assert np.max(np.abs(x)) <= np.sqrt(3.0) + 1e-12
    assert abs(np.var(x) - 1.0) < 0.02


def test_two_point():
    d = EntryDistribution.two_point((0.0, 2.0), (0.75, 0.25))
    assert d.mean == pytest.approx(0.5)
    assert d.variance == pytest.approx(0.75)
    g = RngStream(5, 0).generator()
    x = d.sample(g, 50_000)
    assert set(np.unique(x)) <= {0.0, 2.0}


def test_two_point_validation():
    with pytest.raises(ValueError):
        EntryDistribution.two_point((0.0, 1.0), (0.5, 0.6))  # probs not normalized
    with pytest.raises(ValueError):
        EntryDistribution.two_point((0.0, 1.0), (-0.1, 1.1))


def test_custom_moments_table():
    # symmetric three-point law with unit variance
    d = EntryDistribution.custom_moments_table(
        (-np.sqrt(2), 0.0, np.sqrt(2)), (0.25, 0.5, 0.25))
    assert d.mean == pytest.approx(0.0)
    assert d.variance == pytest.approx(1.0)
    assert d.moment(4) == pytest.approx(2.0)


def test_sampling_matches_declared_moments():
    d = EntryDistribution.gaussian(1.0, 4.0)
    g = RngStream(6, 0).generator()
    x = d.sample(g, 200_000)
    assert abs(np.mean(x) - 1.0) < 0.02
    assert abs(np.var(x) - 4.0) < 0.08
