import numpy as np
import pytest

from rmtlab.ensembles import sample_gue, sample_ginibre
from rmtlab.matrixio import DenseMatrix
from rmtlab.rng import RngStream
from rmtlab.spectra import (
    EmpiricalMeasure,
    Region,
    counting,
    eigvals_general,
    eigvals_hermitian,
    eigvec_delocalization,
    empirical_measure,
    singular_values,
    spectral_moment,
    stieltjes,
    stieltjes_invert,
)


def _rng(i=0):
    return RngStream(88, i)


def test_hermitian_eigenvalues_sorted_real():
    m = sample_gue(100, _rng())
    spec = eigvals_hermitian(m)
    assert not np.iscomplexobj(spec.values)
    assert np.all(np.diff(spec.values) >= 0)
    assert len(spec) == 100


def test_hermitian_rejects_nonhermitian():
    with pytest.raises(ValueError):
        eigvals_hermitian(DenseMatrix(np.array([[0.0, 1.0], [0.0, 0.0]])))


def test_general_eigenvalues_match_trace():
    m = sample_ginibre(50, "complex", _rng(1))
    spec = eigvals_general(m)
    assert np.iscomplexobj(spec.values)
    assert np.isclose(np.sum(spec.values), np.trace(m.array), atol=1e-8)


def test_singular_values_nonnegative_sorted():
    m = sample_ginibre(40, "real", _rng(2))
    s = singular_values(m).values
    assert np.all(s >= 0)
    assert np.all(np.diff(s) >= 0)


def test_spectrum_scaled():
    m = sample_gue(20, _rng(3))
    spec = eigvals_hermitian(m)
    doubled = spec.scaled(2.0)
    assert np.allclose(doubled.values, 2.0 * spec.values)
    with pytest.raises(ValueError):
        spec.scaled(-1.0)


def test_empirical_measure_weights():
    m = sample_gue(30, _rng(4))
    mu = empirical_measure(eigvals_hermitian(m))
    assert mu.n == 30
    assert mu.weight == pytest.approx(1 / 30)
    assert not mu.is_complex


def test_empirical_measure_extra_scale():
    m = sample_gue(30, _rng(5))
    spec = eigvals_hermitian(m)
    mu = empirical_measure(spec)
    mu2 = empirical_measure(spec, extra_scale=0.5)
    assert np.allclose(mu2.support, 0.5 * mu.support)


def test_spectral_moment_matches_power_mean():
    mu = EmpiricalMeasure(np.array([1.0, 2.0, 3.0]))
    assert spectral_moment(mu, 2) == pytest.approx((1 + 4 + 9) / 3)
    zmu = EmpiricalMeasure(np.array([1j, -1j]))
    assert spectral_moment(zmu, 2) == pytest.approx(-1.0)


def test_counting_interval_and_disc():
    mu = EmpiricalMeasure(np.array([-1.0, 0.0, 0.5, 2.0]))
    assert counting(mu, Region.interval(-0.5, 1.0)) == 2
    zmu = EmpiricalMeasure(np.array([0.1 + 0.1j, 2.0 + 0j, -0.2j]))
    assert counting(zmu, Region.disc(0.0, 0.5)) == 2
    assert counting(zmu, Region.annulus(0.0, 1.0, 3.0)) == 1


def test_region_membership():
    disc = Region.disc(0, 1.0)
    assert disc.contains(0.5 + 0.5j)
    assert not disc.contains(1.5)
    ann = Region.annulus(0, 1.0, 2.0)
    assert ann.contains(1.5)
    assert not ann.contains(0.5)
    # halfplane(normal, offset) keeps Re(z·conj(normal)) <= offset
    half = Region.halfplane(1 + 0j, 0.0)
    assert half.contains(-1.0 + 5j)
    assert not half.contains(1.0)


def test_region_validation():
    with pytest.raises(ValueError):
        Region.interval(2.0, 1.0)
    with pytest.raises(ValueError):
        Region.disc(0, -1.0)
    with pytest.raises(ValueError):
        Region.annulus(0, 2.0, 1.0)


def test_stieltjes_of_point_mass():
    mu = EmpiricalMeasure(np.array([0.0]))
    # S(z) = 1/(0 - z) = -1/z
    assert stieltjes(mu, 2j) == pytest.approx(-1 / 2j)


def test_stieltjes_invert_recovers_density():
    # point masses at +-1 smoothed at eps: density near 1 approx
    # (1/pi) Im S(x + i eps)
    mu = EmpiricalMeasure(np.linspace(-1, 1, 20001))

    def S(z):
        return stieltjes(mu, z)

    val = stieltjes_invert(S, 0.0, 1e-3)
    assert val == pytest.approx(0.5, rel=0.01)  # uniform density on [-1, 1]


def test_delocalization_scales():
    # diagonal matrix: eigenvectors are coordinate vectors, sup-norm 1
    d = DenseMatrix(np.diag(np.arange(1.0, 11.0)))
    assert eigvec_delocalization(d) == pytest.approx(1.0)
    # GUE eigenvectors are delocalized: max entry ~ sqrt(log n / n),
    # far below the localized value 1 (≈ 0.22 at n = 300)
    m = sample_gue(300, _rng(6))
    assert eigvec_delocalization(m) < 0.35
