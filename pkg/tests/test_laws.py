import math

import numpy as np
import pytest
import scipy.integrate

from rmtlab import laws
from rmtlab.spectra import Region

# Tracy-Widom F2 reference values, computed independently with 50-digit
# arithmetic from the Hastings-McLeod integral representation (two
# disjoint implementations agreeing to 20 digits), frozen here.
F2_REFERENCE = {
    -4.0: 0.0035445535955092003,
    -3.5: 0.020967691492766543,
    -3.0: 0.080319552939334548,
    -2.5: 0.21235142581959011,
    -2.0: 0.41322414250512255,
    -1.5: 0.63138087642072605,
    -1.0: 0.80721424199928529,
    -0.5: 0.9160651890092872,
    0.0: 0.96937282835526267,
    1.0: 0.99750543814938925,
    2.0: 0.99988755369830917,
}
F2_DENSITY_REFERENCE = {
    -3.0: 0.184246683828359,
    -2.0: 0.441381801861778,
    -1.0: 0.285550938236154,
    0.0: 0.0669753071327793,
}
TW_MEDIAN = -1.80491240893658


ALL_1D_LAWS = [
    laws.semicircle(),
    laws.quarter_circle(),
    laws.marchenko_pastur(0.25),
    laws.marchenko_pastur(1.0),
    laws.marchenko_pastur(2.0),
    laws.gumbel_law(),
    laws.tracy_widom_law(),
]


@pytest.mark.parametrize("law", ALL_1D_LAWS, ids=lambda l: l.name)
def test_normalization_within_1e8(law):
    lo, hi = law.support
    mass, _ = scipy.integrate.quad(lambda x: float(np.asarray(law.density(x)).ravel()[0]), lo, hi,
                                   limit=400)
    atom_mass = law.atom[1] if law.atom is not None else 0.0
    assert abs(mass + atom_mass - 1.0) < 1e-8


@pytest.mark.parametrize("law", ALL_1D_LAWS, ids=lambda l: l.name)
def test_cdf_monotone_and_limits(law):
    lo, hi = law.support
    xs = np.linspace(lo, hi, 801)
    cdf = np.asarray(law.cdf(xs))
    assert np.all(np.diff(cdf) >= -1e-12)
    assert law.cdf(lo - 1.0) == pytest.approx(0.0, abs=1e-12)
    assert law.cdf(hi + 1.0) == pytest.approx(1.0, abs=1e-10)


def test_semicircle_moments():
    law = laws.semicircle()
    m2, _ = scipy.integrate.quad(lambda x: x * x * float(np.asarray(law.density(x)).ravel()[0]), -2, 2)
    m4, _ = scipy.integrate.quad(lambda x: x**4 * float(np.asarray(law.density(x)).ravel()[0]), -2, 2)
    assert m2 == pytest.approx(1.0, abs=1e-10)  # Catalan C_1
    assert m4 == pytest.approx(2.0, abs=1e-10)  # Catalan C_2


def test_quarter_circle_mean():
    law = laws.quarter_circle()
    mean, _ = scipy.integrate.quad(lambda x: x * float(np.asarray(law.density(x)).ravel()[0]), 0, 2)
    assert mean == pytest.approx(8 / (3 * math.pi), abs=1e-10)


def test_mp_support_edges():
    # support holds the continuous bulk; the alpha > 1 atom at 0 is separate
    for alpha in (0.25, 1.0, 2.0):
        law = laws.marchenko_pastur(alpha)
        lo, hi = law.support
        assert hi == pytest.approx((1 + math.sqrt(alpha)) ** 2, abs=1e-12)
        assert lo == pytest.approx((1 - math.sqrt(alpha)) ** 2, abs=1e-12)


def test_mp_atom_only_above_one():
    assert laws.marchenko_pastur(0.5).atom is None
    assert laws.marchenko_pastur(1.0).atom is None
    atom = laws.marchenko_pastur(2.0).atom
    assert atom is not None
    loc, mass = atom
    assert loc == 0.0
    assert mass == pytest.approx(1 - 1 / 2.0)  # 1 - 1/alpha


def test_mp_alpha_validation():
    with pytest.raises(ValueError):
        laws.marchenko_pastur(0.0)
    with pytest.raises(ValueError):
        laws.marchenko_pastur(-1.0)


def test_mp_quantile_returns_atom_exactly():
    law = laws.marchenko_pastur(2.0)
    ps = np.array([0.1, 0.3, 0.499999])
    qs = np.asarray(law.quantile(ps))
    assert np.all(qs == 0.0)
    q_cont = float(law.quantile(np.array([0.75]))[0])
    assert q_cont > 0.0
    assert float(law.cdf(q_cont)) == pytest.approx(0.75, abs=1e-8)


def test_quantile_cdf_round_trip_continuous():
    law = laws.semicircle()
    ps = np.linspace(0.01, 0.99, 25)
    qs = np.asarray(law.quantile(ps))
    assert np.allclose(np.asarray(law.cdf(qs)), ps, atol=1e-8)


def test_gumbel_cdf_value():
    assert laws.gumbel_cdf(0.0) == pytest.approx(math.exp(-1.0), abs=1e-14)


def test_rider_gamma_value():
    # log(1000/(2 pi)) - 2 log log 1000
    assert laws.rider_gamma(1000) == pytest.approx(1.2045887, abs=1e-6)
    with pytest.raises(ValueError):
        laws.rider_gamma(2)


def test_rider_Y_centering_zero():
    n = 700
    g = laws.rider_gamma(n)
    rho = math.sqrt(n) * (1.0 + math.sqrt(g / (4 * n)))
    assert laws.rider_Y(rho, n) == pytest.approx(0.0, abs=1e-10)
    with pytest.raises(ValueError):
        laws.rider_Y(-1.0, n)


def test_rider_correction_tends_to_identity():
    loc5, scale5 = laws.rider_correction(500)
    loc5k, scale5k = laws.rider_correction(5000)
    # frozen calibration values at n=500 (exact radius law quantiles)
    assert loc5 == pytest.approx(0.41297, abs=2e-3)
    assert scale5 == pytest.approx(0.38350, abs=2e-3)
    # the correction moves toward (0, 1) as n grows
    assert abs(scale5k - 1.0) < abs(scale5 - 1.0)


def test_tracy_widom_reference_values():
    for x, ref in F2_REFERENCE.items():
        assert laws.tracy_widom_f2(x) == pytest.approx(ref, abs=1e-10), f"F2({x})"


def test_tracy_widom_density_reference_values():
    law = laws.tracy_widom_law()
    for x, ref in F2_DENSITY_REFERENCE.items():
        val = float(np.asarray(law.density(x)).ravel()[0])
        assert val == pytest.approx(ref, abs=1e-9), f"f2({x})"


def test_tracy_widom_median():
    law = laws.tracy_widom_law()
    med = float(law.quantile(np.array([0.5]))[0])
    assert med == pytest.approx(TW_MEDIAN, abs=1e-9)


def test_tracy_widom_structural():
    xs = np.linspace(*laws.TW_DOMAIN, 1024)
    cdf = np.asarray(laws.tracy_widom_f2(xs))
    assert np.all(np.diff(cdf) >= 0.0)
    assert laws.tracy_widom_f2(8.0) >= 1 - 1e-8
    assert laws.tracy_widom_f2(-10.0) < 1e-12


def test_tracy_widom_matches_airy_at_start():
    eng = laws._tw_engine()
    x0 = float(eng.solution.grid[0])
    q0 = float(eng.solution.q_values[0])
    assert q0 == pytest.approx(laws.airy(x0), rel=1e-6)


def test_uniform_disc_masses():
    disc = laws.uniform_disc()
    assert disc.region_mass(Region.disc(0, 0.5)) == pytest.approx(0.25, abs=1e-12)
    assert disc.region_mass(Region.disc(0, 1.0)) == pytest.approx(1.0, abs=1e-12)
    assert disc.region_mass(Region.annulus(0, 0.5, 1.0)) == pytest.approx(0.75, abs=1e-12)
    assert disc.membership(0.3 + 0.4j)
    assert not disc.membership(0.8 + 0.7j)


def test_ellipse_membership_examples():
    ell = laws.uniform_ellipse(0.5)
    assert ell.membership(1.4 + 0j)  # 1.96/2.25 <= 1
    assert not ell.membership(1.6 + 0j)
    with pytest.raises(ValueError):
        laws.uniform_ellipse(1.0)


def test_ellipse_rho_zero_is_disc():
    ell = laws.uniform_ellipse(0.0)
    disc = laws.uniform_disc()
    rng = np.random.default_rng(0)
    z = rng.uniform(-1.2, 1.2, 10_000) + 1j * rng.uniform(-1.2, 1.2, 10_000)
    assert all(ell.membership(w) == disc.membership(w) for w in z)


def test_ellipse_axes():
    assert laws.ellipse_axes(0.5) == (1.5, 0.5)
    assert laws.ellipse_axes(-0.5) == (0.5, 1.5)


def test_single_ring_radii_closed_forms():
    # constant profile: a = b = c
    rr = laws.single_ring_radii([2.0] * 16)
    assert rr.a == pytest.approx(2.0, abs=1e-10)
    assert rr.b == pytest.approx(2.0, abs=1e-10)
    # two-point {1, 3} half-half: b = sqrt(5), a = 3/sqrt(5)
    rr2 = laws.single_ring_radii([1.0] * 8 + [3.0] * 8)
    assert rr2.b == pytest.approx(math.sqrt(5.0), abs=1e-10)
    assert rr2.a == pytest.approx(3.0 / math.sqrt(5.0), abs=1e-10)
    assert rr2.a <= rr2.b


def test_single_ring_radii_linear_profile_limit():
    n = 200_000
    sig = 1.0 + 5.0 * np.arange(1, n + 1) / n
    rr = laws.single_ring_radii(sig)
    # continuum limit: nu uniform on [1, 6] gives a = sqrt(6), b = sqrt(43/3)
    assert rr.a == pytest.approx(math.sqrt(6.0), rel=1e-4)
    assert rr.b == pytest.approx(math.sqrt(43.0 / 3.0), rel=1e-4)


def test_law_names():
    assert laws.semicircle().name.startswith("semicircle")
    assert "marchenko_pastur" in laws.marchenko_pastur(1.0).name
