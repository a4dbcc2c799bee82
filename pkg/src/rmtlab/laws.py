"""Reference limiting distributions.

One-dimensional laws (semicircle, Marčenko–Pastur, quarter-circle,
Gumbel, Tracy–Widom F₂) are exposed as :class:`Law1D` objects carrying
a density, a CDF, and an optional atom; two-dimensional membership laws
(uniform disc, uniform ellipse) as :class:`Law2D` objects carrying a
membership predicate and a region-mass functional.  Every law is
validated at construction: atom mass plus the quadrature of the density
must equal 1 within 1e-8.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.integrate
from scipy.interpolate import PchipInterpolator
from scipy.stats import qmc

from ._kernels import clenshaw_batch
from .airy import airy, airy_pair
from .ensembles import SingularProfile
from .painleve import PainleveSolution, cheb_coeffs, painleve_hm
from .spectra import Region

__all__ = [
    "Law1D",
    "Law2D",
    "RingRadii",
    "semicircle",
    "marchenko_pastur",
    "quarter_circle",
    "uniform_disc",
    "uniform_ellipse",
    "ellipse_axes",
    "gumbel_cdf",
    "gumbel_law",
    "rider_gamma",
    "rider_Y",
    "rider_correction",
    "airy",
    "painleve_hm",
    "tracy_widom_f2",
    "tracy_widom_law",
    "single_ring_radii",
    "ginibre_density_smalln",
    "weyl_density_u2",
]

_NORMALIZATION_TOL = 1e-8


# ----------------------------------------------------------------------
# law containers
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Law1D:
    """A 1-D limiting law: absolutely continuous part plus optional atom."""

    name: str
    support: Tuple[float, float]
    density: Callable[[np.ndarray], np.ndarray]
    cdf: Callable[[np.ndarray], np.ndarray]
    atom: Optional[Tuple[float, float]] = None  # (location, mass)

    def __post_init__(self) -> None:
        a, b = self.support
        if not a < b and self.atom is None:
            raise ValueError("support must be a nondegenerate interval")
        mass = self.atom[1] if self.atom else 0.0
        if a < b:
            integral, _ = scipy.integrate.quad(
                lambda x: float(np.asarray(self.density(x)).ravel()[0]), a, b,
                epsabs=1e-11, epsrel=1e-11, limit=400,
            )
        else:
            integral = 0.0
        if abs(mass + integral - 1.0) > _NORMALIZATION_TOL:
            raise ValueError(
                f"law {self.name!r} fails normalization: atom {mass} + "
                f"integral {integral} != 1"
            )

    @classmethod
    def point_mass(cls, location: float) -> "Law1D":
        """Degenerate law δ_location (atom of mass 1, no continuous part)."""
        loc = float(location)

        def density(x):
            return np.zeros_like(np.asarray(x, dtype=np.float64))

        def cdf(x):
            return (np.asarray(x, dtype=np.float64) >= loc).astype(np.float64)

        return cls(f"point_mass({loc})", (loc, loc), density, cdf, atom=(loc, 1.0))

    def cdf_left(self, x) -> np.ndarray:
        """Left limit F(x⁻) (differs from cdf(x) only at the atom)."""
        val = np.asarray(self.cdf(x), dtype=np.float64)
        if self.atom is not None:
            loc, mass = self.atom
            val = val - mass * (np.asarray(x) == loc)
        return val

    def moment(self, k: int) -> float:
        """k-th raw moment by adaptive quadrature (plus atom contribution)."""
        a, b = self.support
        total = 0.0
        if self.atom is not None:
            loc, mass = self.atom
            total += mass * loc**k
        if a < b:
            val, _ = scipy.integrate.quad(
                lambda x: x**k * float(np.asarray(self.density(x))), a, b,
                epsabs=1e-11, epsrel=1e-11, limit=400,
            )
            total += val
        return total

    def quantile(self, p) -> np.ndarray:
        """Smallest x with cdf(x) ≥ p, by bisection on the support.

        Probabilities that land inside the atom's jump return the atom
        location exactly (bisection alone would only approach it).
        """
        ps = np.atleast_1d(np.asarray(p, dtype=np.float64))
        if np.any((ps <= 0) | (ps >= 1)):
            raise ValueError("quantile requires 0 < p < 1")
        a, b = self.support
        lo0, hi0 = a - 1.0, b + 1.0
        if self.atom is not None:
            lo0 = min(lo0, self.atom[0] - 1.0)
            hi0 = max(hi0, self.atom[0] + 1.0)
        lo = np.full(ps.shape, lo0)
        hi = np.full(ps.shape, hi0)
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            below = np.asarray(self.cdf(mid)) < ps
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        out = 0.5 * (lo + hi)
        if self.atom is not None:
            loc = self.atom[0]
            probe = np.array([loc])
            f_left = float(np.asarray(self.cdf_left(probe))[0])
            f_right = float(np.asarray(self.cdf(probe))[0])
            out = np.where((ps > f_left) & (ps <= f_right), loc, out)
        return out if np.ndim(p) else float(out[0])


@dataclass(frozen=True)
class Law2D:
    """A planar limiting law: membership predicate plus region-mass functional."""

    name: str
    membership: Callable[[np.ndarray], np.ndarray]
    region_mass: Callable[[Region], float]

    def __post_init__(self) -> None:
        total = self.region_mass(Region.disc(0.0, 1e9))
        if abs(total - 1.0) > _NORMALIZATION_TOL:
            raise ValueError(f"law {self.name!r} fails normalization: full mass {total}")


@dataclass(frozen=True)
class RingRadii:
    """Inner/outer radii of the single-ring support annulus."""

    a: float
    b: float
    degenerate: bool = False  # ν had mass at 0, forcing a := 0

    def __post_init__(self) -> None:
        if self.a > self.b + 1e-12:
            raise ValueError("ring radii must satisfy a ≤ b")


# ----------------------------------------------------------------------
# closed-form 1-D laws
# ----------------------------------------------------------------------
def semicircle(radius_mode: str = "wigner_2") -> Law1D:
    """Semicircle law: density √(4−x²)/(2π) on [−2,2] (``wigner_2``) or
    (2/π)√(1−x²) on [−1,1] (``bai_yin_1``)."""
    if radius_mode == "wigner_2":
        r = 2.0

        def density(x):
            x = np.asarray(x, dtype=np.float64)
            inside = np.abs(x) <= 2.0
            return np.where(inside, np.sqrt(np.maximum(4.0 - x * x, 0.0)) / (2 * np.pi), 0.0)

        def cdf(x):
            x = np.clip(np.asarray(x, dtype=np.float64), -2.0, 2.0)
            return 0.5 + x * np.sqrt(4.0 - x * x) / (4 * np.pi) + np.arcsin(x / 2.0) / np.pi

    elif radius_mode == "bai_yin_1":
        r = 1.0

        def density(x):
            x = np.asarray(x, dtype=np.float64)
            inside = np.abs(x) <= 1.0
            return np.where(inside, 2.0 / np.pi * np.sqrt(np.maximum(1.0 - x * x, 0.0)), 0.0)

        def cdf(x):
            x = np.clip(np.asarray(x, dtype=np.float64), -1.0, 1.0)
            return 0.5 + (x * np.sqrt(1.0 - x * x) + np.arcsin(x)) / np.pi

    else:
        raise ValueError(f"unknown radius_mode {radius_mode!r}")
    return Law1D(f"semicircle[{radius_mode}]", (-r, r), density, cdf)


def quarter_circle() -> Law1D:
    """Quarter-circle law: density (1/π)√(4−x²) on [0,2]."""

    def density(x):
        x = np.asarray(x, dtype=np.float64)
        inside = (x >= 0.0) & (x <= 2.0)
        return np.where(inside, np.sqrt(np.maximum(4.0 - x * x, 0.0)) / np.pi, 0.0)

    def cdf(x):
        x = np.clip(np.asarray(x, dtype=np.float64), 0.0, 2.0)
        return (x * np.sqrt(4.0 - x * x) / 2.0 + 2.0 * np.arcsin(x / 2.0)) / np.pi

    return Law1D("quarter_circle", (0.0, 2.0), density, cdf)


def marchenko_pastur(alpha: float) -> Law1D:
    """Marčenko–Pastur law μ_α on [(1−√α)², (1+√α)²] with an atom
    (1−1/α)₊ at 0 when α > 1; the CDF is cached on a 2048-point grid
    with monotone (PCHIP) interpolation."""
    if alpha <= 0:
        raise ValueError(f"invalid parameter: alpha must be positive, got {alpha}")
    sqrt_a = math.sqrt(alpha)
    a = (1.0 - sqrt_a) ** 2
    b = (1.0 + sqrt_a) ** 2
    atom_mass = max(0.0, 1.0 - 1.0 / alpha)
    atom = (0.0, atom_mass) if atom_mass > 0 else None

    def density(x):
        x = np.asarray(x, dtype=np.float64)
        inside = (x > a) & (x < b)
        xs = np.where(inside, x, (a + b) / 2.0)
        val = np.sqrt(np.maximum((b - xs) * (xs - a), 0.0)) / (2 * np.pi * alpha * xs)
        return np.where(inside, val, 0.0)

    # cumulative of the continuous part on an edge-clustered grid
    u = np.linspace(0.0, 1.0, 2048)
    grid = a + (b - a) * (3.0 * u * u - 2.0 * u**3)  # clusters at both edges
    pieces = [
        scipy.integrate.quad(lambda x: float(density(x)), grid[i], grid[i + 1],
                             epsabs=1e-12, epsrel=1e-12)[0]
        for i in range(grid.size - 1)
    ]
    cum = np.concatenate([[0.0], np.cumsum(pieces)])
    cont_mass = min(1.0, 1.0 / alpha)
    cum *= cont_mass / cum[-1]  # remove accumulated quadrature noise
    interp = PchipInterpolator(grid, cum, extrapolate=False)

    def cdf(x):
        x = np.asarray(x, dtype=np.float64)
        cont = np.where(x <= a, 0.0, np.where(x >= b, cont_mass,
                                              interp(np.clip(x, a, b))))
        return atom_mass * (x >= 0.0) + cont

    return Law1D(f"marchenko_pastur[{alpha}]", (a, b), density, cdf, atom=atom)


def gumbel_cdf(x):
    """Standard Gumbel distribution function F(x) = exp(−e^{−x})."""
    return np.exp(-np.exp(-np.asarray(x, dtype=np.float64)))


def gumbel_law() -> Law1D:
    """Gumbel law as a Law1D (support truncated to [−10, 30]; the mass
    outside is below 1e-13)."""

    def density(x):
        x = np.asarray(x, dtype=np.float64)
        return np.exp(-x - np.exp(-x))

    return Law1D("gumbel", (-10.0, 30.0), density, gumbel_cdf)


def rider_gamma(n: int) -> float:
    """Scaling constant γₙ = log(n/2π) − 2·log(log n) of the spectral-radius limit."""
    if n < 3:
        raise ValueError("invalid parameter: n must be ≥ 3 for rider_gamma")
    return math.log(n / (2 * math.pi)) - 2.0 * math.log(math.log(n))


def rider_Y(rho_n: float, n: int) -> float:
    """Centered/scaled spectral radius Yₙ = √(4nγₙ)(ρₙ/√n − 1 − √(γₙ/4n))."""
    if rho_n < 0:
        raise ValueError("invalid parameter: rho_n must be non-negative")
    g = rider_gamma(n)
    return math.sqrt(4.0 * n * g) * (rho_n / math.sqrt(n) - 1.0 - math.sqrt(g / (4.0 * n)))


@functools.lru_cache(maxsize=32)
def rider_correction(n: int) -> Tuple[float, float]:
    """Finite-n affine correction (loc, scale) so (Yₙ − loc)/scale ≈ Gumbel.

    The asymptotic constants inside Yₙ converge only logarithmically: at
    n = 500 the exact law of Yₙ still sits at Kolmogorov distance ≈ 0.30
    from its Gumbel limit, yet it is Gumbel *in shape* (an affine map
    brings it within ≈ 0.02).  This routine computes that map
    deterministically from the exact radius law — for the complex
    Ginibre ensemble the squared eigenvalue moduli are distributed as
    independent Gamma(k, 1) variables (k = 1..n), so the spectral-radius
    CDF is the product of regularized incomplete gamma functions.  The
    returned (loc, scale) match the e⁻¹-quantile and the median of Yₙ to
    those of the standard Gumbel law; both converge to (0, 1) as n → ∞,
    so the correction vanishes in the limit.
    """
    if n < 3:
        raise ValueError("invalid parameter: n must be ≥ 3 for rider_correction")
    from scipy.special import gammaincc

    g = rider_gamma(n)
    if g <= 0:
        raise ValueError("invalid parameter: rider_gamma(n) must be positive")
    ys = np.linspace(-8.0, 14.0, 1601)
    rs = math.sqrt(n) * (1.0 + math.sqrt(g / (4.0 * n)) + ys / math.sqrt(4.0 * n * g))
    ks = np.arange(1, n + 1, dtype=np.float64)
    log_f = np.array([
        np.sum(np.log1p(-np.minimum(gammaincc(ks, r * r), 1.0 - 1e-16)))
        for r in rs
    ])
    cdf = np.exp(log_f)
    # exact Yₙ-quantiles at the Gumbel reference levels e⁻¹ (y=0) and ½
    q_e = float(np.interp(math.exp(-1.0), cdf, ys))
    q_med = float(np.interp(0.5, cdf, ys))
    gumbel_median = -math.log(math.log(2.0))
    scale = (q_med - q_e) / gumbel_median
    return q_e, scale


# ----------------------------------------------------------------------
# planar laws
# ----------------------------------------------------------------------
_QMC_DISC_CACHE: dict = {}


def _disc_qmc_points(m: int = 20) -> np.ndarray:
    """~10⁶ quasi-random (Sobol) points uniform on the closed unit disc."""
    if m not in _QMC_DISC_CACHE:
        u = qmc.Sobol(d=2, scramble=False).random_base2(m)
        r = np.sqrt(u[:, 0])
        theta = 2.0 * np.pi * u[:, 1]
        _QMC_DISC_CACHE[m] = r * np.exp(1j * theta)
    return _QMC_DISC_CACHE[m]


def _planar_mass(points: np.ndarray, region: Region) -> float:
    if region.kind == "interval":
        raise ValueError("invalid region: interval region on a planar law")
    return float(np.count_nonzero(region.contains(points))) / points.size


def uniform_disc() -> Law2D:
    """Circular law: uniform probability measure on the closed unit disc."""

    def membership(z):
        return np.abs(np.asarray(z)) <= 1.0

    def region_mass(region: Region) -> float:
        if region.kind == "disc" and region.params[0] == 0:
            return min(region.params[1], 1.0) ** 2
        if region.kind == "annulus" and region.params[0] == 0:
            _, r_in, r_out = region.params
            return min(r_out, 1.0) ** 2 - min(r_in, 1.0) ** 2
        return _planar_mass(_disc_qmc_points(), region)

    return Law2D("uniform_disc", membership, region_mass)


def ellipse_axes(rho: float) -> Tuple[float, float]:
    """Semi-axes (real, imaginary) of the elliptical-law support ℰ_ρ."""
    if not -1.0 < rho < 1.0:
        raise ValueError(f"invalid parameter: rho must satisfy |rho| < 1, got {rho}")
    return 1.0 + rho, 1.0 - rho


def uniform_ellipse(rho: float) -> Law2D:
    """Elliptical law ℰ_ρ: uniform measure on the ellipse with semi-axes
    1+ρ (real direction) and 1−ρ (imaginary direction)."""
    ax_re, ax_im = ellipse_axes(rho)

    def membership(z):
        z = np.asarray(z, dtype=np.complex128)
        return (z.real / ax_re) ** 2 + (z.imag / ax_im) ** 2 <= 1.0

    def region_mass(region: Region) -> float:
        if rho == 0.0:
            return uniform_disc().region_mass(region)
        disc = _disc_qmc_points()
        points = disc.real * ax_re + 1j * disc.imag * ax_im
        return _planar_mass(points, region)

    return Law2D(f"uniform_ellipse[{rho}]", membership, region_mass)


# ----------------------------------------------------------------------
# Tracy–Widom F₂ via Painlevé II
# ----------------------------------------------------------------------
TW_DOMAIN = (-10.0, 8.0)
_TW_CACHE: dict = {}


class _TracyWidomEngine:
    """F₂ evaluator built from a cached Hastings–McLeod solution.

    ∫_t^∞ (x−t)q² splits at x₀ into I₁(t) − t·I₀(t) (Chebyshev
    antiderivative series of q² and x·q² on the collocation grid) plus
    the closed-form Airy tail ∫_{x₀}^∞ Ai² = Ai'(x₀)² − x₀Ai(x₀)² and
    ∫_{x₀}^∞ xAi² = (x₀²Ai² − x₀Ai'² + AiAi')/3.
    """

    def __init__(self, x_min: float = -12.0, x0: float = 8.0, n_nodes: int = 384):
        self.solution = painleve_hm(x_min, x0, n_nodes)
        self.center = 0.5 * (x0 + x_min)
        self.half = 0.5 * (x0 - x_min)
        x = self.solution.grid
        q2 = self.solution.q_values**2
        coeff_q2 = cheb_coeffs(q2)
        coeff_xq2 = cheb_coeffs(x * q2)
        p0 = np.polynomial.chebyshev.chebint(coeff_q2, m=1, scl=self.half)
        p1 = np.polynomial.chebyshev.chebint(coeff_xq2, m=1, scl=self.half)
        # I(t) = P(1) − P(t) as a Chebyshev series
        self.i0 = -p0
        self.i0[0] += np.polynomial.chebyshev.chebval(1.0, p0)
        self.i1 = -p1
        self.i1[0] += np.polynomial.chebyshev.chebval(1.0, p1)
        ai0, aip0 = airy_pair(x0)
        self.tail0 = aip0 * aip0 - x0 * ai0 * ai0
        self.tail1 = (x0 * x0 * ai0 * ai0 - x0 * aip0 * aip0 + ai0 * aip0) / 3.0

    def _map(self, t: np.ndarray) -> np.ndarray:
        return (t - self.center) / self.half

    def cdf(self, t: np.ndarray) -> np.ndarray:
        tm = self._map(t)
        i0 = clenshaw_batch(self.i0, tm)
        i1 = clenshaw_batch(self.i1, tm)
        expo = i1 - t * i0 + self.tail1 - t * self.tail0
        # The exponent decays below roundoff noise in the far right tail;
        # flooring it there pins the saturated CDF at exactly 1 so the
        # evaluation stays pointwise monotone.
        expo = np.where(expo < 1e-12, 0.0, expo)
        return np.clip(np.exp(-expo), 0.0, 1.0)

    def pdf(self, t: np.ndarray) -> np.ndarray:
        tm = self._map(t)
        i0 = clenshaw_batch(self.i0, tm) + self.tail0
        return np.maximum(i0, 0.0) * self.cdf(t)


def _tw_engine() -> _TracyWidomEngine:
    if "engine" not in _TW_CACHE:
        _TW_CACHE["engine"] = _TracyWidomEngine()
    return _TW_CACHE["engine"]


def tracy_widom_f2(t):
    """Tracy–Widom GUE distribution F₂(t) = exp(−∫_t^∞(x−t)q(x)²dx) on [−10, 8]."""
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if ts.size and (ts.min() < TW_DOMAIN[0] or ts.max() > TW_DOMAIN[1]):
        raise ValueError(f"domain error: tracy_widom_f2 supports t in {TW_DOMAIN}")
    val = _tw_engine().cdf(ts.ravel()).reshape(ts.shape)
    if np.ndim(t) == 0:
        return float(val[0])
    return val


def tracy_widom_law() -> Law1D:
    """F₂ wrapped as a Law1D on [−10, 8] (mass outside is below 1e-9)."""
    engine = _tw_engine()

    def density(x):
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        return engine.pdf(np.clip(x, *TW_DOMAIN))

    def cdf(x):
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        return engine.cdf(np.clip(x, *TW_DOMAIN))

    return Law1D("tracy_widom_f2", TW_DOMAIN, density, cdf)


# ----------------------------------------------------------------------
# single ring, Ginibre small-n density, Weyl density
# ----------------------------------------------------------------------
def single_ring_radii(nu: Union[Law1D, SingularProfile, Sequence[float]],
                      weights: Optional[Sequence[float]] = None) -> RingRadii:
    """Support annulus radii a = (∫x⁻²dν)^{−1/2}, b = (∫x²dν)^{1/2}.

    ``nu`` is either a Law1D on (0, ∞) (moments by adaptive quadrature)
    or a discrete list of singular values with optional weights (exact
    sums).  Mass at 0 forces a := 0 with the degenerate flag set.
    """
    if isinstance(nu, Law1D):
        lo, hi = nu.support
        if lo < 0:
            raise ValueError("ν must be supported in [0, ∞)")
        m2 = nu.moment(2)
        atom_zero = nu.atom is not None and nu.atom[0] == 0.0 and nu.atom[1] > 0
        if atom_zero:
            return RingRadii(0.0, math.sqrt(m2), degenerate=True)
        try:
            inv2, _ = scipy.integrate.quad(
                lambda x: float(np.asarray(nu.density(x))) / x**2, lo, hi,
                epsabs=1e-11, epsrel=1e-11, limit=400,
            )
        except Exception:
            inv2 = math.inf
        if nu.atom is not None:
            inv2 += nu.atom[1] / nu.atom[0] ** 2
        if not math.isfinite(inv2):
            return RingRadii(0.0, math.sqrt(m2), degenerate=True)
        return RingRadii(inv2 ** -0.5, math.sqrt(m2))

    sig = nu.as_array() if isinstance(nu, SingularProfile) else np.asarray(nu, dtype=np.float64)
    if sig.size == 0:
        raise ValueError("ν must contain at least one singular value")
    if np.any(sig < 0):
        raise ValueError("singular values must be non-negative")
    if weights is None:
        w = np.full(sig.size, 1.0 / sig.size)
    else:
        w = np.asarray(weights, dtype=np.float64)
        if w.shape != sig.shape or np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be a probability vector matching ν")
    b = math.sqrt(float(np.sum(w * sig**2)))
    if np.any((sig == 0) & (w > 0)):
        return RingRadii(0.0, b, degenerate=True)
    a = float(np.sum(w / sig**2)) ** -0.5
    return RingRadii(a, b)


_FACTORIALS = (1.0, 1.0, 2.0, 6.0)


def ginibre_density_smalln(z_list: Sequence[complex]) -> float:
    """Joint eigenvalue density φₙ of the complex Ginibre ensemble, n ≤ 3.

    φₙ(z₁,…,zₙ) = exp(−Σ|z_k|²)·∏_{j<k}|z_j−z_k|² / (πⁿ·∏_{k=1}^n k!).
    """
    z = np.asarray(z_list, dtype=np.complex128).ravel()
    n = z.size
    if not 1 <= n <= 3:
        raise ValueError("ginibre_density_smalln supports n in {1, 2, 3} only")
    norm = np.pi**n * float(np.prod(_FACTORIALS[1 : n + 1]))
    rep = 1.0
    for j in range(n):
        for k in range(j + 1, n):
            rep *= abs(z[j] - z[k]) ** 2
    return float(np.exp(-np.sum(np.abs(z) ** 2)) * rep / norm)


def weyl_density_u2(theta1: float, theta2: float) -> float:
    """Weyl eigenvalue-angle density for Haar U(2):
    |e^{iθ₁} − e^{iθ₂}|² / (2!·(2π)²) on [0, 2π)²."""
    for th in (theta1, theta2):
        if not 0.0 <= th < 2.0 * np.pi:
            raise ValueError("angles must lie in [0, 2π)")
    return float(np.abs(np.exp(1j * theta1) - np.exp(1j * theta2)) ** 2
                 / (2.0 * (2.0 * np.pi) ** 2))
