"""Seeded samplers for the classical random-matrix ensembles.

Every sampler is a pure function of its parameters and an
:class:`~rmtlab.rng.RngStream`; repeated calls with the same stream are
bit-identical.  Structural properties (symmetry, Hermitianity, positive
semidefiniteness, unitarity, singular-value fidelity) hold exactly on
every draw, not just in distribution.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from .entries import EntryDistribution
from .matrixio import DenseMatrix
from .rng import RngStream

__all__ = [
    "SingularProfile",
    "sample_goe",
    "sample_gue",
    "sample_wigner",
    "sample_wishart",
    "bai_yin_normalize",
    "sample_ginibre",
    "sample_iid",
    "sample_elliptical",
    "sample_haar_unitary",
    "sample_haar_orthogonal",
    "sample_prescribed_singular",
    "weyl_horn_check",
]


@dataclass(frozen=True)
class SingularProfile:
    """Prescribed singular values σ₁ ≥ … ≥ σₙ ≥ 0."""

    sigmas: Tuple[float, ...]

    def __init__(self, sigmas: Sequence[float]):
        s = tuple(float(x) for x in sigmas)
        if not s:
            raise ValueError("profile must contain at least one singular value")
        if any(x < 0 for x in s):
            raise ValueError("singular values must be non-negative")
        if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
            raise ValueError("singular values must be non-increasing")
        object.__setattr__(self, "sigmas", s)

    def __len__(self) -> int:
        return len(self.sigmas)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.sigmas, dtype=np.float64)


def _require_dim(n: int, name: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"invalid dimension: {name} must be a positive integer, got {n!r}")


# ----------------------------------------------------------------------
# Wigner family
# ----------------------------------------------------------------------
def sample_goe(n: int, rng: RngStream) -> DenseMatrix:
    """Gaussian orthogonal ensemble: symmetric, off-diagonal N(0,1), diagonal N(0,2)."""
    _require_dim(n)
    gen = rng.generator()
    m = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    m[iu] = gen.standard_normal(iu[0].size)
    m.T[iu] = m[iu]
    m[np.diag_indices(n)] = np.sqrt(2.0) * gen.standard_normal(n)
    return DenseMatrix(m)


def sample_gue(n: int, rng: RngStream) -> DenseMatrix:
    """Gaussian unitary ensemble: Hermitian, off-diagonal standard complex Gaussian,
    real diagonal N(0,1)."""
    _require_dim(n)
    gen = rng.generator()
    m = np.zeros((n, n), dtype=np.complex128)
    iu = np.triu_indices(n, 1)
    s = np.sqrt(0.5)
    m[iu] = s * gen.standard_normal(iu[0].size) + 1j * s * gen.standard_normal(iu[0].size)
    m.T[iu] = np.conj(m[iu])
    m[np.diag_indices(n)] = gen.standard_normal(n)
    return DenseMatrix(m)


def sample_wigner(n: int, offdiag: EntryDistribution, diag: EntryDistribution,
                  field: str, rng: RngStream) -> DenseMatrix:
    """General Wigner matrix: independent entries on and above the diagonal,
    mirrored below (conjugate-mirrored for the complex field).

    ``offdiag`` must have mean 0 and total variance 1 (tolerance 1e-9);
    GOE/GUE are recovered for the matching Gaussian parameters.
    """
    _require_dim(n)
    if field not in ("real", "complex"):
        raise ValueError(f"field must be 'real' or 'complex', got {field!r}")
    if abs(offdiag.mean) > 1e-9 or abs(offdiag.variance - 1.0) > 1e-9:
        raise ValueError(
            "invalid off-diagonal distribution: mean must be 0 and variance 1 "
            f"(got mean {offdiag.mean}, variance {offdiag.variance})"
        )
    if field == "real" and offdiag.is_complex:
        raise ValueError("complex off-diagonal distribution requires field='complex'")
    if diag.is_complex:
        raise ValueError("diagonal distribution must be real-valued (Hermitian diagonal)")
    gen = rng.generator()
    dtype = np.complex128 if field == "complex" else np.float64
    m = np.zeros((n, n), dtype=dtype)
    iu = np.triu_indices(n, 1)
    vals = offdiag.sample(gen, iu[0].size)
    m[iu] = vals
    m.T[iu] = np.conj(m[iu]) if field == "complex" else m[iu]
    m[np.diag_indices(n)] = diag.sample(gen, n)
    return DenseMatrix(m)


# ----------------------------------------------------------------------
# Wishart family
# ----------------------------------------------------------------------
def sample_wishart(p: int, n: int, scale: Optional[Union[DenseMatrix, np.ndarray]],
                   rng: RngStream) -> DenseMatrix:
    """Wishart sample covariance W = (1/n) X Xᵀ for X a p×n Gaussian matrix.

    With ``scale`` Σ (symmetric positive definite), columns of X are
    N(0, Σ), realized as Σ^{1/2}·(standard column) via Cholesky.
    """
    _require_dim(p, "p")
    _require_dim(n, "n")
    gen = rng.generator()
    x = gen.standard_normal((p, n))
    if scale is not None:
        s = scale.array if isinstance(scale, DenseMatrix) else np.asarray(scale, dtype=np.float64)
        if s.shape != (p, p):
            raise ValueError(f"scale must be {p}×{p}, got {s.shape}")
        if np.max(np.abs(s - s.T)) > 1e-10 * max(1.0, np.max(np.abs(s))):
            raise ValueError("scale matrix must be symmetric")
        try:
            chol = scipy.linalg.cholesky(s, lower=True)
        except scipy.linalg.LinAlgError as exc:
            raise ValueError(f"scale matrix is not positive definite: {exc}") from exc
        x = chol @ x
    w = (x @ x.T) / n
    w = (w + w.T) / 2.0
    return DenseMatrix(w)


def bai_yin_normalize(X: DenseMatrix, p: int, n: int) -> DenseMatrix:
    """Edge normalization A_p = (X Xᵀ − n I) / (2√(np)) of a p×n data matrix."""
    if X.shape != (p, n):
        raise ValueError(f"invalid dimensions: X is {X.shape}, expected ({p}, {n})")
    x = X.array
    a = (x @ np.conj(x.T) - n * np.eye(p, dtype=x.dtype)) / (2.0 * np.sqrt(n * p))
    a = (a + np.conj(a.T)) / 2.0
    return DenseMatrix(a)


# ----------------------------------------------------------------------
# Non-Hermitian ensembles
# ----------------------------------------------------------------------
def sample_ginibre(n: int, field: str, rng: RngStream) -> DenseMatrix:
    """Ginibre ensemble: all n² entries i.i.d. standard (real or complex) Gaussian."""
    _require_dim(n)
    gen = rng.generator()
    if field == "real":
        return DenseMatrix(gen.standard_normal((n, n)))
    if field == "complex":
        s = np.sqrt(0.5)
        g = s * gen.standard_normal((n, n)) + 1j * s * gen.standard_normal((n, n))
        return DenseMatrix(g)
    raise ValueError(f"field must be 'real' or 'complex', got {field!r}")


def sample_iid(n: int, entry: EntryDistribution, rng: RngStream) -> DenseMatrix:
    """Square matrix with all n² entries i.i.d. from ``entry`` (no symmetry).

    This is the general-entry analogue of the Ginibre sampler, used for
    circular-law experiments with non-Gaussian entries (e.g. Rademacher).
    """
    _require_dim(n)
    gen = rng.generator()
    return DenseMatrix(entry.sample(gen, (n, n)))


def sample_elliptical(n: int, rho: float, diag: Optional[EntryDistribution],
                      rng: RngStream) -> DenseMatrix:
    """Real elliptical ensemble: transpose-symmetric pairs with correlation rho.

    For i < j the pair is built as x_ij = ξ, x_ji = rho·ξ + √(1−rho²)·η
    with ξ, η i.i.d. N(0,1); distinct pairs are independent; the diagonal
    is i.i.d. from ``diag`` (standard normal when omitted).
    """
    _require_dim(n)
    if not -1.0 < rho < 1.0:
        raise ValueError(f"invalid parameter: rho must satisfy |rho| < 1, got {rho}")
    if diag is None:
        diag = EntryDistribution.gaussian(0.0, 1.0)
    gen = rng.generator()
    m = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    xi = gen.standard_normal(iu[0].size)
    eta = gen.standard_normal(iu[0].size)
    m[iu] = xi
    m.T[iu] = rho * xi + np.sqrt(1.0 - rho * rho) * eta
    m[np.diag_indices(n)] = diag.sample(gen, n)
    return DenseMatrix(m)


# ----------------------------------------------------------------------
# Compact groups and prescribed singular values
# ----------------------------------------------------------------------
def _haar_from_gen(gen: np.random.Generator, n: int, complex_field: bool) -> np.ndarray:
    """Haar-distributed unitary/orthogonal matrix from an open generator.

    QR of a Ginibre draw followed by the diagonal-phase correction
    Q ← Q·diag(r_kk/|r_kk|)⁻¹; without the correction plain QR is NOT
    Haar-distributed (the R factor's phases bias the distribution).
    """
    while True:
        if complex_field:
            s = np.sqrt(0.5)
            g = s * gen.standard_normal((n, n)) + 1j * s * gen.standard_normal((n, n))
        else:
            g = gen.standard_normal((n, n))
        q, r = np.linalg.qr(g)
        d = np.diagonal(r)
        if np.min(np.abs(d)) < 1e-300:  # singular draw: probability 0, resample
            continue
        q = q * (d / np.abs(d))
        return q


def sample_haar_unitary(n: int, rng: RngStream) -> DenseMatrix:
    """Haar-distributed n×n unitary matrix."""
    _require_dim(n)
    return DenseMatrix(_haar_from_gen(rng.generator(), n, complex_field=True))


def sample_haar_orthogonal(n: int, rng: RngStream) -> DenseMatrix:
    """Haar-distributed n×n real orthogonal matrix."""
    _require_dim(n)
    return DenseMatrix(_haar_from_gen(rng.generator(), n, complex_field=False))


def sample_prescribed_singular(profile: SingularProfile, rng: RngStream) -> DenseMatrix:
    """A = U Σ V* with U, V independent Haar unitaries and Σ the given profile."""
    if not isinstance(profile, SingularProfile):
        profile = SingularProfile(profile)
    n = len(profile)
    gen = rng.generator()
    u = _haar_from_gen(gen, n, complex_field=True)
    v = _haar_from_gen(gen, n, complex_field=True)
    return DenseMatrix((u * profile.as_array()) @ np.conj(v.T))


def weyl_horn_check(sigmas: SingularProfile, lambdas: Sequence[complex],
                    partial_tol: float = 1e-9, full_rel_tol: float = 1e-6) -> bool:
    """Weyl–Horn compatibility of singular values with eigenvalue moduli.

    True iff ∏_{j≤k}|λ_(j)| ≤ ∏_{j≤k}σ_j for every k < n (moduli sorted
    non-increasing; inequality relaxed by ``partial_tol`` in log domain)
    and the full products agree within relative ``full_rel_tol``.
    """
    if not isinstance(sigmas, SingularProfile):
        sigmas = SingularProfile(sigmas)
    lam = np.sort(np.abs(np.asarray(lambdas, dtype=np.complex128)))[::-1]
    sig = sigmas.as_array()
    if lam.size != sig.size:
        raise ValueError(f"invalid input: {lam.size} eigenvalues vs {sig.size} singular values")
    with np.errstate(divide="ignore"):
        log_lam = np.cumsum(np.log(lam))
        log_sig = np.cumsum(np.log(sig))
    ok_partial = np.all(log_lam[:-1] <= log_sig[:-1] + partial_tol)
    tl, ts = log_lam[-1], log_sig[-1]
    if np.isneginf(tl) and np.isneginf(ts):
        ok_full = True
    else:
        ok_full = abs(tl - ts) <= np.log1p(full_rel_tol)
    return bool(ok_partial and ok_full)
