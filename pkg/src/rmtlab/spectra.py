"""Spectral decompositions and measure-valued spectral statistics.

Covers eigenvalue/singular-value extraction, the empirical spectral
measure (ESM), the eigenvalue counting function over regions, spectral
moments, the Stieltjes transform with its inversion approximant, and the
eigenvector delocalization statistic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .matrixio import DenseMatrix

__all__ = [
    "Spectrum",
    "EmpiricalMeasure",
    "Region",
    "eigvals_hermitian",
    "eigvals_general",
    "singular_values",
    "empirical_measure",
    "counting",
    "spectral_moment",
    "stieltjes",
    "stieltjes_invert",
    "eigvec_delocalization",
]

_HERMITIAN_REL_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Ordered eigenvalue or singular-value list with its applied scaling.

    ``branch`` is ``real_sorted`` (non-decreasing real values) or
    ``complex_unsorted``; ``normalization`` records the multiplier
    already applied to the values (1.0 for raw decompositions).
    """

    branch: str
    values: np.ndarray
    normalization: float = 1.0
    source_dims: Tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        v = np.asarray(self.values)
        if self.branch == "real_sorted":
            v = np.asarray(v, dtype=np.float64)
            if v.size > 1 and np.any(np.diff(v) < 0):
                raise ValueError("real_sorted spectrum must be non-decreasing")
        elif self.branch == "complex_unsorted":
            v = np.asarray(v, dtype=np.complex128)
        else:
            raise ValueError(f"unknown branch {self.branch!r}")
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size

    def scaled(self, c: float) -> "Spectrum":
        """Return the spectrum with an extra multiplier c > 0 applied."""
        if c <= 0:
            raise ValueError("scale must be positive")
        return Spectrum(self.branch, self.values * c, self.normalization * c,
                        self.source_dims)


@dataclass(frozen=True)
class EmpiricalMeasure:
    """Uniform probability measure (1/n)Σδ_{λ_j} on the spectrum's points."""

    support: np.ndarray

    def __post_init__(self) -> None:
        s = np.atleast_1d(np.asarray(self.support))
        if s.ndim != 1 or s.size == 0:
            raise ValueError("support must be a non-empty 1-D collection of points")
        s = np.asarray(s, dtype=np.complex128 if np.iscomplexobj(s) else np.float64)
        object.__setattr__(self, "support", s)

    @property
    def n(self) -> int:
        return self.support.size

    @property
    def weight(self) -> float:
        return 1.0 / self.support.size

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.support)


@dataclass(frozen=True)
class Region:
    """A closed region of ℝ or ℂ used by the counting function."""

    kind: str
    params: tuple

    @classmethod
    def interval(cls, a: float, b: float) -> "Region":
        if a > b:
            raise ValueError("interval requires a ≤ b")
        return cls("interval", (float(a), float(b)))

    @classmethod
    def disc(cls, center: complex, radius: float) -> "Region":
        if radius < 0:
            raise ValueError("disc radius must be non-negative")
        return cls("disc", (complex(center), float(radius)))

    @classmethod
    def annulus(cls, center: complex, r_in: float, r_out: float) -> "Region":
        if not 0 <= r_in <= r_out:
            raise ValueError("annulus requires 0 ≤ r_in ≤ r_out")
        return cls("annulus", (complex(center), float(r_in), float(r_out)))

    @classmethod
    def halfplane(cls, normal: complex, offset: float) -> "Region":
        if normal == 0:
            raise ValueError("halfplane normal must be non-zero")
        return cls("halfplane", (complex(normal), float(offset)))

    @property
    def is_planar(self) -> bool:
        return self.kind != "interval"

    def contains(self, z: np.ndarray) -> np.ndarray:
        """Boolean membership (closed-region convention) for an array of points."""
        z = np.asarray(z)
        if self.kind == "interval":
            a, b = self.params
            return (z >= a) & (z <= b)
        if self.kind == "disc":
            c, r = self.params
            return np.abs(z - c) <= r
        if self.kind == "annulus":
            c, r_in, r_out = self.params
            d = np.abs(z - c)
            return (d >= r_in) & (d <= r_out)
        normal, offset = self.params
        return (z * np.conj(normal)).real <= offset


# ----------------------------------------------------------------------
# decompositions
# ----------------------------------------------------------------------
def _check_hermitian(m: np.ndarray) -> bool:
    scale = np.max(np.abs(m)) if m.size else 0.0
    dev = np.max(np.abs(m - np.conj(m.T))) if m.size else 0.0
    return dev <= _HERMITIAN_REL_TOL * max(scale, 1e-300)


def eigvals_hermitian(M: DenseMatrix) -> Spectrum:
    """Real, non-decreasing eigenvalues of a symmetric/Hermitian matrix."""
    m = M.array
    if not M.is_square:
        raise ValueError(f"matrix must be square, got {M.shape}")
    if not _check_hermitian(m):
        raise ValueError(
            "contract violation: matrix is not Hermitian within tolerance; "
            "use eigvals_general for non-normal matrices"
        )
    vals = np.linalg.eigvalsh(m)
    return Spectrum("real_sorted", vals, 1.0, M.shape)


def eigvals_general(M: DenseMatrix) -> Spectrum:
    """All n complex eigenvalues (with multiplicity) of a square matrix."""
    if not M.is_square:
        raise ValueError(f"matrix must be square, got {M.shape}")
    try:
        vals = np.linalg.eigvals(M.array)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"eigenvalue iteration failed to converge: {exc}") from exc
    return Spectrum("complex_unsorted", vals, 1.0, M.shape)


def singular_values(M: DenseMatrix) -> Spectrum:
    """Non-negative singular values, sorted non-decreasing."""
    vals = np.linalg.svd(M.array, compute_uv=False)
    return Spectrum("real_sorted", vals[::-1].copy(), 1.0, M.shape)


# ----------------------------------------------------------------------
# measures and statistics
# ----------------------------------------------------------------------
def empirical_measure(s: Spectrum, extra_scale: float = 1.0) -> EmpiricalMeasure:
    """ESM of a spectrum with an additional normalization applied to the points."""
    if extra_scale <= 0:
        raise ValueError("extra_scale must be positive")
    return EmpiricalMeasure(s.values * extra_scale)


def counting(mu: EmpiricalMeasure, A: Region) -> int:
    """Eigenvalue counting function 𝒩(A) = #{j : λ_j ∈ A} (closed regions)."""
    if A.is_planar != mu.is_complex:
        if mu.is_complex:
            raise ValueError("invalid region: interval region on complex support")
        raise ValueError("invalid region: planar region on real support")
    return int(np.count_nonzero(A.contains(mu.support)))


def spectral_moment(mu: EmpiricalMeasure, k: int):
    """k-th moment (1/n)Σλ_jᵏ of the ESM (equals (1/n)tr(Mᵏ) for eigen-sources)."""
    if not 0 <= k <= 64:
        raise ValueError("moment order must satisfy 0 ≤ k ≤ 64")
    val = np.mean(mu.support.astype(np.complex128) ** k)
    return complex(val) if mu.is_complex else float(val.real)


def stieltjes(mu: EmpiricalMeasure, z: complex) -> complex:
    """Stieltjes transform S_μ(z) = (1/n)Σ 1/(λ_j − z) for Im z ≠ 0."""
    if mu.is_complex:
        raise ValueError("Stieltjes transform requires a real-supported measure")
    z = complex(z)
    if z.imag == 0.0:
        raise ValueError("domain error: Stieltjes transform defined only for Im z ≠ 0")
    return complex(np.mean(1.0 / (mu.support - z)))


def stieltjes_invert(S: Callable[[complex], complex], x: float, eps: float) -> float:
    """Density approximant (1/π)·Im S(x + iε) of the Stieltjes inversion."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return float(np.imag(S(complex(x, eps))) / np.pi)


def eigvec_delocalization(M: DenseMatrix) -> float:
    """Largest eigenvector component max_j max_i |v_i^{(j)}| over unit eigenvectors."""
    m = M.array
    if not M.is_square:
        raise ValueError(f"matrix must be square, got {M.shape}")
    if not _check_hermitian(m):
        raise ValueError("contract violation: matrix is not Hermitian within tolerance")
    _, vecs = np.linalg.eigh(m)
    return float(np.max(np.abs(vecs)))
