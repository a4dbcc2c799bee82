"""Hastings–McLeod solution of Painlevé II by spectral collocation.

The Hastings–McLeod branch of q'' = xq + 2q³ (the one with q ~ Ai(x) as
x → +∞) is violently unstable under forward shooting: perturbations
grow like exp((2√2/3)|x|^{3/2}) going left, so double-precision shooting
loses all accuracy below x ≈ −6.  The solver here instead poses the
two-point boundary value problem on a Chebyshev–Gauss–Lobatto grid
(q(x₀) = Ai(x₀) on the right, the −x/2 asymptote on the left) and runs
a damped Newton iteration on the collocation residual.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .airy import airy_pair

__all__ = ["PainleveSolution", "painleve_hm", "cheb_lobatto", "cheb_coeffs"]

ENVELOPE_X_MIN = -12.0
ENVELOPE_X0_MIN = 6.0


def cheb_lobatto(n: int):
    """Chebyshev differentiation matrix and nodes t_j = cos(jπ/n), descending."""
    if n < 2:
        raise ValueError("need at least 3 collocation nodes")
    t = np.cos(np.pi * np.arange(n + 1) / n)
    c = np.ones(n + 1)
    c[0] = c[n] = 2.0
    c *= (-1.0) ** np.arange(n + 1)
    big_t = np.tile(t, (n + 1, 1)).T
    dt = big_t - big_t.T
    d = np.outer(c, 1.0 / c) / (dt + np.eye(n + 1))
    d -= np.diag(d.sum(axis=1))
    return d, t


def cheb_coeffs(values: np.ndarray) -> np.ndarray:
    """Chebyshev series coefficients from values at Lobatto nodes (descending t).

    Uses the discrete cosine identity c_k = (2/n)Σ'' v_j cos(πjk/n)
    with the primed sum halving the j = 0 and j = n terms (and the k = 0
    and k = n coefficients likewise halved).
    """
    v = np.asarray(values, dtype=np.float64)
    n = v.size - 1
    j = np.arange(n + 1)
    w = np.ones(n + 1)
    w[0] = w[n] = 0.5
    cosmat = np.cos(np.pi * np.outer(j, j) / n)
    coeffs = (2.0 / n) * (cosmat @ (w * v))
    coeffs[0] *= 0.5
    coeffs[n] *= 0.5
    return coeffs


def _left_asymptote(x: float) -> float:
    """Three-term expansion q(x) ≈ √(−x/2)(1 + 1/(8x³) − 73/(128x⁶)) for x ≪ 0."""
    return np.sqrt(-x / 2.0) * (1.0 + 1.0 / (8.0 * x**3) - 73.0 / (128.0 * x**6))


@dataclass(frozen=True)
class PainleveSolution:
    """Hastings–McLeod values on a decreasing collocation grid."""

    grid: np.ndarray  # x₀ > … > x_min
    q_values: np.ndarray
    x0_start: float
    residual: float  # max-norm collocation residual of q'' − xq − 2q³

    def interpolate(self, x) -> np.ndarray:
        """Barycentric Chebyshev interpolation of q at arbitrary points."""
        xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
        n = self.grid.size - 1
        w = np.ones(n + 1)
        w[0] = w[n] = 0.5
        w *= (-1.0) ** np.arange(n + 1)
        num = np.zeros(xs.size)
        den = np.zeros(xs.size)
        exact = np.full(xs.size, -1)
        for j in range(n + 1):
            diff = xs - self.grid[j]
            hit = diff == 0.0
            exact[hit] = j
            with np.errstate(divide="ignore", invalid="ignore"):
                r = w[j] / diff
            num += np.where(hit, 0.0, r * self.q_values[j])
            den += np.where(hit, 0.0, r)
        out = num / den
        for i in np.nonzero(exact >= 0)[0]:
            out[i] = self.q_values[exact[i]]
        if np.ndim(x) == 0:
            return float(out[0])
        return out


def painleve_hm(x_min: float = -12.0, x0: float = 8.0, n_nodes: int = 384,
                max_iter: int = 60) -> PainleveSolution:
    """Solve the Hastings–McLeod boundary value problem on [x_min, x0].

    Stability envelope: x0 ≥ 6 (so the Airy boundary value is already in
    the asymptotic regime) and x_min ≥ −12 (left-asymptote accuracy).
    """
    if x0 < ENVELOPE_X0_MIN:
        raise ValueError(f"x0 must be ≥ {ENVELOPE_X0_MIN} (Airy matching point)")
    if x_min < ENVELOPE_X_MIN:
        raise ValueError(f"x_min must be ≥ {ENVELOPE_X_MIN} (stability envelope)")
    if x_min >= x0:
        raise ValueError("x_min must be below x0")

    d, t = cheb_lobatto(n_nodes)
    half = 0.5 * (x0 - x_min)
    x = 0.5 * (x0 + x_min) + half * t  # descending from x0 to x_min
    d = d / half
    d2 = d @ d

    ai_x0, _ = airy_pair(x0)
    q_left = _left_asymptote(x_min)

    ai_grid, _ = airy_pair(x)
    q = np.where(x > 0, ai_grid, np.sqrt(np.maximum(-x, 0.0) / 2.0))
    q[0] = ai_x0
    q[-1] = q_left

    identity = np.eye(n_nodes + 1)

    def residual_vec(qv: np.ndarray) -> np.ndarray:
        f = d2 @ qv - x * qv - 2.0 * qv**3
        f[0] = qv[0] - ai_x0
        f[-1] = qv[-1] - q_left
        return f

    f = residual_vec(q)
    norm = np.max(np.abs(f))
    for _ in range(max_iter):
        if norm <= 1e-10:  # at/below the collocation roundoff floor
            break
        jac = d2 - np.diag(x + 6.0 * q**2)
        jac[0, :] = identity[0]
        jac[-1, :] = identity[-1]
        step = np.linalg.solve(jac, -f)
        lam = 1.0
        while lam > 1e-8:
            q_new = q + lam * step
            f_new = residual_vec(q_new)
            if np.max(np.abs(f_new)) < norm:
                break
            lam *= 0.5
        else:  # cannot improve further: accept only if already converged
            break
        q, f = q_new, f_new
        norm = np.max(np.abs(f))
    if norm > 1e-9:
        raise RuntimeError(
            f"Newton failed to converge; final residual {norm:.3e} "
            "(bad grid or envelope breach)"
        )

    interior_res = float(np.max(np.abs((d2 @ q - x * q - 2.0 * q**3)[1:-1])))
    if interior_res > 1e-8:
        raise RuntimeError(
            f"collocation residual {interior_res:.3e} exceeds 1e-8 "
            "(bad grid or envelope breach)"
        )
    if np.any(q <= 0):
        raise RuntimeError("solution lost positivity; not the Hastings–McLeod branch")
    if abs(q[0] - ai_x0) > 1e-6 * abs(ai_x0):
        raise RuntimeError("right boundary value drifted from Ai(x0)")
    return PainleveSolution(grid=x, q_values=q, x0_start=x0, residual=interior_res)
