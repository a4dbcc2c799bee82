"""Numerical hot-loop kernels with optional JIT compilation.

The three kernels here (Airy function evaluation, Clenshaw evaluation of
Chebyshev series, and the circular Wasserstein-1 rotation search) are
tight scalar loops.  When numba is importable and the environment
variable ``RMTLAB_NO_NUMBA`` is unset/falsy they are compiled with
``@njit(cache=True)``; otherwise the exact same source runs as pure
Python/NumPy.  ``benchmarks/bench_kernels.py`` compares the two paths.
"""
from __future__ import annotations

import math
import os

import numpy as np

__all__ = [
    "NUMBA_ENABLED",
    "airy_batch",
    "clenshaw_batch",
    "w1_circle_solve",
]

_DISABLED = os.environ.get("RMTLAB_NO_NUMBA", "").strip().lower() not in ("", "0", "false")
try:
    if _DISABLED:
        raise ImportError("numba disabled via RMTLAB_NO_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - environment dependent
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


# ----------------------------------------------------------------------
# Airy function Ai and Ai'
#
# Three branches, each accurate to ≤ 1e-10 absolute on [-20, 30]:
#   |x| ≤ 5   Maclaurin series Ai = c1·f(x) + c2·g(x)
#   x > 5     Poincaré asymptotic expansion in ζ = (2/3)x^{3/2}
#   x < -5    Taylor-series ODE stepping of y'' = xy leftward from -5
#             (the Maclaurin series loses ~6 digits to cancellation past
#              -8 and the oscillatory asymptotic cannot reach 1e-10 near
#              -5, so continuation bridges the gap)
# ----------------------------------------------------------------------
_AI0 = 0.35502805388781723926  # Ai(0) = 3^(-2/3)/Γ(2/3)
_AIP0 = -0.25881940379280679840  # Ai'(0) = -3^(-1/3)/Γ(1/3)


@njit(cache=True)
def _ai_series_pair(x):
    """(Ai, Ai') by the Maclaurin series; accurate for |x| ≤ 5."""
    x3 = x * x * x
    t = 1.0  # f-series term, t_0 = 1
    s = x  # g-series term, s_0 = x
    f = t
    g = s
    fp = 0.0  # f'
    gp = 1.0  # g'
    for k in range(0, 60):
        t = t * x3 / ((3 * k + 2) * (3 * k + 3))
        s = s * x3 / ((3 * k + 3) * (3 * k + 4))
        f += t
        g += s
        if x != 0.0:
            fp += (3 * k + 3) * t / x
            gp += (3 * k + 4) * s / x
        if abs(t) < 1e-18 * abs(f) and abs(s) < 1e-18 * (abs(g) + 1e-300) and k > 3:
            break
    return _AI0 * f + _AIP0 * g, _AI0 * fp + _AIP0 * gp


@njit(cache=True)
def _ai_asymptotic_pos(x):
    """(Ai, Ai') by the decaying asymptotic expansion; x > 5."""
    zeta = (2.0 / 3.0) * x ** 1.5
    u = 1.0
    sum_ai = 1.0
    sum_aip = 1.0
    sign = 1.0
    prev = 1.0
    zk = 1.0
    for k in range(0, 40):
        u = u * (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1))
        v = -u * (6 * k + 7) / (6 * k + 5)
        zk = zk * zeta
        term = u / zk
        if abs(term) > prev:  # divergent tail reached: stop at smallest term
            break
        sign = -sign
        sum_ai += sign * term
        sum_aip += sign * v / zk
        prev = abs(term)
        if abs(term) < 1e-18:
            break
    pref = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
    ai = pref * sum_ai / x ** 0.25
    aip = -pref * x ** 0.25 * sum_aip
    return ai, aip


@njit(cache=True)
def _ai_taylor_left(x):
    """(Ai, Ai') for x < -5 by Taylor stepping of y'' = x·y from -5."""
    a = -5.0
    y, yp = _ai_series_pair(a)
    c = np.zeros(40)
    while a > x + 1e-14:
        h = x - a
        if h < -0.5:
            h = -0.5
        c[0] = y
        c[1] = yp
        for k in range(0, 38):
            prev = c[k - 1] if k >= 1 else 0.0
            c[k + 2] = (a * c[k] + prev) / ((k + 1.0) * (k + 2.0))
        ynew = 0.0
        ypnew = 0.0
        for k in range(39, 0, -1):
            ynew = ynew * h + c[k]
            ypnew = ypnew * h + k * c[k]
        ynew = ynew * h + c[0]
        y = ynew
        yp = ypnew
        a = a + h
    return y, yp


@njit(cache=True)
def _airy_batch_impl(xs):
    ai = np.empty(xs.size)
    aip = np.empty(xs.size)
    for i in range(xs.size):
        x = xs[i]
        if x > 5.0:
            a, ap = _ai_asymptotic_pos(x)
        elif x < -5.0:
            a, ap = _ai_taylor_left(x)
        else:
            a, ap = _ai_series_pair(x)
        ai[i] = a
        aip[i] = ap
    return ai, aip


def airy_batch(xs: np.ndarray):
    """Vectorized (Ai(x), Ai'(x)) for a float64 array."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    return _airy_batch_impl(xs)


# ----------------------------------------------------------------------
# Clenshaw evaluation of Chebyshev series
# ----------------------------------------------------------------------
@njit(cache=True)
def _clenshaw_batch_impl(coeffs, ts):
    out = np.empty(ts.size)
    ncoef = coeffs.size
    for i in range(ts.size):
        t = ts[i]
        b1 = 0.0
        b2 = 0.0
        for k in range(ncoef - 1, 0, -1):
            b1, b2 = coeffs[k] + 2.0 * t * b1 - b2, b1
        out[i] = coeffs[0] + t * b1 - b2
    return out


def clenshaw_batch(coeffs: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Evaluate the Chebyshev series Σ cₖTₖ(t) at each t ∈ [-1, 1]."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    return _clenshaw_batch_impl(coeffs, ts)


# ----------------------------------------------------------------------
# Circular Wasserstein-1 rotation search
#
# With sorted angles θ_1 ≤ … ≤ θ_n in [0, 2π), the difference
# g(θ) = F_emp(θ) − θ/(2π) is piecewise linear (slope −1/(2π)) on the
# n+1 segments cut by the atoms.  W₁ against the uniform circle law is
# min_c ∫₀^{2π} |g(θ) − c| dθ, a convex piecewise-linear objective.
# ----------------------------------------------------------------------
@njit(cache=True)
def _w1_objective(g_left, g_right, seg_len, c):
    total = 0.0
    for j in range(g_left.size):
        a = g_left[j] - c
        b = g_right[j] - c
        if a * b >= 0.0:
            total += 0.5 * (abs(a) + abs(b)) * seg_len[j]
        else:
            total += math.pi * (a * a + b * b)
    return total


@njit(cache=True)
def _w1_solve_impl(g_left, g_right, seg_len):
    lo = g_right[0]
    hi = g_left[0]
    for j in range(g_left.size):
        if g_right[j] < lo:
            lo = g_right[j]
        if g_left[j] > hi:
            hi = g_left[j]
    # golden-section on the convex objective
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1 = _w1_objective(g_left, g_right, seg_len, x1)
    f2 = _w1_objective(g_left, g_right, seg_len, x2)
    while b - a > 1e-8:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = _w1_objective(g_left, g_right, seg_len, x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = _w1_objective(g_left, g_right, seg_len, x2)
    c_best = 0.5 * (a + b)
    f_best = _w1_objective(g_left, g_right, seg_len, c_best)
    # the objective is piecewise linear in c: the optimum sits at one of
    # the kink levels, so cross-check every candidate breakpoint
    for j in range(g_left.size):
        for cand in (g_left[j], g_right[j]):
            f = _w1_objective(g_left, g_right, seg_len, cand)
            if f < f_best:
                f_best = f
                c_best = cand
    return f_best, c_best


def w1_circle_solve(g_left: np.ndarray, g_right: np.ndarray, seg_len: np.ndarray):
    """Minimize the rotation-shift objective; returns (W₁ value, optimal shift)."""
    g_left = np.ascontiguousarray(g_left, dtype=np.float64)
    g_right = np.ascontiguousarray(g_right, dtype=np.float64)
    seg_len = np.ascontiguousarray(seg_len, dtype=np.float64)
    return _w1_solve_impl(g_left, g_right, seg_len)
