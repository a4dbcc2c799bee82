"""Airy function of the first kind on the working range [-20, 30].

Evaluation is branch-split between a Maclaurin series, a decaying
asymptotic expansion, and Taylor-series continuation of the Airy ODE
(see :mod:`rmtlab._kernels` for the numerics); absolute error is below
1e-10 across the supported range.
"""
from __future__ import annotations

import numpy as np

from ._kernels import airy_batch

__all__ = ["airy", "airy_pair", "AIRY_DOMAIN"]

AIRY_DOMAIN = (-20.0, 30.0)


def _check_domain(xs: np.ndarray) -> None:
    if xs.size and (xs.min() < AIRY_DOMAIN[0] or xs.max() > AIRY_DOMAIN[1]):
        raise ValueError(
            f"domain error: airy supports x in [{AIRY_DOMAIN[0]}, {AIRY_DOMAIN[1]}]"
        )


def airy(x):
    """Ai(x) for scalar or array input within [-20, 30]."""
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    _check_domain(xs)
    ai, _ = airy_batch(xs.ravel())
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(ai[0])
    return ai.reshape(xs.shape)


def airy_pair(x):
    """(Ai(x), Ai'(x)) for scalar or array input within [-20, 30]."""
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    _check_domain(xs)
    ai, aip = airy_batch(xs.ravel())
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(ai[0]), float(aip[0])
    return ai.reshape(xs.shape), aip.reshape(xs.shape)
