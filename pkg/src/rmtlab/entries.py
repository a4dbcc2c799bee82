"""Scalar entry distributions for matrix samplers.

An :class:`EntryDistribution` bundles a sampling routine with exact raw
moments of orders 1–4.  The discrete kinds (``rademacher``,
``uniform_centered``, ``two_point``, ``custom_moments_table``) expose
their moments exactly, which is what makes moment-matching experiments
(two ensembles whose entries agree to fourth order) possible at the
user level.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

__all__ = ["EntryDistribution"]

_KINDS = (
    "gaussian",
    "complex_gaussian",
    "rademacher",
    "uniform_centered",
    "two_point",
    "custom_moments_table",
)


@dataclass(frozen=True)
class EntryDistribution:
    """A scalar distribution with exact low-order moments.

    Use the class methods (:meth:`gaussian`, :meth:`rademacher`, …) to
    construct instances; the constructor itself is not meant to be
    called directly.

    Attributes
    ----------
    kind : str
        One of ``gaussian``, ``complex_gaussian``, ``rademacher``,
        ``uniform_centered``, ``two_point``, ``custom_moments_table``.
    params : tuple
        Kind-specific real parameters.
    """

    kind: str
    params: tuple = ()
    points: Tuple[float, ...] = field(default=())
    probs: Tuple[float, ...] = field(default=())

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def gaussian(cls, mean: float = 0.0, variance: float = 1.0) -> "EntryDistribution":
        """Real normal N(mean, variance)."""
        if variance < 0:
            raise ValueError("variance must be non-negative")
        return cls("gaussian", (float(mean), float(variance)))

    @classmethod
    def complex_gaussian(cls, variance_per_component: float = 0.5) -> "EntryDistribution":
        """Complex Gaussian with i.i.d. N(0, v) real and imaginary parts.

        The default ``v = 1/2`` gives the standard complex Gaussian with
        total variance E|Z|² = 1.
        """
        if variance_per_component < 0:
            raise ValueError("variance_per_component must be non-negative")
        return cls("complex_gaussian", (float(variance_per_component),))

    @classmethod
    def rademacher(cls) -> "EntryDistribution":
        """Uniform on {−1, +1}."""
        return cls("rademacher")

    @classmethod
    def uniform_centered(cls, half_width: float) -> "EntryDistribution":
        """Uniform on [−half_width, half_width]."""
        if half_width <= 0:
            raise ValueError("half_width must be positive")
        return cls("uniform_centered", (float(half_width),))

    @classmethod
    def two_point(cls, values: Tuple[float, float],
                  probabilities: Tuple[float, float]) -> "EntryDistribution":
        """Two-atom distribution P(X = values[i]) = probabilities[i]."""
        return cls.custom_moments_table(values, probabilities, kind="two_point")

    @classmethod
    def custom_moments_table(cls, points, probabilities,
                             kind: str = "custom_moments_table") -> "EntryDistribution":
        """Finite discrete distribution given as a support/probability table.

        Moments of all orders are computed exactly from the table.
        """
        pts = tuple(float(p) for p in points)
        pr = tuple(float(p) for p in probabilities)
        if len(pts) != len(pr) or not pts:
            raise ValueError("points and probabilities must be equal-length and non-empty")
        if any(p < 0 for p in pr) or abs(sum(pr) - 1.0) > 1e-12:
            raise ValueError("probabilities must be non-negative and sum to 1")
        if kind == "two_point" and len(pts) != 2:
            raise ValueError("two_point requires exactly two atoms")
        return cls(kind, (), pts, pr)

    # ------------------------------------------------------------------
    # moments
    # ------------------------------------------------------------------
    @property
    def is_complex(self) -> bool:
        return self.kind == "complex_gaussian"

    def moment(self, k: int) -> float:
        """Exact raw moment E[X^k] (per component for the complex kind)."""
        if k < 0:
            raise ValueError("moment order must be non-negative")
        if k == 0:
            return 1.0
        if self.kind == "gaussian":
            m, v = self.params
            if k == 1:
                return m
            if k == 2:
                return m * m + v
            if k == 3:
                return m**3 + 3 * m * v
            if k == 4:
                return m**4 + 6 * m * m * v + 3 * v * v
            raise ValueError("gaussian moments implemented for k ≤ 4")
        if self.kind == "complex_gaussian":
            (v,) = self.params
            if k > 4:
                raise ValueError("complex_gaussian moments implemented for k ≤ 4")
            return {1: 0.0, 2: v, 3: 0.0, 4: 3 * v * v}[k]
        if self.kind == "rademacher":
            return 0.0 if k % 2 else 1.0
        if self.kind == "uniform_centered":
            (h,) = self.params
            return 0.0 if k % 2 else h**k / (k + 1)
        # discrete table kinds
        pts = np.asarray(self.points)
        pr = np.asarray(self.probs)
        return float(np.sum(pr * pts**k))

    @property
    def mean(self) -> float:
        return self.moment(1)

    @property
    def variance(self) -> float:
        """Total variance (E|X|² − |EX|²; twice the component variance for complex)."""
        if self.kind == "complex_gaussian":
            return 2.0 * self.params[0]
        m1 = self.moment(1)
        return self.moment(2) - m1 * m1

    # ------------------------------------------------------------------
    # sampling
    # ------------------------------------------------------------------
    def sample(self, gen: np.random.Generator, size) -> np.ndarray:
        """Draw an array of scalars using the supplied generator."""
        if self.kind == "gaussian":
            m, v = self.params
            return m + np.sqrt(v) * gen.standard_normal(size)
        if self.kind == "complex_gaussian":
            (v,) = self.params
            s = np.sqrt(v)
            return s * gen.standard_normal(size) + 1j * s * gen.standard_normal(size)
        if self.kind == "rademacher":
            return 2.0 * gen.integers(0, 2, size=size).astype(np.float64) - 1.0
        if self.kind == "uniform_centered":
            (h,) = self.params
            return gen.uniform(-h, h, size=size)
        # discrete table kinds
        idx = gen.choice(len(self.points), size=size, p=self.probs)
        return np.asarray(self.points)[idx]
