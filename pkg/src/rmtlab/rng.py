"""Reproducible random-number streams for Monte Carlo trials.

Every sampler in this package draws from an :class:`RngStream`, a thin
handle around a counter-based bit generator (Philox) keyed by
``(master_seed, stream_id)``.  Two streams with equal keys produce
bit-identical scalar sequences; streams with distinct ``stream_id`` are
independent by construction, so parallel trials can be reproduced
regardless of scheduling order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["RngStream"]

_U64 = np.uint64


@dataclass(frozen=True)
class RngStream:
    """Key for a deterministic, independent random stream.

    Parameters
    ----------
    master_seed : int
        64-bit unsigned experiment seed.
    stream_id : int
        64-bit unsigned substream index (typically the trial index).
    """

    master_seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name in ("master_seed", "stream_id"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or not 0 <= int(v) < 2**64:
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {v!r}")

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream.

        Each call returns a new :class:`numpy.random.Generator` whose
        Philox counter starts at zero, so the draw sequence depends only
        on the key — repeated calls replay identical bits.
        """
        key = np.array([self.master_seed, self.stream_id], dtype=_U64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, k: int) -> "RngStream":
        """Derive a related stream by offsetting ``stream_id`` (mod 2**64)."""
        return RngStream(self.master_seed, int((int(self.stream_id) + k) % 2**64))
