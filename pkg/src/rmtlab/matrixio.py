"""Dense matrix payload type and its plain-text file format.

The on-disk format is one header line

    rmt-matrix v1 <rows> <cols> <real|complex>

followed by one line per row of whitespace-separated decimals written
with 17 significant digits (``re im`` pairs for complex entries), which
round-trips IEEE doubles exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["DenseMatrix", "write_matrix", "read_matrix"]

_HEADER_TAG = "rmt-matrix"
_FORMAT_VERSION = "v1"


@dataclass(frozen=True)
class DenseMatrix:
    """A real or complex dense matrix with row-major storage."""

    array: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.array)
        if a.ndim != 2:
            raise ValueError(f"DenseMatrix requires a 2-D array, got shape {a.shape}")
        if np.iscomplexobj(a):
            a = np.ascontiguousarray(a, dtype=np.complex128)
        else:
            a = np.ascontiguousarray(a, dtype=np.float64)
        object.__setattr__(self, "array", a)

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple:
        return self.array.shape

    @property
    def scalar_field(self) -> str:
        return "complex" if np.iscomplexobj(self.array) else "real"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def write_matrix(m: DenseMatrix, path) -> None:
    """Serialize a matrix in the ``rmt-matrix v1`` text format."""
    a = m.array
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{_HEADER_TAG} {_FORMAT_VERSION} {m.rows} {m.cols} {m.scalar_field}\n")
        if m.scalar_field == "complex":
            for row in a:
                fh.write(" ".join(f"{z.real:.17g} {z.imag:.17g}" for z in row) + "\n")
        else:
            for row in a:
                fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")


def read_matrix(path) -> DenseMatrix:
    """Parse a matrix written by :func:`write_matrix`."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().split()
        if len(header) != 5 or header[0] != _HEADER_TAG or header[1] != _FORMAT_VERSION:
            raise ValueError(f"{path}: not an {_HEADER_TAG} {_FORMAT_VERSION} file")
        rows, cols = int(header[2]), int(header[3])
        kind = header[4]
        if kind not in ("real", "complex"):
            raise ValueError(f"{path}: unknown scalar field {kind!r}")
        data = np.loadtxt(fh, dtype=np.float64, ndmin=2)
    per_row = cols * (2 if kind == "complex" else 1)
    if data.shape != (rows, per_row):
        raise ValueError(
            f"{path}: expected {rows}×{per_row} numbers, got {data.shape[0]}×{data.shape[1]}"
        )
    if kind == "complex":
        a = data[:, 0::2] + 1j * data[:, 1::2]
    else:
        a = data
    return DenseMatrix(a)
