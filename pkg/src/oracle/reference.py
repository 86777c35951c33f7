"""
Dense reference constructions of the t-product algebra.

These evaluate the definitions literally (block circulant matrices, explicit
DFT matrices) and serve as ground truth for the FFT-based routines. They are
deliberately slow.
"""
from typing import Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import ShapeMismatch
from ..models.tensor import ComplexTensor3, RealTensor3


class BlockMatrix(BaseModel):
    """Dense matrix made of n1 x n2 blocks: n3 block rows and 1 or n3 block columns."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray
    n1: int = Field(ge=1)
    n2: int = Field(ge=1)
    n3: int = Field(ge=1)

    @model_validator(mode="after")
    def check_block_shape(self):
        rows, cols = self.matrix.shape
        if rows != self.n1 * self.n3 or cols not in (self.n2, self.n2 * self.n3):
            raise ValueError(
                f"matrix {self.matrix.shape} inconsistent with blocks ({self.n1}, {self.n2}, {self.n3})"
            )
        return self


def bcirc(a: RealTensor3) -> BlockMatrix:
    """Block circulant matrix: block (p, q) is frontal slice (p - q) mod n3."""
    n1, n2, n3 = a.shape
    out = np.zeros((n1 * n3, n2 * n3))
    for p in range(n3):
        for q in range(n3):
            out[p * n1:(p + 1) * n1, q * n2:(q + 1) * n2] = a.data[:, :, (p - q) % n3]
    return BlockMatrix(matrix=out, n1=n1, n2=n2, n3=n3)


def bdiag(a_hat: ComplexTensor3) -> BlockMatrix:
    """Block diagonal matrix of the frontal slices of a Fourier-domain tensor."""
    n1, n2, n3 = a_hat.shape
    out = np.zeros((n1 * n3, n2 * n3), dtype=np.complex128)
    for k in range(n3):
        out[k * n1:(k + 1) * n1, k * n2:(k + 1) * n2] = a_hat.data[:, :, k]
    return BlockMatrix(matrix=out, n1=n1, n2=n2, n3=n3)


def unfold(a: RealTensor3) -> BlockMatrix:
    """Stack the frontal slices vertically into an (n1 n3) x n2 matrix."""
    n1, n2, n3 = a.shape
    out = np.vstack([a.data[:, :, k] for k in range(n3)])
    return BlockMatrix(matrix=out, n1=n1, n2=n2, n3=n3)


def fold(u: Union[BlockMatrix, np.ndarray], n3: int) -> RealTensor3:
    """Inverse of unfold for an (n1 n3) x n2 matrix."""
    matrix = u.matrix if isinstance(u, BlockMatrix) else np.asarray(u)
    rows, n2 = matrix.shape
    if n3 < 1 or rows % n3 != 0:
        raise ShapeMismatch(f"cannot fold {rows} rows into {n3} frontal slices")
    n1 = rows // n3
    return RealTensor3.from_slices([np.real(matrix[k * n1:(k + 1) * n1, :]) for k in range(n3)])


def t_product_naive(a: RealTensor3, b: RealTensor3) -> RealTensor3:
    """fold(bcirc(a) . unfold(b)), evaluated densely."""
    if a.n2 != b.n1 or a.n3 != b.n3:
        raise ShapeMismatch(f"cannot t-multiply {a.shape} by {b.shape}")
    return fold(bcirc(a).matrix @ unfold(b).matrix, a.n3)


def dft_matrix(n: int) -> np.ndarray:
    """F_n with entries omega^(j k), omega = exp(-2 pi i / n)."""
    idx = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n)


def dft_naive(a: RealTensor3) -> ComplexTensor3:
    """Apply F_n3 to every tube by explicit matrix-vector products."""
    f = dft_matrix(a.n3)
    out = np.empty(a.shape, dtype=np.complex128)
    for i in range(a.n1):
        for j in range(a.n2):
            out[i, j, :] = f @ a.data[i, j, :]
    return ComplexTensor3(data=out)


def block_diagonalize(a: RealTensor3) -> np.ndarray:
    """(F_n3 kron I_n1) . bcirc(a) . (F_n3^-1 kron I_n2), which equals bdiag of the spectrum."""
    n1, n2, n3 = a.shape
    f = dft_matrix(n3)
    left = np.kron(f, np.eye(n1))
    right = np.kron(np.linalg.inv(f), np.eye(n2))
    return left @ bcirc(a).matrix @ right
