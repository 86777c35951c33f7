"""
Norms, inner product and observed-entry projection.
"""
import numpy as np

from ..exceptions import ShapeMismatch
from ..models.tensor import RealTensor3, ObservationMask


def _check_same_shape(a, b, what: str):
    if a.shape != b.shape:
        raise ShapeMismatch(f"{what}: shapes {a.shape} and {b.shape} differ")


def frobenius_norm(a: RealTensor3) -> float:
    """Square root of the sum of squared entries."""
    return float(np.linalg.norm(a.data.ravel(order="F")))


def inner_product(a: RealTensor3, b: RealTensor3) -> float:
    """Sum over frontal slices of the matrix inner products."""
    _check_same_shape(a, b, "inner_product")
    return float(np.einsum("ijk,ijk->", a.data, b.data))


def l21_norm(x: RealTensor3) -> float:
    """Tensor L2,1 norm: sum of the Frobenius norms of the lateral slices x(:, j, :)."""
    return float(np.sqrt((x.data ** 2).sum(axis=(0, 2))).sum())


def mask_project(a: RealTensor3, omega: ObservationMask) -> RealTensor3:
    """Keep entries on Omega, zero elsewhere."""
    _check_same_shape(a, omega, "mask_project")
    return RealTensor3(data=np.where(omega.data, a.data, 0.0))
