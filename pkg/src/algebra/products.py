"""
The t-product and the structural tensors of the t-product algebra.
"""
from functools import reduce

import numpy as np

from ..exceptions import ShapeMismatch
from ..models.tensor import RealTensor3
from .fourier import half_spectrum, from_half_spectrum


def t_product(a: RealTensor3, b: RealTensor3) -> RealTensor3:
    """Compute a * b = fold(bcirc(a) . unfold(b)).

    Evaluated as slice-wise matrix products of the Fourier slices followed by
    the inverse transform.

    Args:
        a: n1 x n2 x n3 tensor.
        b: n2 x l x n3 tensor.

    Returns:
        RealTensor3: n1 x l x n3 product.
    """
    if a.n2 != b.n1 or a.n3 != b.n3:
        raise ShapeMismatch(f"cannot t-multiply {a.shape} by {b.shape}")
    return from_half_spectrum(half_spectrum(a) @ half_spectrum(b), a.n3)


def t_product_chain(*tensors: RealTensor3) -> RealTensor3:
    """Left-to-right t-product of two or more tensors."""
    if len(tensors) < 2:
        raise ValueError("t_product_chain needs at least two operands")
    for left, right in zip(tensors, tensors[1:]):
        if left.n2 != right.n1 or left.n3 != right.n3:
            raise ShapeMismatch(f"cannot t-multiply {left.shape} by {right.shape}")
    halves = [half_spectrum(t) for t in tensors]
    return from_half_spectrum(reduce(np.matmul, halves), tensors[0].n3)


def conj_transpose(a: RealTensor3) -> RealTensor3:
    """Transpose every frontal slice and reverse the order of slices 2..n3."""
    order = (-np.arange(a.n3)) % a.n3
    return RealTensor3(data=a.data.transpose(1, 0, 2)[:, :, order])


def identity_tensor(n: int, n3: int) -> RealTensor3:
    """n x n x n3 identity: first frontal slice I_n, all others zero."""
    return identity_tensor_rect(n, n, n3)


def identity_tensor_rect(m: int, n: int, n3: int) -> RealTensor3:
    """m x n x n3 tensor whose first frontal slice is eye(m, n)."""
    if min(m, n, n3) < 1:
        raise ValueError(f"dimensions must be positive, got ({m}, {n}, {n3})")
    data = np.zeros((m, n, n3), order="F")
    data[:, :, 0] = np.eye(m, n)
    return RealTensor3(data=data)
