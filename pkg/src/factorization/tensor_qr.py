"""
Tensor QR factorization (t-QR).
"""
from typing import Tuple

from ..models.tensor import RealTensor3
from ..algebra.fourier import half_spectrum, from_half_spectrum
from .qr import qr_stack


def t_qr(a: RealTensor3) -> Tuple[RealTensor3, RealTensor3]:
    """Economy t-QR a = q * rr.

    Householder QR of every Fourier slice in the half spectrum, conjugate
    fill of the remaining slices, inverse transform.

    Args:
        a: n1 x n2 x n3 tensor.

    Returns:
        Tuple of q (n1 x p x n3, q^* * q = I) and rr (p x n2 x n3, Fourier
        slices upper triangular), p = min(n1, n2).
    """
    q_hat, r_hat = qr_stack(half_spectrum(a))
    return from_half_spectrum(q_hat, a.n3), from_half_spectrum(r_hat, a.n3)
