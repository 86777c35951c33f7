"""
Truncated t-SVD through LAPACK, the reference decomposition CTSVD-QR is
benchmarked against.
"""
import numpy as np

from ..models.factorization import FactorTriple
from ..models.tensor import RealTensor3
from ..algebra.fourier import half_spectrum, from_half_spectrum, self_conjugate_slices
from .qr import check_rank


def truncated_t_svd(a: RealTensor3, r: int) -> FactorTriple:
    """Leading r singular tubes of a as (U, S, V^*) in FactorTriple layout."""
    check_rank(r, a.n1, a.n2)
    half = half_spectrum(a)
    h = half.shape[0]
    u_hat = np.empty((h, a.n1, r), dtype=np.complex128)
    s_hat = np.zeros((h, r, r), dtype=np.complex128)
    vh_hat = np.empty((h, r, a.n2), dtype=np.complex128)
    real_slices = self_conjugate_slices(a.n3)
    for k in range(h):
        # Self-conjugate slices are real; keep their singular vectors real.
        block = half[k].real if k in real_slices else half[k]
        u, s, vh = np.linalg.svd(block, full_matrices=False)
        u_hat[k] = u[:, :r]
        s_hat[k][np.arange(r), np.arange(r)] = s[:r]
        vh_hat[k] = vh[:r, :]
    return FactorTriple(
        l=from_half_spectrum(u_hat, a.n3),
        d=from_half_spectrum(s_hat, a.n3),
        rr=from_half_spectrum(vh_hat, a.n3),
        r=r,
    )
