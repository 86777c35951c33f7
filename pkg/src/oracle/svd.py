"""
One-sided Jacobi SVD and the reference t-SVD built on it.
"""
import math
from typing import Tuple

import numpy as np

from ..exceptions import SizeGuard
from ..models.tensor import RealTensor3
from ..algebra.fourier import dft_mode3, half_spectrum, from_half_spectrum, self_conjugate_slices

SIZE_CAP = 64
MAX_SWEEPS = 60


def _check_size(n1: int, n2: int):
    if min(n1, n2) > SIZE_CAP:
        raise SizeGuard(f"reference routines are capped at min(n1, n2) <= {SIZE_CAP}, got {min(n1, n2)}")


def _complete_basis(u: np.ndarray, good: int) -> np.ndarray:
    # Replace columns good.. with an orthonormal complement of the first good columns.
    m, n = u.shape
    q, _ = np.linalg.qr(np.hstack([u[:, :good], np.eye(m, dtype=u.dtype)]))
    u = u.copy()
    u[:, good:] = q[:, good:n]
    return u


def jacobi_svd(a) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One-sided (Hestenes) Jacobi SVD, a = u diag(s) v^*.

    Args:
        a: m x n real or complex matrix with min(m, n) <= 64.

    Returns:
        Tuple of u (m x p), s (p, descending), v (n x p), p = min(m, n).
    """
    arr = np.array(a, dtype=np.complex128)
    m, n = arr.shape
    _check_size(m, n)
    if m < n:
        u, s, v = jacobi_svd(np.conj(arr.T))
        return v, s, u

    work = arr.copy()
    v = np.eye(n, dtype=np.complex128)
    tol = np.finfo(float).eps * m
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                ap = work[:, p].copy()
                aq = work[:, q]
                alpha = float(np.vdot(ap, ap).real)
                beta = float(np.vdot(aq, aq).real)
                gamma = np.vdot(ap, aq)
                g = abs(gamma)
                if g == 0.0 or g <= tol * math.sqrt(alpha * beta):
                    continue
                rotated = True
                phase = np.conj(gamma / g)
                zeta = (beta - alpha) / (2.0 * g)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                aq = aq * phase
                work[:, p] = c * ap - s * aq
                work[:, q] = s * ap + c * aq
                vp = v[:, p].copy()
                vq = v[:, q] * phase
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        if not rotated:
            break

    sigma = np.linalg.norm(work, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    work = work[:, order]
    v = v[:, order]
    cutoff = sigma[0] * 1e-14 if sigma[0] > 0 else 0.0
    good = int(np.count_nonzero(sigma > cutoff)) if sigma[0] > 0 else 0
    u = np.zeros_like(work)
    u[:, :good] = work[:, :good] / sigma[:good]
    if good < n:
        u = _complete_basis(u, good)
    return u, sigma, v


def t_svd_ref(a: RealTensor3) -> Tuple[RealTensor3, RealTensor3, RealTensor3]:
    """Economy t-SVD a = u * s * v^* by Jacobi SVD of every Fourier slice.

    Returns:
        Tuple of u (n1 x p x n3), s (p x p x n3, f-diagonal), v (n2 x p x n3).
    """
    n1, n2, n3 = a.shape
    _check_size(n1, n2)
    p = min(n1, n2)
    half = half_spectrum(a)
    h = half.shape[0]
    u_hat = np.empty((h, n1, p), dtype=np.complex128)
    s_hat = np.zeros((h, p, p), dtype=np.complex128)
    v_hat = np.empty((h, n2, p), dtype=np.complex128)
    real_slices = self_conjugate_slices(n3)
    for k in range(h):
        block = half[k].real if k in real_slices else half[k]
        u, s, v = jacobi_svd(block)
        u_hat[k] = u
        s_hat[k][np.arange(p), np.arange(p)] = s
        v_hat[k] = v
    return (from_half_spectrum(u_hat, n3),
            from_half_spectrum(s_hat, n3),
            from_half_spectrum(v_hat, n3))


def tubal_rank(a: RealTensor3, tol: float = 1e-8) -> int:
    """Number of singular tubes whose largest Fourier-domain value exceeds tol * sigma_max."""
    _, s, _ = t_svd_ref(a)
    p = s.n1
    s_hat = dft_mode3(s).data
    peaks = np.abs(s_hat[np.arange(p), np.arange(p), :]).max(axis=1)
    largest = float(peaks.max())
    if largest == 0.0:
        return 0
    return int(np.count_nonzero(peaks > tol * largest))


def nuclear_norm_tensor(a: RealTensor3) -> float:
    """(1/n3) times the sum of singular values over all Fourier slices."""
    _check_size(a.n1, a.n2)
    a_hat = dft_mode3(a).data
    total = sum(float(jacobi_svd(a_hat[:, :, k])[1].sum()) for k in range(a.n3))
    return total / a.n3
