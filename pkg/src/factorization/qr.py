"""
Householder economy QR and the matrix CSVD-QR iteration.

LAPACK's Householder QR (through numpy.linalg.qr) is applied to single
matrices and to stacks of Fourier slices alike. The gauge is fixed so that
the diagonal of R is real and nonnegative.
"""
from typing import Iterator, Optional, Tuple

import numpy as np

from ..exceptions import NumericalError, RangeError, RankError, ShapeError
from ..models.factorization import QRPair


def qr_stack(stack: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Economy QR of every matrix in a (..., m, n) stack with nonnegative real diag(R)."""
    q, r = np.linalg.qr(stack, mode="reduced")
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    mag = np.abs(diag)
    phase = np.where(mag > 0, diag / np.where(mag > 0, mag, 1.0), 1.0)
    q = q * phase[..., np.newaxis, :]
    r = np.triu(r * np.conj(phase)[..., :, np.newaxis])
    return q, r


def economy_qr(a) -> QRPair:
    """Economy QR of a tall or square complex matrix.

    Args:
        a: m x n matrix with m >= n.

    Returns:
        QRPair: q (m x n) with orthonormal columns, r (n x n) upper triangular
        with nonnegative real diagonal.
    """
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ShapeError(f"economy_qr expects a matrix, got ndim={arr.ndim}")
    m, n = arr.shape
    if m < n:
        raise ShapeError(f"economy_qr expects m >= n, got {m} x {n}")
    if not np.isfinite(arr).all():
        raise NumericalError("economy_qr input contains NaN or Inf")
    q, r = qr_stack(arr)
    return QRPair(q=q, r=r)


def conj_t(stack: np.ndarray) -> np.ndarray:
    """Conjugate transpose of the last two axes."""
    return np.conj(np.swapaxes(stack, -1, -2))


def csvd_qr_steps(stack: np.ndarray, r: int) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Endless CSVD-QR iterates (l, d, rt) for every matrix of a (..., m, n) stack.

    Starts from L0 = eye(m, r), D0 = eye(r, r), R0 = eye(r, n). Each step is
    [L, ~] = qr(A R^*), [Q, T] = qr(A^* L), R = Q^*, D = T^*.
    """
    n = stack.shape[-1]
    rt = np.broadcast_to(np.eye(r, n, dtype=np.complex128), stack.shape[:-2] + (r, n))
    while True:
        l, _ = qr_stack(stack @ conj_t(rt))
        q_r, t = qr_stack(conj_t(stack) @ l)
        rt = conj_t(q_r)
        yield l, conj_t(t), rt


def check_rank(r: int, n1: int, n2: int):
    if not 1 <= r <= min(n1, n2):
        raise RankError(f"rank {r} outside [1, {min(n1, n2)}]")


def check_iters(iters: int):
    if iters < 1:
        raise RangeError(f"iteration count must be >= 1, got {iters}")


def csvd_qr(a, r: int, iters: int, tol: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CSVD-QR tri-factorization a ~ l d rt of a complex matrix.

    Args:
        a: m x n matrix.
        r: number of retained singular directions, 1 <= r <= min(m, n).
        iters: maximum number of iterations.
        tol: stop early once the residual improves by less than tol * ||a||_F.

    Returns:
        Tuple of l (m x r, orthonormal columns), d (r x r) and rt (r x n,
        orthonormal rows).
    """
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ShapeError(f"csvd_qr expects a matrix, got ndim={arr.ndim}")
    if not np.isfinite(arr).all():
        raise NumericalError("csvd_qr input contains NaN or Inf")
    check_rank(r, *arr.shape)
    check_iters(iters)

    scale = max(float(np.linalg.norm(arr)), 1.0)
    previous = np.inf
    for k, (l, d, rt) in enumerate(csvd_qr_steps(arr, r), start=1):
        if k >= iters:
            break
        if tol is not None:
            residual = float(np.linalg.norm(arr - l @ d @ rt))
            if previous - residual < tol * scale:
                break
            previous = residual
    return l, d, rt
