"""
Approximate t-SVD via QR decomposition (CTSVD-QR).

Runs the CSVD-QR iteration on every Fourier slice of the half spectrum in
lockstep, so that a reconstruction residual is available after each
iteration without an inverse transform (Parseval over the half spectrum).
"""
import math
from typing import Iterator, NamedTuple, Optional

import numpy as np
from loguru import logger

from ..config import DEFAULT_CSVD_ITERS
from ..models.factorization import FactorTriple
from ..models.tensor import RealTensor3
from ..algebra.fourier import half_spectrum, from_half_spectrum, parseval_weights
from .qr import check_iters, check_rank, csvd_qr_steps


class CTSVDIterate(NamedTuple):
    """Half-spectrum factors after iteration k and the residual ||a - l*d*rr||_F."""
    k: int
    l_hat: np.ndarray
    d_hat: np.ndarray
    r_hat: np.ndarray
    residual: float


def iterate_ctsvd_qr(a: RealTensor3, r: int, iters: int,
                     tol: Optional[float] = None) -> Iterator[CTSVDIterate]:
    """Yield CTSVD-QR iterates 1..iters.

    With tol set, iteration stops once the residual improves by less than
    tol * max(||a||_F, 1).
    """
    check_rank(r, a.n1, a.n2)
    check_iters(iters)
    half = half_spectrum(a)
    weights = parseval_weights(a.n3)
    scale = max(float(np.linalg.norm(a.data)), 1.0)

    previous = math.inf
    for k, (l_hat, d_hat, r_hat) in enumerate(csvd_qr_steps(half, r), start=1):
        slice_errors = np.linalg.norm(half - l_hat @ d_hat @ r_hat, axis=(1, 2)) ** 2
        residual = math.sqrt(max(float(weights @ slice_errors) / a.n3, 0.0))
        yield CTSVDIterate(k, l_hat, d_hat, r_hat, residual)
        if k >= iters:
            return
        if tol is not None and previous - residual < tol * scale:
            logger.debug(f"CTSVD-QR stopped early at iteration {k}, residual {residual:.3e}")
            return
        previous = residual


def factors_from_iterate(it: CTSVDIterate, r: int, n3: int) -> FactorTriple:
    """Transform half-spectrum factors back to real tensors."""
    return FactorTriple(
        l=from_half_spectrum(it.l_hat, n3),
        d=from_half_spectrum(it.d_hat, n3),
        rr=from_half_spectrum(it.r_hat, n3),
        r=r,
    )


def ctsvd_qr(a: RealTensor3, r: int, iters: int = DEFAULT_CSVD_ITERS,
             tol: Optional[float] = None) -> FactorTriple:
    """Approximate t-SVD a ~ l * d * rr with orthogonal l, rr.

    Args:
        a: n1 x n2 x n3 tensor.
        r: number of retained singular tubes, 1 <= r <= min(n1, n2).
        iters: number of CSVD-QR iterations per Fourier slice.
        tol: optional early-exit threshold on the residual improvement.

    Returns:
        FactorTriple: l (n1 x r x n3), d (r x r x n3), rr (r x n2 x n3).
    """
    last = None
    for last in iterate_ctsvd_qr(a, r, iters, tol):
        pass
    return factors_from_iterate(last, r, a.n3)


def off_diagonal_mass(d: RealTensor3) -> float:
    """Sum of squares of the entries d(i, j, k) with i != j."""
    off = ~np.eye(d.n1, d.n2, dtype=bool)
    return float((d.data[off] ** 2).sum())
