"""
Mode-3 discrete Fourier transform of third-order tensors.

The forward transform is unnormalized (omega = exp(-2*pi*i/n3)); the inverse
carries the 1/n3 factor. scipy.fft handles every length n3 (mixed radix with
Bluestein fallback for large prime factors).

Fourier-domain routines work on the half spectrum, the first n3 // 2 + 1
frontal slices, held as a C-contiguous stack of shape (h, n1, n2) so that
slice-wise matrix products broadcast. The remaining slices follow from
conjugate symmetry: slice k equals conj(slice n3 - k) (0-based).
"""
import numpy as np
import scipy.fft
from loguru import logger

from ..config import FFT_WORKERS
from ..exceptions import SymmetryViolation
from ..models.tensor import RealTensor3, ComplexTensor3

# Imaginary residue left by an inverse transform, relative to max(1, |real|max).
DISCARD_TOL = 1e-10
ERROR_TOL = 1e-8


def half_length(n3: int) -> int:
    """Number of Fourier slices computed explicitly, i.e. ceil((n3 + 1) / 2)."""
    return n3 // 2 + 1


def self_conjugate_slices(n3: int) -> tuple:
    """Half-spectrum slices that equal their own conjugate (DC, and Nyquist for even n3)."""
    return (0, n3 // 2) if n3 % 2 == 0 and n3 > 1 else (0,)


def parseval_weights(n3: int) -> np.ndarray:
    """Multiplicity of each half-spectrum slice within the full spectrum."""
    weights = np.full(half_length(n3), 2.0)
    weights[0] = 1.0
    if n3 % 2 == 0:
        weights[-1] = 1.0
    return weights


def dft_mode3(a: RealTensor3) -> ComplexTensor3:
    """Unnormalized DFT of every tube a(i, j, :)."""
    return ComplexTensor3(data=scipy.fft.fft(a.data, axis=2, workers=FFT_WORKERS))


def idft_mode3(a: ComplexTensor3) -> RealTensor3:
    """Inverse of dft_mode3; the input must be conjugate symmetric along mode 3."""
    z = scipy.fft.ifft(a.data, axis=2, workers=FFT_WORKERS)
    return RealTensor3(data=discard_imaginary(z))


def discard_imaginary(z: np.ndarray) -> np.ndarray:
    """Drop the imaginary residue of an inverse transform.

    Residue up to DISCARD_TOL is dropped silently, up to ERROR_TOL with a
    warning; anything larger means conjugate symmetry was broken upstream.
    """
    real = np.ascontiguousarray(z.real)
    residue = float(np.abs(z.imag).max()) if z.size else 0.0
    scale = max(1.0, float(np.abs(real).max()) if z.size else 0.0)
    if residue > ERROR_TOL * scale:
        raise SymmetryViolation(
            f"imaginary residue {residue:.3e} exceeds {ERROR_TOL:.0e} (scale {scale:.3e}); "
            "spectrum is not conjugate symmetric"
        )
    if residue > DISCARD_TOL * scale:
        logger.warning(f"Discarding imaginary residue {residue:.3e} after inverse transform")
    return real


def half_spectrum(a: RealTensor3) -> np.ndarray:
    """Fourier slices 0..h-1 of a as an (h, n1, n2) complex stack."""
    hat = scipy.fft.rfft(a.data, axis=2, workers=FFT_WORKERS)
    return np.ascontiguousarray(np.moveaxis(hat, 2, 0))


def mirror_half_spectrum(half: np.ndarray, n3: int) -> np.ndarray:
    """Complete an (h, m, n) half spectrum into the full (m, n, n3) spectrum."""
    h = half.shape[0]
    if h != half_length(n3):
        raise ValueError(f"half spectrum has {h} slices, expected {half_length(n3)} for n3={n3}")
    full = np.empty(half.shape[1:] + (n3,), dtype=np.complex128, order="F")
    for k in range(h):
        full[:, :, k] = half[k]
    for k in range(h, n3):
        full[:, :, k] = np.conj(half[n3 - k])
    return full


def from_half_spectrum(half: np.ndarray, n3: int) -> RealTensor3:
    """Mirror a half spectrum and transform it back to a real tensor."""
    return idft_mode3(ComplexTensor3(data=mirror_half_spectrum(half, n3)))
