"""
Tests for the mode-3 Fourier transform module.
"""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from src.exceptions import SymmetryViolation
from src.models.tensor import ComplexTensor3, RealTensor3
from src.algebra.fourier import (
    dft_mode3,
    idft_mode3,
    discard_imaginary,
    half_length,
    half_spectrum,
    mirror_half_spectrum,
    from_half_spectrum,
    parseval_weights,
    self_conjugate_slices,
)
from src.algebra.norms import frobenius_norm, inner_product
from src.oracle.reference import dft_naive


@pytest.mark.parametrize("n3", [1, 2, 3, 4, 7, 11, 13, 16])
def test_dft_matches_explicit_matrix(random_tensor, n3):
    """FFT agrees with the explicit DFT matrix, prime lengths included."""
    a = random_tensor(3, 2, n3)
    assert_allclose(dft_mode3(a).data, dft_naive(a).data, atol=1e-11)


def test_dft_of_constant_tube():
    """A constant tube transforms to a spike at slice 0."""
    a = RealTensor3(data=np.full((1, 1, 4), 2.0))
    assert_allclose(dft_mode3(a).data[0, 0], [8, 0, 0, 0], atol=1e-14)


def test_n3_one_is_identity(random_tensor):
    a = random_tensor(3, 4, 1)
    assert_allclose(dft_mode3(a).data.real, a.data)
    assert_array_equal(dft_mode3(a).data.imag, 0)


def test_idft_inverts_dft(random_tensor):
    for n3 in (1, 2, 5, 8, 9):
        a = random_tensor(4, 3, n3)
        assert_allclose(idft_mode3(dft_mode3(a)).data, a.data, atol=1e-12)


def test_round_trip_property(rng):
    for _ in range(100):
        shape = tuple(int(v) for v in rng.integers(1, 9, size=3))
        a = RealTensor3(data=rng.standard_normal(shape))
        assert_allclose(idft_mode3(dft_mode3(a)).data, a.data, atol=1e-12)


def test_half_spectrum_layout(random_tensor):
    for n3 in (1, 4, 5):
        a = random_tensor(3, 2, n3)
        half = half_spectrum(a)
        assert half.shape == (half_length(n3), 3, 2)
        full = dft_mode3(a).data
        for k in range(half_length(n3)):
            assert_allclose(half[k], full[:, :, k], atol=1e-12)
        assert_allclose(mirror_half_spectrum(half, n3), full, atol=1e-12)
        assert_allclose(from_half_spectrum(half, n3).data, a.data, atol=1e-12)


def test_half_length_and_weights():
    assert [half_length(n) for n in (1, 2, 3, 4, 5)] == [1, 2, 2, 3, 3]
    assert_array_equal(parseval_weights(1), [1])
    assert_array_equal(parseval_weights(2), [1, 1])
    assert_array_equal(parseval_weights(4), [1, 2, 1])
    assert_array_equal(parseval_weights(5), [1, 2, 2])
    assert self_conjugate_slices(4) == (0, 2)
    assert self_conjugate_slices(5) == (0,)
    assert self_conjugate_slices(1) == (0,)


def test_parseval_and_inner_product(rng):
    """Frobenius norm and inner product survive the transform with a 1/n3 factor."""
    for _ in range(100):
        n1, n2, n3 = rng.integers(1, 9, size=3)
        a = RealTensor3(data=rng.standard_normal((n1, n2, n3)))
        b = RealTensor3(data=rng.standard_normal((n1, n2, n3)))
        a_hat, b_hat = dft_mode3(a).data, dft_mode3(b).data
        assert abs(frobenius_norm(a) - np.linalg.norm(a_hat) / math.sqrt(n3)) <= 1e-10
        spectral = float(np.vdot(a_hat, b_hat).real) / n3
        assert abs(inner_product(a, b) - spectral) <= 1e-10


def test_conjugate_symmetry_of_spectrum(random_tensor):
    a = random_tensor(2, 3, 6)
    full = dft_mode3(a).data
    for k in range(1, 6):
        assert_allclose(full[:, :, k], np.conj(full[:, :, 6 - k]), atol=1e-12)


def test_small_residue_dropped_silently(log_messages):
    z = np.full((2, 2, 2), 1.0 + 1e-12j)
    assert_array_equal(discard_imaginary(z), np.ones((2, 2, 2)))
    assert log_messages == []


def test_moderate_residue_warns(log_messages):
    z = np.full((2, 2, 2), 1.0 + 1e-9j)
    assert_array_equal(discard_imaginary(z), np.ones((2, 2, 2)))
    assert len(log_messages) == 1
    assert "imaginary residue" in log_messages[0]


def test_residue_threshold_is_relative_to_scale():
    z = np.full((1, 1, 1), 200.0 + 1e-7j)
    assert_array_equal(discard_imaginary(z), [[[200.0]]])


def test_asymmetric_spectrum_rejected():
    hat = np.zeros((1, 1, 3), dtype=complex)
    hat[0, 0, 1] = 1.0
    with pytest.raises(SymmetryViolation):
        idft_mode3(ComplexTensor3(data=hat))


def test_mirror_rejects_wrong_half_length():
    with pytest.raises(ValueError):
        mirror_half_spectrum(np.zeros((2, 1, 1), dtype=complex), 5)
