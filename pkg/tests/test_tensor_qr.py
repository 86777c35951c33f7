"""
Tests for the tensor QR factorization.
"""
import numpy as np
from numpy.testing import assert_allclose

from src.models.tensor import RealTensor3
from src.algebra.fourier import dft_mode3
from src.algebra.norms import frobenius_norm
from src.algebra.products import conj_transpose, identity_tensor, t_product
from src.factorization.tensor_qr import t_qr


def test_t_qr_contract(rng):
    """Reconstruction, orthogonality and triangular Fourier slices on random tensors."""
    for _ in range(100):
        n1, n2, n3 = int(rng.integers(1, 11)), int(rng.integers(1, 9)), int(rng.integers(1, 6))
        a = RealTensor3(data=rng.standard_normal((n1, n2, n3)))
        q, rr = t_qr(a)
        p = min(n1, n2)
        assert q.shape == (n1, p, n3)
        assert rr.shape == (p, n2, n3)
        residual = frobenius_norm(RealTensor3(data=t_product(q, rr).data - a.data))
        assert residual <= 1e-9 * frobenius_norm(a)
        gram = t_product(conj_transpose(q), q).data - identity_tensor(p, n3).data
        assert np.abs(gram).max() <= 1e-10
        r_hat = dft_mode3(rr).data
        lower = np.tril(np.ones((p, n2), dtype=bool), -1)
        assert np.abs(r_hat[lower]).max(initial=0.0) <= 1e-10 * max(1.0, np.abs(r_hat).max())


def test_t_qr_of_identity(rng):
    q, rr = t_qr(identity_tensor(4, 3))
    assert_allclose(t_product(q, rr).data, identity_tensor(4, 3).data, atol=1e-12)


def test_t_qr_n3_one_is_matrix_qr(rng):
    a = RealTensor3(data=rng.standard_normal((5, 3, 1)))
    q, rr = t_qr(a)
    assert_allclose(q.data[:, :, 0] @ rr.data[:, :, 0], a.data[:, :, 0], atol=1e-12)
    assert (np.diagonal(rr.data[:, :, 0]) >= 0).all()


def test_orthogonal_factor_preserves_norm(rng):
    for _ in range(30):
        n2, n3 = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        n1 = n2 + int(rng.integers(0, 5))
        q, _ = t_qr(RealTensor3(data=rng.standard_normal((n1, n2, n3))))
        assert np.abs(t_product(conj_transpose(q), q).data - identity_tensor(n2, n3).data).max() <= 1e-10
        b = RealTensor3(data=rng.standard_normal((n2, int(rng.integers(1, 5)), n3)))
        assert abs(frobenius_norm(t_product(q, b)) - frobenius_norm(b)) <= 1e-9
