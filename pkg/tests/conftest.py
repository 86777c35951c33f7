"""
Shared test fixtures for the tubal-completion toolkit.
"""
import pytest
import numpy as np
from unittest.mock import patch

from src.models.tensor import RealTensor3
from src.algebra.products import conj_transpose, t_product_chain
from src.factorization.tensor_qr import t_qr

# Mock environment variables
@pytest.fixture(autouse=True)
def mock_env_vars():
    """Mock environment variables for testing."""
    with patch.dict('os.environ', {
        'DEBUG': 'False',
        'LOG_LEVEL': 'INFO',
        'TUBAL_FFT_WORKERS': '1',
    }):
        yield

@pytest.fixture
def rng():
    """Seeded generator for test data."""
    return np.random.default_rng(20240607)

@pytest.fixture
def random_tensor(rng):
    """Factory for standard-normal tensors."""
    def make(n1, n2, n3):
        return RealTensor3(data=rng.standard_normal((n1, n2, n3)))
    return make

def separated_tensor(n1, n2, n3, sigmas, rng):
    """u * s * v^* with orthogonal u, v and singular tubes constant across Fourier slices.

    Every Fourier slice has the singular values `sigmas`, so the CSVD-QR
    iteration converges at the rate of the largest consecutive ratio.
    """
    p = len(sigmas)
    u, _ = t_qr(RealTensor3(data=rng.standard_normal((n1, p, n3))))
    v, _ = t_qr(RealTensor3(data=rng.standard_normal((n2, p, n3))))
    s = np.zeros((p, p, n3))
    s[np.arange(p), np.arange(p), 0] = sigmas
    return t_product_chain(u, RealTensor3(data=s), conj_transpose(v))

@pytest.fixture
def make_separated_tensor(rng):
    """Factory for tensors with geometrically decaying singular tubes 10 * 0.7^j."""
    def make(n1, n2, n3, p=None):
        p = min(n1, n2) if p is None else p
        return separated_tensor(n1, n2, n3, 10.0 * 0.7 ** np.arange(p), rng)
    return make

@pytest.fixture
def test_data_dir(tmp_path):
    """Create a temporary data directory for testing."""
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    return data_dir

@pytest.fixture
def log_messages():
    """Collect loguru messages at WARNING and above."""
    from loguru import logger
    messages = []
    handler_id = logger.add(lambda m: messages.append(m.record["message"]), level="WARNING")
    yield messages
    logger.remove(handler_id)
