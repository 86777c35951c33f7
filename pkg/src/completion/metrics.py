"""
Recovery metrics.
"""
import math

import numpy as np

from ..exceptions import ShapeMismatch
from ..models.tensor import RealTensor3


def rmse(x: RealTensor3, y: RealTensor3) -> float:
    """Root-mean-square error sqrt(||x - y||_F^2 / (n1 n2 n3))."""
    if x.shape != y.shape:
        raise ShapeMismatch(f"rmse: shapes {x.shape} and {y.shape} differ")
    diff = x.data - y.data
    return math.sqrt(float(np.vdot(diff, diff).real) / x.size)


def relative_error(x: RealTensor3, reference: RealTensor3) -> float:
    """||x - reference||_F / ||reference||_F; 0 when both vanish, inf when only the reference does."""
    if x.shape != reference.shape:
        raise ShapeMismatch(f"relative_error: shapes {x.shape} and {reference.shape} differ")
    num = float(np.linalg.norm((x.data - reference.data).ravel()))
    den = float(np.linalg.norm(reference.data.ravel()))
    if den == 0.0:
        return 0.0 if num == 0.0 else math.inf
    return num / den
