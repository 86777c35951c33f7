"""
Deterministic random generation for masks and synthetic tensors.

All draws come from numpy's Philox-4x64 generator, a 64-bit counter-based
PRNG whose stream depends only on the seed, so masks and synthetic tensors
are identical across platforms and thread counts. Draws are laid out in
storage order (row fastest, then column, then frontal slice).
"""
import numpy as np

from ..exceptions import RangeError
from ..models.synthetic import SynthSpec
from ..models.tensor import ObservationMask, RealTensor3
from ..algebra.products import t_product


def philox(seed: int) -> np.random.Generator:
    """Philox-backed generator for a nonnegative 64-bit seed."""
    if not 0 <= seed < 2**64:
        raise RangeError(f"seed must lie in [0, 2^64), got {seed}")
    return np.random.Generator(np.random.Philox(seed))


def gen_mask(n1: int, n2: int, n3: int, miss_rate: float, seed: int) -> ObservationMask:
    """Observe each entry independently with probability 1 - miss_rate.

    Args:
        n1, n2, n3: tensor dimensions.
        miss_rate: fraction of entries expected to be missing, in [0, 1).
        seed: Philox seed.

    Returns:
        ObservationMask: entry observed where its uniform draw is >= miss_rate.
    """
    if not 0.0 <= miss_rate < 1.0:
        raise RangeError(f"miss_rate must lie in [0, 1), got {miss_rate}")
    if min(n1, n2, n3) < 1:
        raise RangeError(f"dimensions must be positive, got {(n1, n2, n3)}")
    draws = philox(seed).random(n1 * n2 * n3).reshape((n1, n2, n3), order="F")
    return ObservationMask(data=draws >= miss_rate)


def _standard_normal(gen: np.random.Generator, shape) -> np.ndarray:
    return gen.standard_normal(int(np.prod(shape))).reshape(shape, order="F")


def synth_lowrank(spec: SynthSpec) -> RealTensor3:
    """x = m1 * m2 with m1 (m x r1 x p) and m2 (r1 x n x p) standard normal.

    m1 is drawn first, m2 next, from a single Philox stream.
    """
    gen = philox(spec.seed)
    m1 = RealTensor3(data=_standard_normal(gen, (spec.m, spec.r1, spec.p)))
    m2 = RealTensor3(data=_standard_normal(gen, (spec.r1, spec.n, spec.p)))
    return t_product(m1, m2)
