"""
Tests for the TLNM-TQR building blocks and solver loop.
"""
import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from src.exceptions import ConfigError, EmptyMask, RangeError, ShapeMismatch
from src.models.completion import CompletionConfig
from src.models.synthetic import SynthSpec
from src.models.tensor import ObservationMask, RealTensor3
from src.algebra.fourier import dft_mode3
from src.algebra.norms import frobenius_norm, mask_project
from src.algebra.products import conj_transpose, identity_tensor, identity_tensor_rect, t_product, t_product_chain
from src.completion.admm import (
    update_factors,
    shrink_d,
    shrinkage_objective,
    reassemble_x,
    dual_step,
    tlnm_tqr,
)
from src.utils.random import synth_lowrank


def test_update_factors_identities(random_tensor):
    x_c = random_tensor(6, 5, 3)
    rr_k = identity_tensor_rect(3, 5, 3)
    l, rr, d_t = update_factors(x_c, rr_k)
    assert l.shape == (6, 3, 3) and rr.shape == (3, 5, 3) and d_t.shape == (3, 3, 3)
    lhs = t_product(conj_transpose(l), x_c)
    assert_allclose(lhs.data, t_product(d_t, rr).data, atol=1e-9)
    recomputed = t_product_chain(conj_transpose(l), x_c, conj_transpose(rr))
    assert_allclose(recomputed.data, d_t.data, atol=1e-9)


def test_update_factors_recovers_exact_rank():
    x_c = synth_lowrank(SynthSpec(m=8, n=7, p=3, r1=2, seed=11))
    rr = identity_tensor_rect(2, 7, 3)
    for _ in range(5):
        l, rr, d_t = update_factors(x_c, rr)
    residual = frobenius_norm(RealTensor3(data=t_product_chain(l, d_t, rr).data - x_c.data))
    assert residual <= 1e-8 * frobenius_norm(x_c)


def test_update_factors_identity_gives_unit_tubes():
    x_c = identity_tensor(4, 3)
    _, _, d_t = update_factors(x_c, identity_tensor_rect(4, 4, 3))
    slices = np.moveaxis(dft_mode3(d_t).data, 2, 0)
    assert_allclose(np.linalg.svd(slices, compute_uv=False), 1.0, atol=1e-8)


def test_update_factors_shape_checks(random_tensor):
    with pytest.raises(ShapeMismatch):
        update_factors(random_tensor(4, 5, 3), random_tensor(2, 4, 3))
    with pytest.raises(ShapeMismatch):
        update_factors(random_tensor(3, 5, 2), random_tensor(4, 5, 2))


def _column_norms(t: RealTensor3) -> np.ndarray:
    return np.linalg.norm(dft_mode3(t).data, axis=0)


def test_shrink_d_threshold_law(random_tensor):
    for mu in (0.1, 1.0, 10.0):
        d = random_tensor(4, 4, 5)
        before = _column_norms(d)
        after = _column_norms(shrink_d(d, mu))
        assert_allclose(after, np.maximum(before - 1.0 / mu, 0.0), atol=1e-10)


def test_shrink_d_keeps_zero_columns():
    assert_array_equal(shrink_d(RealTensor3.zeros(3, 3, 2), 1.0).data, 0.0)


def test_shrink_d_large_mu_returns_input(random_tensor):
    d = random_tensor(3, 3, 4)
    assert_allclose(shrink_d(d, 1e12).data, d.data, atol=1e-9)


def test_shrink_d_is_nonexpansive(random_tensor):
    for _ in range(20):
        a, b = random_tensor(3, 4, 3), random_tensor(3, 4, 3)
        gap = frobenius_norm(RealTensor3(data=shrink_d(a, 0.5).data - shrink_d(b, 0.5).data))
        assert gap <= frobenius_norm(RealTensor3(data=a.data - b.data)) + 1e-9


def test_shrink_d_minimizes_objective(rng):
    """The shrunk tensor beats random small perturbations of itself."""
    for _ in range(20):
        d_t = RealTensor3(data=rng.standard_normal((3, 3, 4)))
        mu = float(rng.uniform(0.2, 5.0))
        best = shrink_d(d_t, mu)
        best_value = shrinkage_objective(best, d_t, mu)
        for _ in range(1000):
            step = rng.standard_normal(best.shape)
            step *= 1e-3 / np.linalg.norm(step)
            trial = RealTensor3(data=best.data + step)
            assert shrinkage_objective(trial, d_t, mu) >= best_value - 1e-12


def test_shrink_d_rejects_non_positive_mu(random_tensor):
    with pytest.raises(RangeError):
        shrink_d(random_tensor(2, 2, 2), 0.0)


def test_reassemble_x_copies_observed_entries(random_tensor, rng):
    l, d, rr = random_tensor(4, 2, 3), random_tensor(2, 2, 3), random_tensor(2, 5, 3)
    m = random_tensor(4, 5, 3)
    omega = ObservationMask(data=rng.random((4, 5, 3)) < 0.4)
    x = reassemble_x(l, d, rr, m, omega)
    ldr = t_product_chain(l, d, rr)
    assert_array_equal(x.data[omega.data], m.data[omega.data])
    assert_allclose(x.data[~omega.data], ldr.data[~omega.data], atol=0)
    with pytest.raises(ShapeMismatch):
        reassemble_x(l, d, rr, random_tensor(4, 4, 3), ObservationMask.full(4, 4, 3))


def test_dual_step_schedule(random_tensor):
    y = RealTensor3.zeros(2, 2, 2)
    x, ldr = random_tensor(2, 2, 2), random_tensor(2, 2, 2)
    mu0, rho = 1e-2, 1.5
    mu = mu0
    for k in range(1, 101):
        y_next, mu_next = dual_step(y, mu, x, ldr, rho)
        assert_allclose(y_next.data, y.data + mu * (x.data - ldr.data), rtol=1e-15)
        y, mu = y_next, mu_next
        assert mu == pytest.approx(mu0 * rho ** k, rel=1e-12)


def test_dual_step_rejects_shrinking_penalty(random_tensor):
    a = random_tensor(2, 2, 2)
    with pytest.raises(RangeError):
        dual_step(a, 1.0, a, a, 0.5)


def _low_rank_problem(rng, n1=12, n2=12, n3=3, rank=2, observed=0.6):
    m1 = RealTensor3(data=rng.standard_normal((n1, rank, n3)))
    m2 = RealTensor3(data=rng.standard_normal((rank, n2, n3)))
    truth = t_product(m1, m2)
    omega = ObservationMask(data=rng.random((n1, n2, n3)) < observed)
    return truth, omega


def test_tlnm_tqr_fully_observed_returns_input(random_tensor):
    m = random_tensor(5, 4, 3)
    report = tlnm_tqr(m, ObservationMask.full(5, 4, 3), CompletionConfig(r=2))
    assert report.iterations == 1
    assert report.converged
    assert_array_equal(report.x.data, m.data)


def test_tlnm_tqr_trace_and_observed_entries(rng):
    truth, omega = _low_rank_problem(rng)
    cfg = CompletionConfig(r=3, mu0=1e-2, rho=1.5, eps=1e-14, max_iters=30)
    report = tlnm_tqr(mask_project(truth, omega), omega, cfg, truth=truth)
    assert report.iterations == len(report.trace) <= 30
    assert_array_equal(report.x.data[omega.data], truth.data[omega.data])
    for record in report.trace:
        assert record.mu == pytest.approx(1e-2 * 1.5 ** (record.k - 1), rel=1e-12)
        assert record.rmse is not None
    elapsed = [r.elapsed_ms for r in report.trace]
    assert elapsed == sorted(elapsed)


def test_tlnm_tqr_without_truth_has_blank_rmse(rng):
    truth, omega = _low_rank_problem(rng)
    report = tlnm_tqr(mask_project(truth, omega), omega, CompletionConfig(r=2, max_iters=3))
    assert all(r.rmse is None for r in report.trace)


def test_tlnm_tqr_stops_at_max_iters(rng):
    truth, omega = _low_rank_problem(rng)
    report = tlnm_tqr(truth, omega, CompletionConfig(r=2, eps=1e-300, max_iters=4))
    assert report.iterations == 4
    assert not report.converged


def test_tlnm_tqr_input_errors(random_tensor):
    m = random_tensor(4, 4, 2)
    with pytest.raises(EmptyMask):
        tlnm_tqr(m, ObservationMask.empty(4, 4, 2), CompletionConfig(r=2))
    with pytest.raises(ConfigError):
        tlnm_tqr(m, ObservationMask.full(4, 4, 2), CompletionConfig(r=5))
    with pytest.raises(ShapeMismatch):
        tlnm_tqr(m, ObservationMask.full(4, 4, 3), CompletionConfig(r=2))
    with pytest.raises(ShapeMismatch):
        tlnm_tqr(m, ObservationMask.full(4, 4, 2), CompletionConfig(r=2), truth=random_tensor(4, 4, 3))


def test_tlnm_tqr_is_deterministic(rng):
    truth, omega = _low_rank_problem(rng)
    cfg = CompletionConfig(r=2, max_iters=10)
    first = tlnm_tqr(truth, omega, cfg)
    second = tlnm_tqr(truth, omega, cfg)
    assert_array_equal(first.x.data, second.x.data)
