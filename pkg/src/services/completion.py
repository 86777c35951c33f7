"""
Completion service: single TLNM-TQR solves and miss-rate / depth sweeps.
"""
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from .base import BaseService
from ..config import DEFAULT_EPS_SCALE
from ..exceptions import RangeError
from ..models.completion import CompletionConfig, CompletionReport, SweepRecord
from ..models.tensor import ObservationMask, RealTensor3
from ..algebra.norms import mask_project
from ..completion.admm import tlnm_tqr
from ..completion.metrics import rmse
from ..storage.diagnostics import write_csv
from ..utils.random import gen_mask

DIAGNOSTICS_COLUMNS = ("iter", "residual", "mu", "rmse_vs_truth", "elapsed_ms")
SWEEP_COLUMNS = ("miss_rate", "depth", "iterations", "rmse", "elapsed_ms")


class CompletionService(BaseService[CompletionReport]):
    """Runs the completion solver and writes its outputs."""

    def __init__(self, storage, eps_scale: float = DEFAULT_EPS_SCALE):
        super().__init__(storage)
        self.eps_scale = eps_scale

    def validate(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Check sweep miss rates and depths against the input depth."""
        for rate in data.get("miss_rates", ()):
            if not 0.0 <= rate < 1.0:
                raise RangeError(f"miss rate {rate} outside [0, 1)")
        for depth in data.get("depths", ()):
            if not 1 <= depth <= data["n3"]:
                raise RangeError(f"depth {depth} outside [1, {data['n3']}]")
        return data

    def run(self, a: RealTensor3, omega: ObservationMask, cfg: CompletionConfig,
            truth: Optional[RealTensor3] = None) -> CompletionReport:
        """Complete a from its entries on omega."""
        return tlnm_tqr(a, omega, cfg, truth=truth, eps_scale=self.eps_scale)

    def sweep(self, a: RealTensor3, miss_rates: Sequence[float], cfg: CompletionConfig,
              depths: Optional[Sequence[int]] = None) -> List[SweepRecord]:
        """Solve for every (depth, miss rate) pair, measuring RMSE against a.

        A depth d keeps the first d frontal slices; masks are drawn with cfg.seed.
        """
        depths = list(depths) if depths else [a.n3]
        self.validate({"miss_rates": miss_rates, "depths": depths, "n3": a.n3})
        records = []
        for depth in depths:
            sub = RealTensor3(data=a.data[:, :, :depth])
            for rate in miss_rates:
                omega = gen_mask(sub.n1, sub.n2, sub.n3, rate, cfg.seed)
                report = self.run(mask_project(sub, omega), omega, cfg)
                record = SweepRecord(
                    miss_rate=rate,
                    depth=depth,
                    iterations=report.iterations,
                    rmse=rmse(report.x, sub),
                    elapsed_ms=report.trace[-1].elapsed_ms,
                )
                logger.info(f"sweep depth={depth} miss_rate={rate}: rmse={record.rmse:.6f} "
                            f"after {record.iterations} iterations")
                records.append(record)
        return records

    def write_diagnostics(self, report: CompletionReport, path) -> int:
        rows = ((r.k, r.residual, r.mu, r.rmse, r.elapsed_ms) for r in report.trace)
        return write_csv(path, DIAGNOSTICS_COLUMNS, rows)

    def write_sweep(self, records: Sequence[SweepRecord], path) -> int:
        rows = ((r.miss_rate, r.depth, r.iterations, r.rmse, r.elapsed_ms) for r in records)
        return write_csv(path, SWEEP_COLUMNS, rows)
