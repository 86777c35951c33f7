"""
Decomposition service: CTSVD-QR or truncated t-SVD with a reconstruction trace.
"""
import math
import time
from typing import Any, Dict, Optional

from loguru import logger

from .base import BaseService
from ..config import DEFAULT_CSVD_ITERS
from ..exceptions import UsageError
from ..models.decomposition import DecompositionRecord, DecompositionReport
from ..models.tensor import RealTensor3
from ..algebra.products import t_product_chain
from ..completion.metrics import rmse
from ..factorization.ctsvd import factors_from_iterate, iterate_ctsvd_qr
from ..factorization.qr import check_iters, check_rank
from ..factorization.tsvd import truncated_t_svd
from ..storage.diagnostics import write_csv

METHODS = ("ctsvd-qr", "t-svd")
DIAGNOSTICS_COLUMNS = ("iter", "rmse", "elapsed_ms")


class DecompositionService(BaseService[DecompositionReport]):
    """Runs a rank-r decomposition and writes its factors and trace."""

    def validate(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Validate method, rank and iteration count against the input shape."""
        if data["method"] not in METHODS:
            raise UsageError(f"unknown method {data['method']!r}, expected one of {METHODS}")
        n1, n2, _ = data["shape"]
        check_rank(data["rank"], n1, n2)
        check_iters(data["iters"])
        return data

    def run(self, a: RealTensor3, rank: int, iters: int = DEFAULT_CSVD_ITERS,
            method: str = "ctsvd-qr", tol: Optional[float] = None) -> DecompositionReport:
        """Decompose a into l * d * rr of tubal rank `rank`.

        With tol set, CTSVD-QR stops before `iters` once an iteration improves
        the residual by less than tol * max(||a||_F, 1).
        """
        self.validate({"method": method, "rank": rank, "iters": iters, "shape": a.shape})
        logger.info(f"Decomposing {a.shape} with {method}, rank {rank}")
        start = time.perf_counter()

        if method == "t-svd":
            factors = truncated_t_svd(a, rank)
            err = rmse(t_product_chain(factors.l, factors.d, factors.rr), a)
            trace = [DecompositionRecord(iter=1, rmse=err, elapsed_ms=(time.perf_counter() - start) * 1e3)]
            return DecompositionReport(method=method, factors=factors, trace=trace)

        trace = []
        last = None
        norm = math.sqrt(a.size)
        for last in iterate_ctsvd_qr(a, rank, iters, tol):
            trace.append(DecompositionRecord(
                iter=last.k,
                rmse=last.residual / norm,
                elapsed_ms=(time.perf_counter() - start) * 1e3,
            ))
        logger.info(f"CTSVD-QR finished: {last.k} iterations, rmse {trace[-1].rmse:.3e}")
        return DecompositionReport(method=method, factors=factors_from_iterate(last, rank, a.n3), trace=trace)

    def write_factors(self, report: DecompositionReport, out_l, out_d, out_r):
        """Write the three factors through the tensor storage."""
        self.storage.write(out_l, report.factors.l)
        self.storage.write(out_d, report.factors.d)
        self.storage.write(out_r, report.factors.rr)

    def write_diagnostics(self, report: DecompositionReport, path) -> int:
        rows = ((r.iter, r.rmse, r.elapsed_ms) for r in report.trace)
        return write_csv(path, DIAGNOSTICS_COLUMNS, rows)
