"""
TLNM-TQR completion solver and recovery metrics.
"""
from .admm import update_factors, shrink_d, shrinkage_objective, reassemble_x, dual_step, tlnm_tqr
from .metrics import rmse, relative_error

__all__ = [
    "update_factors",
    "shrink_d",
    "shrinkage_objective",
    "reassemble_x",
    "dual_step",
    "tlnm_tqr",
    "rmse",
    "relative_error",
]
