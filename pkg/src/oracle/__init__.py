"""
Dense reference implementations used to verify the production routines.
"""
from .reference import BlockMatrix, bcirc, bdiag, unfold, fold, t_product_naive, dft_matrix, dft_naive, block_diagonalize
from .svd import SIZE_CAP, jacobi_svd, t_svd_ref, tubal_rank, nuclear_norm_tensor
from .verify import CheckResult, run_verification

__all__ = [
    "BlockMatrix",
    "bcirc",
    "bdiag",
    "unfold",
    "fold",
    "t_product_naive",
    "dft_matrix",
    "dft_naive",
    "block_diagonalize",
    "SIZE_CAP",
    "jacobi_svd",
    "t_svd_ref",
    "tubal_rank",
    "nuclear_norm_tensor",
    "CheckResult",
    "run_verification",
]
