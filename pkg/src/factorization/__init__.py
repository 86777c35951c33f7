"""
QR-based factorizations: economy QR, CSVD-QR, t-QR, CTSVD-QR and truncated t-SVD.
"""
from .qr import economy_qr, csvd_qr
from .tensor_qr import t_qr
from .ctsvd import ctsvd_qr, iterate_ctsvd_qr, off_diagonal_mass
from .tsvd import truncated_t_svd

__all__ = [
    "economy_qr",
    "csvd_qr",
    "t_qr",
    "ctsvd_qr",
    "iterate_ctsvd_qr",
    "off_diagonal_mass",
    "truncated_t_svd",
]
