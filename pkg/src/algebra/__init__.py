"""
Tensor algebra: mode-3 DFT, t-product, conjugate transpose, norms and masking.
"""
from .fourier import dft_mode3, idft_mode3
from .products import t_product, t_product_chain, conj_transpose, identity_tensor, identity_tensor_rect
from .norms import frobenius_norm, inner_product, l21_norm, mask_project

__all__ = [
    "dft_mode3",
    "idft_mode3",
    "t_product",
    "t_product_chain",
    "conj_transpose",
    "identity_tensor",
    "identity_tensor_rect",
    "frobenius_norm",
    "inner_product",
    "l21_norm",
    "mask_project",
]
