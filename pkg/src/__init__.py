"""
tubal-completion: low-tubal-rank tensor completion with t-product algebra.
"""
__version__ = "1.0.0"
