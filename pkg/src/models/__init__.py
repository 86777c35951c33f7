"""
Data models for tensors, factorizations and solver runs.
"""
from .tensor import RealTensor3, ComplexTensor3, ObservationMask
from .factorization import QRPair, FactorTriple
from .completion import CompletionConfig, CompletionState, IterationRecord, CompletionReport, SweepRecord
from .decomposition import DecompositionRecord, DecompositionReport
from .synthetic import SynthSpec

__all__ = [
    "RealTensor3",
    "ComplexTensor3",
    "ObservationMask",
    "QRPair",
    "FactorTriple",
    "CompletionConfig",
    "CompletionState",
    "IterationRecord",
    "CompletionReport",
    "SweepRecord",
    "DecompositionRecord",
    "DecompositionReport",
    "SynthSpec",
]
