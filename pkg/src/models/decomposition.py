"""
Decomposition run models.
"""
from typing import List

from pydantic import BaseModel, Field

from .factorization import FactorTriple


class DecompositionRecord(BaseModel):
    """Reconstruction error after one decomposition iteration."""

    iter: int = Field(ge=1)
    rmse: float = Field(ge=0)
    elapsed_ms: float = Field(ge=0)


class DecompositionReport(BaseModel):
    """Factors plus the per-iteration reconstruction trace."""

    method: str
    factors: FactorTriple
    trace: List[DecompositionRecord] = Field(default_factory=list)
