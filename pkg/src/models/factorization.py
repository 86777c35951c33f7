"""
Factorization result models.
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .tensor import RealTensor3


class QRPair(BaseModel):
    """Economy QR factors: q is m x p with orthonormal columns, r is p x n upper triangular."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    q: np.ndarray
    r: np.ndarray

    @field_validator("q", "r", mode="before")
    @classmethod
    def validate_matrix(cls, v):
        arr = np.array(v, dtype=np.complex128, order="F", copy=True)
        if arr.ndim != 2:
            raise ValueError(f"expected a matrix, got ndim={arr.ndim}")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def check_inner_dimension(self):
        if self.q.shape[1] != self.r.shape[0]:
            raise ValueError(f"q is {self.q.shape} but r is {self.r.shape}")
        return self


class FactorTriple(BaseModel):
    """Tri-factorization a ~ l * d * rr with l: n1 x r x n3, d: r x r x n3, rr: r x n2 x n3."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    l: RealTensor3
    d: RealTensor3
    rr: RealTensor3
    r: int = Field(ge=1)

    @model_validator(mode="after")
    def check_shapes(self):
        n1, r, n3 = self.l.shape
        if r != self.r:
            raise ValueError(f"l has {r} columns, expected rank {self.r}")
        if self.d.shape != (self.r, self.r, n3):
            raise ValueError(f"d has shape {self.d.shape}, expected {(self.r, self.r, n3)}")
        if self.rr.n1 != self.r or self.rr.n3 != n3:
            raise ValueError(f"rr has shape {self.rr.shape}, expected ({self.r}, n2, {n3})")
        return self

    @property
    def n1(self) -> int:
        return self.l.n1

    @property
    def n2(self) -> int:
        return self.rr.n2

    @property
    def n3(self) -> int:
        return self.l.n3
