"""
Synthetic data model.
"""
from typing import ClassVar, Type

from pydantic import ConfigDict, Field, model_validator

from ..exceptions import RangeError
from .base import ValidatedModel


class SynthSpec(ValidatedModel):
    """Low-tubal-rank construction x = m1 * m2 with m1: m x r1 x p, m2: r1 x n x p."""

    model_config = ConfigDict(frozen=True)
    error_type: ClassVar[Type[RangeError]] = RangeError

    m: int = Field(ge=1)
    n: int = Field(ge=1)
    p: int = Field(ge=1)
    r1: int = Field(ge=1)
    seed: int = Field(default=0, ge=0, le=2**64 - 1)

    @model_validator(mode="after")
    def check_rank(self):
        if self.r1 > min(self.m, self.n):
            raise ValueError(f"tubal rank {self.r1} exceeds min(m, n) = {min(self.m, self.n)}")
        return self
