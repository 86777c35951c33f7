"""
Completion solver models: configuration, iteration state and report.
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .base import ValidatedModel
from .tensor import RealTensor3


class CompletionConfig(ValidatedModel):
    """Parameters of the ADMM completion solver; invalid values raise ConfigError."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=1)
    mu0: float = Field(default=1e-2, gt=0)
    rho: float = Field(default=1.5, ge=1)
    eps: Optional[float] = Field(default=None, gt=0)
    max_iters: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)

    def resolved_eps(self, n1: int, n2: int, n3: int, eps_scale: float = 1e-7) -> float:
        """Residual tolerance; defaults to eps_scale * n1 * n2 * n3 when unset."""
        if self.eps is not None:
            return self.eps
        return eps_scale * n1 * n2 * n3


class CompletionState(BaseModel):
    """Mutable ADMM iterate, confined to a single solve."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    l: RealTensor3
    d: RealTensor3
    rr: RealTensor3
    x: RealTensor3
    y: RealTensor3
    mu: float = Field(gt=0)
    k: int = Field(default=0, ge=0)


class IterationRecord(BaseModel):
    """Diagnostics of one solver iteration."""

    k: int = Field(ge=1)
    residual: float = Field(ge=0)
    mu: float
    rmse: Optional[float] = None
    elapsed_ms: float = Field(ge=0)


class CompletionReport(BaseModel):
    """Recovered tensor plus per-iteration diagnostics."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    x: RealTensor3
    iterations: int = Field(ge=0)
    trace: List[IterationRecord] = Field(default_factory=list)
    converged: bool = False

    @model_validator(mode="after")
    def check_trace_length(self):
        if len(self.trace) != self.iterations:
            raise ValueError(f"trace has {len(self.trace)} records for {self.iterations} iterations")
        return self

    @property
    def final_residual(self) -> Optional[float]:
        return self.trace[-1].residual if self.trace else None


class SweepRecord(BaseModel):
    """One solve of a parameter sweep."""

    miss_rate: float = Field(ge=0, lt=1)
    depth: int = Field(ge=1)
    iterations: int = Field(ge=0)
    rmse: float = Field(ge=0)
    elapsed_ms: float = Field(ge=0)
