"""
Dense third-order tensor models.

Entries are stored as numpy arrays of shape (n1, n2, n3) in Fortran order:
row index fastest, then column, then frontal slice. Frontal slices are
contiguous and tubes are strided by n1*n2.
"""
from typing import ClassVar, Tuple, Type

import numpy as np
from pydantic import ConfigDict, field_validator

from ..exceptions import NumericalError, RangeError, ShapeMismatch
from .base import ValidatedModel


def _as_frozen_array(value, dtype) -> np.ndarray:
    arr = np.array(value, dtype=dtype, order="F", copy=True)
    if arr.ndim != 3:
        raise ShapeMismatch(f"expected a third-order array, got ndim={arr.ndim}")
    if min(arr.shape) < 1:
        raise ShapeMismatch(f"all dimensions must be positive, got {arr.shape}")
    arr.setflags(write=False)
    return arr


class _Tensor3(ValidatedModel):
    """Shared shape accessors for the third-order carriers."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
    error_type: ClassVar[Type[ShapeMismatch]] = ShapeMismatch

    data: np.ndarray

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.data.shape

    @property
    def n1(self) -> int:
        return self.data.shape[0]

    @property
    def n2(self) -> int:
        return self.data.shape[1]

    @property
    def n3(self) -> int:
        return self.data.shape[2]

    @property
    def size(self) -> int:
        return self.data.size

    def frontal_slice(self, k: int) -> np.ndarray:
        """Return frontal slice k (0-based) as an n1 x n2 matrix."""
        return self.data[:, :, k]

    def tube(self, i: int, j: int) -> np.ndarray:
        """Return tube (i, j, :) (0-based) as a length-n3 vector."""
        return self.data[i, j, :]


class RealTensor3(_Tensor3):
    """Dense n1 x n2 x n3 real tensor in double precision."""

    @field_validator("data", mode="before")
    @classmethod
    def validate_data(cls, v):
        """Coerce to float64 and reject non-finite entries."""
        arr = _as_frozen_array(v, np.float64)
        if not np.isfinite(arr).all():
            raise NumericalError("tensor contains NaN or Inf entries")
        return arr

    @classmethod
    def zeros(cls, n1: int, n2: int, n3: int) -> "RealTensor3":
        """Create an all-zero tensor."""
        return cls(data=np.zeros((n1, n2, n3), order="F"))

    @classmethod
    def from_slices(cls, slices) -> "RealTensor3":
        """Stack a sequence of n1 x n2 matrices as frontal slices."""
        return cls(data=np.stack([np.asarray(s, dtype=np.float64) for s in slices], axis=2))


class ComplexTensor3(_Tensor3):
    """Fourier-domain counterpart of RealTensor3."""

    @field_validator("data", mode="before")
    @classmethod
    def validate_data(cls, v):
        """Coerce to complex128 and reject non-finite entries."""
        arr = _as_frozen_array(v, np.complex128)
        if not np.isfinite(arr).all():
            raise NumericalError("tensor contains NaN or Inf entries")
        return arr


class ObservationMask(_Tensor3):
    """The index set Omega of observed entries; True marks an observed entry."""

    @field_validator("data", mode="before")
    @classmethod
    def validate_data(cls, v):
        """Coerce to a boolean membership array."""
        arr = np.asarray(v)
        if arr.dtype != np.bool_:
            if not np.isin(arr, (0, 1)).all():
                raise RangeError("mask entries must be 0 or 1")
        return _as_frozen_array(arr, np.bool_)

    @classmethod
    def full(cls, n1: int, n2: int, n3: int) -> "ObservationMask":
        """Mask observing every entry."""
        return cls(data=np.ones((n1, n2, n3), dtype=bool))

    @classmethod
    def empty(cls, n1: int, n2: int, n3: int) -> "ObservationMask":
        """Mask observing no entry."""
        return cls(data=np.zeros((n1, n2, n3), dtype=bool))

    @property
    def observed_count(self) -> int:
        return int(np.count_nonzero(self.data))

    @property
    def observed_fraction(self) -> float:
        return self.observed_count / self.size

    @property
    def is_full(self) -> bool:
        return bool(self.data.all())

    @property
    def is_empty(self) -> bool:
        return not self.data.any()
