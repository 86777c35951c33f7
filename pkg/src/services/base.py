"""
Base service implementation.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, TypeVar, Generic

from pydantic import BaseModel

from ..models.tensor import RealTensor3
from ..storage.base import BaseStorage

T = TypeVar("T", bound=BaseModel)


class BaseService(ABC, Generic[T]):
    """Abstract base class for services producing a report of type T."""

    def __init__(self, storage: BaseStorage[RealTensor3]):
        """Initialize service."""
        self.storage = storage

    @abstractmethod
    def validate(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Validate run parameters."""
        pass

    @abstractmethod
    def run(self, a: RealTensor3, **params) -> T:
        """Run on an input tensor."""
        pass

    @abstractmethod
    def write_diagnostics(self, report: T, path) -> int:
        """Write the report's trace as CSV; returns the row count."""
        pass
