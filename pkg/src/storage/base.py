"""
Base storage implementation.
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar, Union

from pydantic import BaseModel

T = TypeVar("T", bound=BaseModel)

PathLike = Union[str, Path]


class BaseStorage(ABC, Generic[T]):
    """Abstract base class for file formats holding one model per file."""

    @abstractmethod
    def read(self, path: PathLike) -> T:
        """Read an item from a file."""
        pass

    @abstractmethod
    def write(self, path: PathLike, item: T) -> None:
        """Write an item to a file, replacing any previous content."""
        pass
