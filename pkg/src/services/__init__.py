"""
Services orchestrating decomposition and completion runs.
"""
from .base import BaseService
from .decomposition import DecompositionService
from .completion import CompletionService

__all__ = ["BaseService", "DecompositionService", "CompletionService"]
