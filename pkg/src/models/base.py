"""
Base model translating validation failures into the toolkit's error taxonomy.
"""
from typing import Any, ClassVar, Type

from pydantic import BaseModel, ValidationError

from ..exceptions import ConfigError, TubalError


def translate_validation_error(error: ValidationError, default: Type[TubalError]) -> TubalError:
    """Return the toolkit error behind a pydantic ValidationError.

    A validator that raised a TubalError subclass gets that error back;
    field constraint failures become `default`.
    """
    first = error.errors()[0]
    original = first.get("ctx", {}).get("error")
    if isinstance(original, TubalError):
        return original
    location = ".".join([error.title] + [str(part) for part in first["loc"]])
    return default(f"{location}: {first['msg']}")


class ValidatedModel(BaseModel):
    """BaseModel whose constructor raises `error_type` instead of ValidationError."""

    error_type: ClassVar[Type[TubalError]] = ConfigError

    def __init__(self, **data: Any):
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise translate_validation_error(e, self.error_type) from e
