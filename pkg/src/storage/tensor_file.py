"""
TNS3 tensor files and MSK3 mask files.

Layout: 4-byte magic, u32 LE version (= 1), three u64 LE dimensions, then the
payload in storage order (row fastest, then column, then frontal slice).
TNS3 payloads are IEEE-754 binary64 LE values, MSK3 payloads one byte (0 or
1) per entry.
"""
from pathlib import Path
from typing import ClassVar

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from ..exceptions import FormatError, IoError
from ..models.tensor import ObservationMask, RealTensor3
from .base import BaseStorage, PathLike

FORMAT_VERSION = 1
HEADER_DTYPE = np.dtype([("magic", "S4"), ("version", "<u4"), ("dims", "<u8", (3,))])
HEADER_SIZE = HEADER_DTYPE.itemsize


class TensorFileHeader(BaseModel):
    """Header of a TNS3 file."""

    MAGIC: ClassVar[bytes] = b"TNS3"
    ITEM_SIZE: ClassVar[int] = 8

    version: int = FORMAT_VERSION
    n1: int = Field(ge=1)
    n2: int = Field(ge=1)
    n3: int = Field(ge=1)

    @property
    def payload_length(self) -> int:
        return self.n1 * self.n2 * self.n3 * self.ITEM_SIZE

    def to_bytes(self) -> bytes:
        rec = np.zeros((), dtype=HEADER_DTYPE)
        rec["magic"] = self.MAGIC
        rec["version"] = self.version
        rec["dims"] = (self.n1, self.n2, self.n3)
        return rec.tobytes()

    @classmethod
    def from_bytes(cls, raw: bytes):
        """Parse and validate a header; raises FormatError."""
        if len(raw) < HEADER_SIZE:
            raise FormatError(f"file too short for a {cls.MAGIC.decode()} header ({len(raw)} bytes)")
        rec = np.frombuffer(raw, dtype=HEADER_DTYPE, count=1)[0]
        if bytes(rec["magic"]) != cls.MAGIC:
            raise FormatError(f"bad magic {bytes(rec['magic'])!r}, expected {cls.MAGIC!r}")
        if int(rec["version"]) != FORMAT_VERSION:
            raise FormatError(f"unsupported version {int(rec['version'])}")
        n1, n2, n3 = (int(d) for d in rec["dims"])
        try:
            header = cls(version=FORMAT_VERSION, n1=n1, n2=n2, n3=n3)
        except ValidationError as e:
            raise FormatError(f"invalid dimensions {(n1, n2, n3)}") from e
        if len(raw) - HEADER_SIZE != header.payload_length:
            raise FormatError(
                f"payload is {len(raw) - HEADER_SIZE} bytes, expected {header.payload_length}"
            )
        return header


class MaskFileHeader(TensorFileHeader):
    """Header of an MSK3 file."""

    MAGIC: ClassVar[bytes] = b"MSK3"
    ITEM_SIZE: ClassVar[int] = 1


def _read_bytes(path: PathLike) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise IoError(f"cannot read {path}: {e}") from e


def _write_bytes(path: PathLike, payload: bytes):
    try:
        Path(path).write_bytes(payload)
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from e


def write_tensor(path: PathLike, a: RealTensor3):
    """Write a tensor as a TNS3 file."""
    header = TensorFileHeader(n1=a.n1, n2=a.n2, n3=a.n3)
    _write_bytes(path, header.to_bytes() + a.data.astype("<f8").tobytes(order="F"))
    logger.debug(f"Wrote tensor {a.shape} to {path}")


def read_tensor(path: PathLike) -> RealTensor3:
    """Read a TNS3 file."""
    raw = _read_bytes(path)
    header = TensorFileHeader.from_bytes(raw)
    values = np.frombuffer(raw, dtype="<f8", offset=HEADER_SIZE)
    return RealTensor3(data=values.reshape((header.n1, header.n2, header.n3), order="F"))


def write_mask(path: PathLike, omega: ObservationMask):
    """Write a mask as an MSK3 file."""
    header = MaskFileHeader(n1=omega.n1, n2=omega.n2, n3=omega.n3)
    _write_bytes(path, header.to_bytes() + omega.data.astype(np.uint8).tobytes(order="F"))
    logger.debug(f"Wrote mask {omega.shape} to {path}")


def read_mask(path: PathLike) -> ObservationMask:
    """Read an MSK3 file; payload bytes other than 0 and 1 are rejected."""
    raw = _read_bytes(path)
    header = MaskFileHeader.from_bytes(raw)
    values = np.frombuffer(raw, dtype=np.uint8, offset=HEADER_SIZE)
    if (values > 1).any():
        raise FormatError("mask payload contains bytes other than 0 and 1")
    return ObservationMask(data=values.reshape((header.n1, header.n2, header.n3), order="F").astype(bool))


class TensorFileStorage(BaseStorage[RealTensor3]):
    """TNS3 storage."""

    def read(self, path: PathLike) -> RealTensor3:
        return read_tensor(path)

    def write(self, path: PathLike, item: RealTensor3) -> None:
        write_tensor(path, item)


class MaskFileStorage(BaseStorage[ObservationMask]):
    """MSK3 storage."""

    def read(self, path: PathLike) -> ObservationMask:
        return read_mask(path)

    def write(self, path: PathLike, item: ObservationMask) -> None:
        write_mask(path, item)
