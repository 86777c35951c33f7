"""
Binary PGM (P5) and PPM (P6) images with maxval 255, and PGM frame directories.

A PGM image becomes an n1 x n2 x 1 tensor (n1 = image height), a PPM image an
n1 x n2 x 3 tensor with the R, G, B channels as frontal slices. Values stay on
the 0-255 scale as doubles; rounding to bytes happens only on write.
"""
from pathlib import Path
from typing import List, Tuple

import numpy as np
from loguru import logger

from ..exceptions import EmptyDir, FormatError, IoError, ShapeMismatch
from ..models.tensor import RealTensor3
from .base import BaseStorage, PathLike
from .tensor_file import _read_bytes, _write_bytes

MAXVAL = 255
_WHITESPACE = b" \t\n\r\v\f"
_CHANNELS = {b"P5": 1, b"P6": 3}
_ASCII_VARIANTS = (b"P2", b"P3")


def _parse_header(raw: bytes) -> Tuple[List[bytes], int]:
    # Four whitespace-separated tokens, '#' comments running to end of line,
    # then exactly one whitespace byte before the raster.
    tokens = []
    pos = 0
    while len(tokens) < 4:
        while pos < len(raw) and (raw[pos] in _WHITESPACE or raw[pos] == ord("#")):
            if raw[pos] == ord("#"):
                end = raw.find(b"\n", pos)
                pos = len(raw) if end < 0 else end
            pos += 1
        start = pos
        while pos < len(raw) and raw[pos] not in _WHITESPACE and raw[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise FormatError("truncated image header")
        tokens.append(raw[start:pos])
        if len(tokens) == 1 and tokens[0] not in _CHANNELS:
            break
    if pos >= len(raw) or raw[pos] not in _WHITESPACE:
        raise FormatError("image header not terminated by whitespace")
    return tokens, pos + 1


def decode_image(raw: bytes) -> RealTensor3:
    """Decode the bytes of a binary PGM or PPM image."""
    tokens, offset = _parse_header(raw)
    magic = tokens[0]
    if magic in _ASCII_VARIANTS:
        raise FormatError(f"ASCII image variant {magic.decode()} is not supported")
    if magic not in _CHANNELS:
        raise FormatError(f"unknown image magic {magic!r}")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError as e:
        raise FormatError(f"non-numeric image header field in {tokens[1:4]}") from e
    if width < 1 or height < 1:
        raise FormatError(f"invalid image size {width} x {height}")
    if maxval != MAXVAL:
        raise FormatError(f"maxval {maxval} is not supported, expected {MAXVAL}")

    channels = _CHANNELS[magic]
    expected = width * height * channels
    if len(raw) - offset != expected:
        raise FormatError(f"raster is {len(raw) - offset} bytes, expected {expected}")
    pixels = np.frombuffer(raw, dtype=np.uint8, offset=offset).reshape(height, width, channels)
    return RealTensor3(data=pixels.astype(np.float64))


def encode_image(a: RealTensor3) -> bytes:
    """Encode an n1 x n2 x 1 (PGM) or n1 x n2 x 3 (PPM) tensor; values clamp to [0, 255] and round half up."""
    if a.n3 not in (1, 3):
        raise ShapeMismatch(f"images need 1 or 3 frontal slices, got {a.n3}")
    magic = b"P5" if a.n3 == 1 else b"P6"
    values = np.clip(np.floor(a.data + 0.5), 0, MAXVAL).astype(np.uint8)
    header = magic + f"\n{a.n2} {a.n1}\n{MAXVAL}\n".encode("ascii")
    return header + np.ascontiguousarray(values).tobytes()


def read_image(path: PathLike) -> RealTensor3:
    """Read a PGM (P5) or PPM (P6) file."""
    return decode_image(_read_bytes(path))


def write_image(path: PathLike, a: RealTensor3):
    """Write a tensor as a PGM or PPM file depending on its slice count."""
    _write_bytes(path, encode_image(a))
    logger.debug(f"Wrote image {a.n1} x {a.n2} x {a.n3} to {path}")


def read_frames(directory: PathLike) -> RealTensor3:
    """Stack the PGM frames of a directory, in lexicographic name order, as frontal slices."""
    root = Path(directory)
    if not root.is_dir():
        raise IoError(f"{root} is not a directory")
    frames = sorted((p for p in root.glob("*.pgm") if p.is_file()), key=lambda p: p.name)
    if not frames:
        raise EmptyDir(f"no .pgm frames in {root}")

    slices = []
    for frame in frames:
        image = read_image(frame)
        if image.n3 != 1:
            raise FormatError(f"{frame.name} is not a grayscale frame")
        if slices and image.frontal_slice(0).shape != slices[0].shape:
            raise FormatError(
                f"{frame.name} is {image.n1} x {image.n2}, expected {slices[0].shape[0]} x {slices[0].shape[1]}"
            )
        slices.append(image.frontal_slice(0))
    logger.info(f"Read {len(slices)} frames of {slices[0].shape[0]} x {slices[0].shape[1]} from {root}")
    return RealTensor3.from_slices(slices)


class ImageStorage(BaseStorage[RealTensor3]):
    """PGM/PPM storage."""

    def read(self, path: PathLike) -> RealTensor3:
        return read_image(path)

    def write(self, path: PathLike, item: RealTensor3) -> None:
        write_image(path, item)
