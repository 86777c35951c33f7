"""
File formats: TNS3 tensors, MSK3 masks, PGM/PPM images and CSV diagnostics.
"""
from .base import BaseStorage
from .tensor_file import (
    TensorFileHeader,
    MaskFileHeader,
    TensorFileStorage,
    MaskFileStorage,
    read_tensor,
    write_tensor,
    read_mask,
    write_mask,
)
from .image import ImageStorage, read_image, write_image, read_frames
from .diagnostics import write_csv

__all__ = [
    "BaseStorage",
    "TensorFileHeader",
    "MaskFileHeader",
    "TensorFileStorage",
    "MaskFileStorage",
    "read_tensor",
    "write_tensor",
    "read_mask",
    "write_mask",
    "ImageStorage",
    "read_image",
    "write_image",
    "read_frames",
    "write_csv",
]
