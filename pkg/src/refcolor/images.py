"""PNG I/O helpers for float images in [0, 1].

All images in this package are numpy float32 arrays, HxWx3 for color and
HxWx1 for line art, with values in [0, 1]. PNG round-trips are exact as long
as pixel values lie on the n/255 grid, which the synthetic renderer guarantees.
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image as PILImage


def to_uint8(img: np.ndarray) -> np.ndarray:
    return np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)


def from_uint8(arr: np.ndarray) -> np.ndarray:
    return (arr.astype(np.float32) / 255.0).astype(np.float32)


def save_png(path, img: np.ndarray) -> None:
    arr = to_uint8(img)
    if arr.ndim == 3 and arr.shape[2] == 1:
        arr = arr[:, :, 0]
    PILImage.fromarray(arr).save(path)


def load_png(path) -> np.ndarray:
    arr = np.asarray(PILImage.open(path))
    img = from_uint8(arr)
    if img.ndim == 2:
        img = img[:, :, None]
    return img


def encode_png(img: np.ndarray) -> bytes:
    arr = to_uint8(img)
    if arr.ndim == 3 and arr.shape[2] == 1:
        arr = arr[:, :, 0]
    buf = io.BytesIO()
    PILImage.fromarray(arr).save(buf, format="PNG")
    return buf.getvalue()


def decode_png(data: bytes) -> np.ndarray:
    arr = np.asarray(PILImage.open(io.BytesIO(data)).convert("RGB"))
    return from_uint8(arr)
