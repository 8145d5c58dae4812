"""8-bit image file codecs.

Binary PNM (P5 gray, P6 RGB) is read and written here directly; PNG goes
through Pillow.  Loading maps byte ``b`` to ``b / 255``; saving clamps to
``[0, 1]`` and rounds ``s * 255`` to the nearest byte.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .raster import Raster

PPM_P6 = "P6"
PPM_P5 = "P5"
PNG8 = "PNG"

_WHITESPACE = b" \t\n\r\v\f"


class CodecError(ValueError):
    """Malformed or unsupported image file."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


def quantize(img: Raster) -> np.ndarray:
    """uint8 array of ``img`` after clamping to [0, 1]."""
    return np.rint(np.clip(img.data, 0.0, 1.0) * 255.0).astype(np.uint8)


def visualize_signed(err: Raster, scale: float | None = None) -> tuple[Raster, float]:
    """Map ``[-m, m]`` linearly onto ``[0, 1]`` with zero at mid-gray.

    ``m`` defaults to ``max|err|`` (1.0 for an all-zero field).  Returns the
    unsigned raster and the ``m`` that was used.
    """
    m = float(np.max(np.abs(err.data))) if scale is None else float(scale)
    if m <= 0:
        m = 1.0
    return err.with_data(0.5 + 0.5 * err.data / m, signed=False), m


def _detect_format(path: Path, channels: int | None = None) -> str:
    ext = path.suffix.lower()
    if ext == ".png":
        return PNG8
    if ext in (".ppm", ".pgm", ".pnm"):
        if channels is None:
            return PPM_P6 if ext == ".ppm" else PPM_P5
        return PPM_P6 if channels == 3 else PPM_P5
    raise CodecError(f"unrecognized image extension {ext!r} for {path}")


def decode_pnm(buf: bytes) -> Raster:
    """Decode a binary P5/P6 byte string."""
    pos = 0

    def token() -> tuple[bytes, int]:
        nonlocal pos
        while pos < len(buf):
            ch = buf[pos:pos + 1]
            if ch == b"#":
                nl = buf.find(b"\n", pos)
                pos = len(buf) if nl < 0 else nl + 1
            elif ch in _WHITESPACE:
                pos += 1
            else:
                break
        start = pos
        while pos < len(buf) and buf[pos:pos + 1] not in _WHITESPACE and buf[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise CodecError("truncated header", start)
        return buf[start:pos], start

    magic = buf[:2]
    if magic not in (b"P5", b"P6"):
        raise CodecError(f"unsupported magic number {magic!r}", 0)
    pos = 2
    fields = []
    for name in ("width", "height", "maxval"):
        tok, at = token()
        if not tok.isdigit():
            raise CodecError(f"bad {name} {tok!r}", at)
        fields.append((int(tok), at))
    (w, w_at), (h, h_at), (maxval, mv_at) = fields
    if w < 1:
        raise CodecError(f"width must be positive, got {w}", w_at)
    if h < 1:
        raise CodecError(f"height must be positive, got {h}", h_at)
    if maxval != 255:
        raise CodecError(f"unsupported maxval {maxval}; only 8-bit files are supported", mv_at)
    if pos >= len(buf) or buf[pos:pos + 1] not in _WHITESPACE:
        raise CodecError("missing whitespace after maxval", pos)
    pos += 1
    c = 3 if magic == b"P6" else 1
    need = w * h * c
    payload = buf[pos:pos + need]
    if len(payload) < need:
        raise CodecError(
            f"truncated payload: expected {need} bytes, found {len(payload)}", pos + len(payload)
        )
    arr = np.frombuffer(payload, dtype=np.uint8).reshape(h, w, c)
    return Raster(arr / 255.0)


def encode_pnm(img: Raster) -> bytes:
    """Binary PNM bytes: P5 for one channel, P6 for three."""
    magic = "P6" if img.channels == 3 else "P5"
    header = f"{magic}\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + quantize(img).tobytes()


def load(path) -> Raster:
    path = Path(path)
    if path.suffix.lower() == ".png":
        return _load_png(path)
    return decode_pnm(path.read_bytes())


def _load_png(path: Path) -> Raster:
    from PIL import Image

    try:
        with Image.open(path) as im:
            if im.mode in ("L", "RGB"):
                arr = np.asarray(im)
            elif im.mode in ("1", "P", "LA", "RGBA"):
                arr = np.asarray(im.convert("RGB" if im.mode in ("P", "RGBA") else "L"))
            else:
                raise CodecError(f"unsupported PNG mode {im.mode!r} (8-bit gray/RGB only)")
    except OSError as exc:
        raise CodecError(f"cannot decode PNG {path}: {exc}") from exc
    return Raster(arr / 255.0)


def save(img: Raster, path, fmt: str | None = None, visualize: bool = False) -> float | None:
    """Write ``img`` to ``path`` as an 8-bit image.

    Signed rasters must be written with ``visualize=True``; the symmetric
    scale used for the mapping is returned in that case.
    """
    path = Path(path)
    scale = None
    if img.signed:
        if not visualize:
            raise ValueError("signed raster needs visualize=True to be saved")
        img, scale = visualize_signed(img)
    fmt = fmt or _detect_format(path, img.channels)
    if fmt == PNG8:
        from PIL import Image

        arr = quantize(img)
        Image.fromarray(arr[:, :, 0] if img.channels == 1 else arr).save(path, format="PNG")
    elif fmt in (PPM_P5, PPM_P6):
        if (fmt == PPM_P6) != (img.channels == 3):
            raise CodecError(f"{fmt} cannot hold a {img.channels}-channel raster")
        _atomic_write(path, encode_pnm(img))
    else:
        raise CodecError(f"unknown format {fmt!r}")
    return scale


def _atomic_write(path: Path, payload: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(payload)
    os.replace(tmp, path)
