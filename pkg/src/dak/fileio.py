"""Fixed-width little-endian integer array files.

Layout: a 16-byte header block (magic[4], version u8, width u8, 10 reserved
zero bytes), then ``N`` and ``d`` as u64, then ``N`` entries of ``width``
bytes each.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import FormatError

VERSION = 1
HEADER = struct.Struct("<4sBB10xQQ")
_DTYPES = {4: np.dtype("<i4"), 8: np.dtype("<i8")}


def encode(magic: bytes, values: np.ndarray, d: int, width: int) -> bytes:
    if width not in _DTYPES:
        raise ValueError(f"unsupported entry width {width}")
    body = np.ascontiguousarray(values, dtype=_DTYPES[width]).tobytes()
    return HEADER.pack(magic, VERSION, width, values.shape[0], d) + body


def decode(magic: bytes, raw: bytes, *, name: str = "file") -> tuple[np.ndarray, int, int]:
    """Return ``(entries, d, width)``; entries use native byte order."""
    if len(raw) < HEADER.size:
        raise FormatError(f"{name}: truncated header ({len(raw)} < {HEADER.size} bytes)")
    got, version, width, n, d = HEADER.unpack_from(raw)
    if got != magic:
        raise FormatError(f"{name}: bad magic {got!r}, expected {magic!r}")
    if version != VERSION:
        raise FormatError(f"{name}: unsupported version {version}")
    if width not in _DTYPES:
        raise FormatError(f"{name}: unsupported entry width {width}")
    expected = HEADER.size + n * width
    if len(raw) != expected:
        raise FormatError(
            f"{name}: expected {expected} bytes for N={n} at width {width}, got {len(raw)}"
        )
    entries = np.frombuffer(raw, dtype=_DTYPES[width], offset=HEADER.size, count=n)
    return entries.astype(_DTYPES[width].newbyteorder("="), copy=True), d, width


def write(path: str | Path, magic: bytes, values: np.ndarray, d: int, width: int) -> None:
    Path(path).write_bytes(encode(magic, values, d, width))


def read(path: str | Path, magic: bytes) -> tuple[np.ndarray, int, int]:
    path = Path(path)
    return decode(magic, path.read_bytes(), name=str(path))
