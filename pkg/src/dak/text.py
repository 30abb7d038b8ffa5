"""Concatenated text of a document collection.

A collection ``T_1, ..., T_d`` is stored as ``T_1 $ T_2 $ ... T_d $ #``.  The
global terminator ``#`` is byte 0 and the document separator ``$`` is byte 1,
so ``# < $ < every document byte`` holds under plain byte comparison.  Input
documents may therefore not contain bytes 0x00 or 0x01.

Positions are 1-based in the public API: ``boundaries[j]`` is the position of
the separator closing document ``j`` and ``boundaries[0] == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyCollection, FormatError, PositionOutOfRange, ReservedByteInDocument

SENT_HASH = 0
SENT_DOLLAR = 1
ALPHABET = 256


@dataclass(frozen=True, eq=False)
class ConcatText:
    data: np.ndarray  # uint8, length N
    boundaries: np.ndarray  # int64, length d + 1
    sigma: int

    @property
    def N(self) -> int:
        return int(self.data.shape[0])

    @property
    def d(self) -> int:
        return int(self.boundaries.shape[0]) - 1

    @property
    def separators(self) -> np.ndarray:
        """Positions of the ``$`` separators, ascending."""
        return self.boundaries[1:]

    def doc_lengths(self) -> np.ndarray:
        """Per-document lengths, each including its separator."""
        return np.diff(self.boundaries)

    def tobytes(self) -> bytes:
        return self.data.tobytes()

    def render(self) -> str:
        """Human-readable form with ``#`` and ``$`` for the sentinels."""
        table = {SENT_HASH: "#", SENT_DOLLAR: "$"}
        return "".join(table.get(c, chr(c)) for c in self.data.tolist())

    def __len__(self) -> int:
        return self.N


@dataclass(frozen=True, eq=False)
class CountTable:
    """``counts[c]`` is the number of symbols strictly smaller than ``c``."""

    counts: np.ndarray = field(repr=False)

    def __getitem__(self, code: int) -> int:
        return int(self.counts[code])


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _sigma(data: np.ndarray) -> int:
    return int(np.count_nonzero(np.bincount(data, minlength=ALPHABET)))


def build_concat(docs: Sequence[bytes] | Iterable[bytes]) -> ConcatText:
    docs = [bytes(doc) for doc in docs]
    if not docs:
        raise EmptyCollection("a collection needs at least one document")
    for k, doc in enumerate(docs, start=1):
        for reserved in (SENT_HASH, SENT_DOLLAR):
            at = doc.find(reserved)
            if at >= 0:
                raise ReservedByteInDocument(k, at + 1, reserved)

    raw = b"\x01".join(docs) + b"\x01\x00"
    data = np.frombuffer(raw, dtype=np.uint8).copy()
    lengths = np.fromiter((len(doc) + 1 for doc in docs), dtype=np.int64, count=len(docs))
    boundaries = np.zeros(len(docs) + 1, dtype=np.int64)
    np.cumsum(lengths, out=boundaries[1:])
    return ConcatText(_freeze(data), _freeze(boundaries), _sigma(data))


def from_raw(raw: bytes) -> ConcatText:
    """Validate a pre-built concatenation that already uses codes 0 and 1."""
    data = np.frombuffer(bytes(raw), dtype=np.uint8).copy()
    n = data.shape[0]
    if n < 2:
        raise FormatError(f"raw text of length {n} is too short; need at least '$#'")
    hashes = np.flatnonzero(data == SENT_HASH)
    if hashes.shape[0] != 1 or hashes[0] != n - 1:
        raise FormatError("raw text must contain exactly one 0x00 terminator, at the end")
    if data[n - 2] != SENT_DOLLAR:
        raise FormatError("the byte before the terminator must be a 0x01 separator")
    seps = np.flatnonzero(data == SENT_DOLLAR).astype(np.int64) + 1
    boundaries = np.concatenate([np.zeros(1, dtype=np.int64), seps])
    return ConcatText(_freeze(data), _freeze(boundaries), _sigma(data))


def doc_of_position(ct: ConcatText, p: int) -> int:
    """Document owning text position ``p``; the terminator belongs to ``d + 1``.

    A separator belongs to the document it closes.
    """
    if not 1 <= p <= ct.N:
        raise PositionOutOfRange(f"position {p} outside [1, {ct.N}]")
    if p == ct.N:
        return ct.d + 1
    return int(np.searchsorted(ct.boundaries, p, side="left"))


def docs_of_positions(ct: ConcatText, positions: np.ndarray) -> np.ndarray:
    """Vectorized :func:`doc_of_position` over an array of 1-based positions."""
    positions = np.asarray(positions)
    if positions.size and (positions.min() < 1 or positions.max() > ct.N):
        raise PositionOutOfRange(f"positions outside [1, {ct.N}]")
    out = np.searchsorted(ct.boundaries, positions, side="left").astype(np.int64)
    out[positions == ct.N] = ct.d + 1
    return out


def count_table(ct: ConcatText) -> CountTable:
    hist = np.bincount(ct.data, minlength=ALPHABET).astype(np.int64)
    counts = np.zeros(ALPHABET, dtype=np.int64)
    np.cumsum(hist[:-1], out=counts[1:])
    return CountTable(_freeze(counts))


# -- collection readers ------------------------------------------------------

def parse_lines(raw: bytes) -> list[bytes]:
    """One document per line; the line feed is dropped, nothing else."""
    if not raw:
        return []
    docs = raw.split(b"\n")
    if raw.endswith(b"\n"):
        docs.pop()
    return docs


def parse_fasta(raw: bytes) -> list[bytes]:
    docs: list[bytes] = []
    body: list[bytes] | None = None
    for lineno, line in enumerate(raw.split(b"\n"), start=1):
        line = line.rstrip(b"\r")
        if line.startswith(b">"):
            if body is not None:
                docs.append(b"".join(body))
            body = []
        elif body is None:
            if line.strip():
                raise FormatError(f"line {lineno}: sequence data before the first '>' header")
        else:
            body.append(line)
    if body is not None:
        docs.append(b"".join(body))
    return docs


FORMATS = ("lines", "fasta", "raw")


def load_collection(path: str | Path, fmt: str) -> ConcatText:
    raw = Path(path).read_bytes()
    if fmt == "raw":
        return from_raw(raw)
    if fmt == "lines":
        docs = parse_lines(raw)
    elif fmt == "fasta":
        docs = parse_fasta(raw)
    else:
        raise ValueError(f"unknown collection format {fmt!r}; expected one of {FORMATS}")
    return build_concat(docs)
