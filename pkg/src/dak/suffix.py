"""Suffix array of a concatenated collection under the distinct-separator order.

Each ``$`` is ranked by the index of the document it closes, so the sort order
is ``# < $_1 < ... < $_d < document symbols`` and all suffixes are distinct.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

import numpy as np

from . import fileio
from .errors import FormatError, NotAPermutation, OracleCapExceeded, PositionOutOfRange
from .text import SENT_DOLLAR, SENT_HASH, ConcatText

SA_MAGIC = b"DSAK"
DEFAULT_ORACLE_CAP = 100_000


def width_for(n: int) -> int:
    """Bytes per entry: 32-bit while ``n < 2**31``, else 64-bit."""
    return 4 if n < 2**31 else 8


def dtype_for(n: int) -> np.dtype:
    return np.dtype(np.int32) if width_for(n) == 4 else np.dtype(np.int64)


@dataclass(eq=False)
class SuffixArray:
    entries: np.ndarray  # 1-based text positions

    @property
    def width(self) -> int:
        return width_for(self.entries.shape[0])

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuffixArray):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def tolist(self) -> list[int]:
        return self.entries.tolist()

    def tobytes(self, d: int) -> bytes:
        return fileio.encode(SA_MAGIC, self.entries, d, self.width)

    def save(self, path, d: int) -> None:
        fileio.write(path, SA_MAGIC, self.entries, d, self.width)

    @classmethod
    def load(cls, path) -> tuple["SuffixArray", int]:
        entries, d, width = fileio.read(path, SA_MAGIC)
        if width != width_for(entries.shape[0]):
            raise FormatError(f"{path}: width {width} does not match N={entries.shape[0]}")
        return cls(entries.astype(dtype_for(entries.shape[0]), copy=False)), d


@dataclass(eq=False)
class InversePermutation:
    entries: np.ndarray

    def tolist(self) -> list[int]:
        return self.entries.tolist()


def rank_key(ct: ConcatText, p: int) -> int:
    if not 1 <= p <= ct.N:
        raise PositionOutOfRange(f"position {p} outside [1, {ct.N}]")
    c = int(ct.data[p - 1])
    if c == SENT_HASH:
        return 0
    if c == SENT_DOLLAR:
        return int(np.searchsorted(ct.boundaries, p))
    return ct.d + c - 1


def rank_keys(ct: ConcatText) -> np.ndarray:
    """:func:`rank_key` for every position, as an int64 array (0-based index)."""
    keys = ct.data.astype(np.int64) + (ct.d - 1)
    keys[ct.separators - 1] = np.arange(1, ct.d + 1)
    keys[ct.N - 1] = 0
    return keys


def _dense_ranks(sorted_keys: np.ndarray) -> np.ndarray:
    flags = np.empty(sorted_keys.shape[0], dtype=np.int64)
    flags[0] = 0
    np.not_equal(sorted_keys[1:], sorted_keys[:-1], out=flags[1:])
    return np.cumsum(flags, out=flags)


def suffix_sort(ct: ConcatText) -> SuffixArray:
    """Prefix doubling over the integer keys, ``O(N log N)``."""
    n = ct.N
    keys = rank_keys(ct)
    sa = np.argsort(keys, kind="stable")
    ranks_sorted = _dense_ranks(keys[sa])
    del keys
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = ranks_sorted
    h = 1
    while ranks_sorted[-1] < n - 1:
        combined = rank * (n + 1)
        combined[: n - h] += rank[h:] + 1
        sa = np.argsort(combined, kind="stable")
        ranks_sorted = _dense_ranks(combined[sa])
        del combined
        rank[sa] = ranks_sorted
        h *= 2
    sa += 1
    return SuffixArray(sa.astype(dtype_for(n)))


def oracle_cap() -> int:
    return int(os.environ.get("DAK_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def naive_suffix_sort(ct: ConcatText, cap: int | None = None) -> SuffixArray:
    """Comparison sort of whole key sequences; a test oracle only."""
    n = ct.N
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise OracleCapExceeded(f"N={n} exceeds the naive oracle cap {cap}")
    keys = rank_keys(ct).tolist()

    def cmp(a: int, b: int) -> int:
        while a < n and b < n:
            if keys[a] != keys[b]:
                return -1 if keys[a] < keys[b] else 1
            a += 1
            b += 1
        # only reachable for a == b; '#' is unique
        return (a < n) - (b < n)

    order = sorted(range(n), key=functools.cmp_to_key(cmp))
    return SuffixArray(np.array(order, dtype=dtype_for(n)) + 1)


def inverse(sa: SuffixArray) -> InversePermutation:
    entries = sa.entries
    n = entries.shape[0]
    if n and (entries.min() < 1 or entries.max() > n):
        raise NotAPermutation("entries outside [1, N]")
    isa = np.zeros(n, dtype=entries.dtype)
    isa[entries - 1] = np.arange(1, n + 1, dtype=entries.dtype)
    if n and not isa.all():
        raise NotAPermutation("repeated entries")
    return InversePermutation(isa)
