"""Rank-only bit vectors over ``[1, N]``.

Two backends: :class:`PlainBitvector` keeps the N raw bits plus a two-level
directory; :class:`SparseBitvector` is an Elias-Fano encoding of the set
positions and pays off when the ones are rare.

All storage is allocated through the workspace meter, so building one inside
a measured block accounts for its full payload.
"""

from __future__ import annotations

import enum

import numpy as np

from . import _kernels as K
from .errors import PrefixOutOfRange
from .meter import METER, WorkspaceMeter
from .text import ConcatText

SUPERBLOCK_BITS = 512
BLOCK_BITS = 64
EF_SAMPLE_RATE = 64

# Declared overhead of the sparse backend beyond the Elias-Fano bound
# d * (2 + ceil(lg(N/d))): word padding of the two bit arrays and one
# 32-bit bucket sample per EF_SAMPLE_RATE buckets (at most 2 buckets per one).
SPARSE_OVERHEAD_PER_ONE = 2 * 32 / EF_SAMPLE_RATE
SPARSE_OVERHEAD_CONST = 2 * 64 + 32


class Backend(str, enum.Enum):
    PLAIN = "plain"
    SPARSE = "sparse"


def _count_dtype(limit: int):
    return np.uint32 if limit < 2**32 else np.uint64


class RankBitvector:
    backend: Backend
    universe: int
    ones: int

    def rank1(self, i: int) -> int:
        raise NotImplementedError

    def rank1_many(self, queries) -> np.ndarray:
        raise NotImplementedError

    def size_in_bits(self) -> int:
        raise NotImplementedError

    def _check(self, i: int) -> None:
        if not 0 <= i <= self.universe:
            raise PrefixOutOfRange(f"prefix length {i} outside [0, {self.universe}]")

    def _check_many(self, queries: np.ndarray) -> None:
        if queries.size and (queries.min() < 0 or queries.max() > self.universe):
            raise PrefixOutOfRange(f"prefix lengths outside [0, {self.universe}]")

    def __len__(self) -> int:
        return self.universe

    def __repr__(self) -> str:
        return f"{type(self).__name__}(universe={self.universe}, ones={self.ones})"


class PlainBitvector(RankBitvector):
    """Raw bits, absolute counts per 512 bits, packed 9-bit counts per 64 bits."""

    backend = Backend.PLAIN

    def __init__(self, universe: int, positions, meter: WorkspaceMeter = METER):
        positions = np.asarray(positions, dtype=np.int64)
        self.universe = int(universe)
        nwords = (self.universe + BLOCK_BITS - 1) // BLOCK_BITS
        self.words = meter.zeros(nwords, np.uint64)
        K.set_bits(self.words, positions, 1)
        self.supers = meter.alloc(self.universe // SUPERBLOCK_BITS + 1, _count_dtype(self.universe))
        self.rels = meter.alloc((self.universe + SUPERBLOCK_BITS - 1) // SUPERBLOCK_BITS, np.uint64)
        self.ones = int(K.plain_build(self.words, self.supers, self.rels))

    def rank1(self, i: int) -> int:
        self._check(i)
        return int(K.plain_rank(self.words, self.supers, self.rels, i))

    def rank1_many(self, queries) -> np.ndarray:
        queries = np.asarray(queries, dtype=np.int64)
        self._check_many(queries)
        out = np.empty(queries.shape[0], dtype=np.int64)
        K.plain_rank_many(self.words, self.supers, self.rels, queries, out)
        return out

    def directory_bits(self) -> int:
        return 8 * (self.supers.nbytes + self.rels.nbytes)

    def size_in_bits(self) -> int:
        return 8 * self.words.nbytes + self.directory_bits()


class SparseBitvector(RankBitvector):
    """Elias-Fano: ``lg(N/m)`` low bits per one, unary high parts, bucket samples."""

    backend = Backend.SPARSE

    def __init__(self, universe: int, positions, meter: WorkspaceMeter = METER):
        positions = np.asarray(positions, dtype=np.int64)
        self.universe = int(universe)
        self.ones = m = int(positions.shape[0])
        if m:
            self.width = (self.universe // m).bit_length() - 1
            self.nbuckets = ((self.universe - 1) >> self.width) + 1
            nsamples = (self.nbuckets - 1) // EF_SAMPLE_RATE + 1
        else:
            self.width = self.nbuckets = nsamples = 0
        self.low = meter.zeros((m * self.width + 63) // 64, np.uint64)
        self.high = meter.zeros((m + self.nbuckets + 63) // 64, np.uint64)
        self.samples = meter.alloc(nsamples, _count_dtype(m))
        if m:
            K.ef_build(positions - 1, self.width, self.low, self.high, self.samples, EF_SAMPLE_RATE)

    def _args(self):
        return (self.low, self.high, self.samples, EF_SAMPLE_RATE, self.width, self.ones, self.nbuckets)

    def rank1(self, i: int) -> int:
        self._check(i)
        return int(K.ef_rank(*self._args(), i))

    def rank1_many(self, queries) -> np.ndarray:
        queries = np.asarray(queries, dtype=np.int64)
        self._check_many(queries)
        out = np.empty(queries.shape[0], dtype=np.int64)
        K.ef_rank_many(*self._args(), queries, out)
        return out

    def size_in_bits(self) -> int:
        return 8 * (self.low.nbytes + self.high.nbytes + self.samples.nbytes)

    @staticmethod
    def bound_bits(universe: int, ones: int) -> int:
        """The Elias-Fano bound ``ones * (2 + ceil(lg(universe/ones)))``."""
        if ones == 0:
            return 0
        q, r = divmod(universe, ones)
        ceil_lg = (q - 1).bit_length() if r == 0 else q.bit_length()
        return ones * (2 + max(0, ceil_lg))


def from_positions(universe: int, positions, backend, meter: WorkspaceMeter = METER) -> RankBitvector:
    """Bit vector with the given sorted 1-based positions set."""
    cls = PlainBitvector if Backend(backend) is Backend.PLAIN else SparseBitvector
    return cls(universe, positions, meter)


def separator_bitvector(ct: ConcatText, backend, meter: WorkspaceMeter = METER) -> RankBitvector:
    """Bit ``i`` set iff ``T[i]`` is a ``$``; the final ``#`` stays clear."""
    return from_positions(ct.N, ct.separators, backend, meter)


def rank1(bv: RankBitvector, i: int) -> int:
    return bv.rank1(i)


def size_in_bits(bv: RankBitvector) -> int:
    return bv.size_in_bits()
