"""Document array construction.

Three methods produce the same array:

* :func:`da_inplace` walks the text backwards through an LF array built in
  the space of the suffix array and restores the suffix array as it goes.
  Its only workspace is one copy of the 256-entry count table.
* :func:`da_via_isa` materializes the inverse suffix array (``N`` words).
* :func:`da_via_rank` answers ``rank1(bit, SA[i] - 1) + 1`` over the
  separator bit vector.

A separator suffix belongs to the document it closes, and the ``#`` suffix to
document ``d + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from . import fileio
from .bitvector import PlainBitvector, RankBitvector, SparseBitvector
from .bwt import Phase, WorkArray, bwt_in_place, lf_counting_in_place
from .errors import FormatError, LengthMismatch, MalformedSA, UniverseMismatch
from .meter import METER, WorkspaceMeter
from .suffix import SuffixArray
from .text import ConcatText, CountTable, count_table, docs_of_positions

DA_MAGIC = b"DDAK"
DA_WIDTH = 4
DA_DTYPE = np.int32


@dataclass(eq=False)
class DocumentArray:
    entries: np.ndarray  # int32, values in [1, d + 1]
    d: int

    width = DA_WIDTH

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, DocumentArray):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.entries, other.entries)

    def tolist(self) -> list[int]:
        return self.entries.tolist()

    def histogram(self) -> dict[int, int]:
        counts = np.bincount(self.entries, minlength=self.d + 2)
        return {j: int(counts[j]) for j in range(1, self.d + 2)}

    def tobytes(self) -> bytes:
        return fileio.encode(DA_MAGIC, self.entries, self.d, DA_WIDTH)

    def save(self, path) -> None:
        fileio.write(path, DA_MAGIC, self.entries, self.d, DA_WIDTH)

    @classmethod
    def load(cls, path) -> "DocumentArray":
        entries, d, width = fileio.read(path, DA_MAGIC)
        if width != DA_WIDTH:
            raise FormatError(f"{path}: document arrays are stored 4 bytes wide, got {width}")
        return cls(entries.astype(DA_DTYPE, copy=False), d)


def _output(n: int, meter: WorkspaceMeter) -> np.ndarray:
    return meter.alloc(n, DA_DTYPE, output=True)


def da_inplace(
    A: WorkArray,
    ct: ConcatText,
    C: CountTable | None = None,
    meter: WorkspaceMeter = METER,
) -> tuple[DocumentArray, WorkArray]:
    """Document array from the suffix array held in ``A``.

    ``A`` is rewritten to BWT codes, then to LF values, and then back to the
    suffix array while the document array is filled in text order from right
    to left.  On return ``A`` holds the input suffix array again.

    Raises :class:`MalformedSA` when ``A`` is not a suffix array of ``ct``;
    ``A`` is left in an unspecified state in that case.
    """
    A.expect(Phase.SA, Phase.SA_RESTORED)
    if C is None:
        C = count_table(ct)
    digest = K.fingerprint(A.cells)
    bwt_in_place(A, ct)
    lf_counting_in_place(A, C, meter)
    da = _output(ct.N, meter)
    broke_at = K.da_traverse(A.cells, da, ct.d)
    if broke_at:
        raise MalformedSA(f"LF walk revisited a position at step i={broke_at}")
    if K.fingerprint(A.cells) != digest:
        raise MalformedSA("the LF walk rebuilt a different permutation; input was not the suffix array")
    A.phase = Phase.SA_RESTORED
    return DocumentArray(da, ct.d), A


def da_via_isa(sa: SuffixArray, ct: ConcatText, meter: WorkspaceMeter = METER) -> DocumentArray:
    if len(sa) != ct.N:
        raise LengthMismatch(f"SA has {len(sa)} entries, text has N={ct.N}")
    isa = meter.alloc(ct.N, sa.entries.dtype)
    K.isa_fill(sa.entries, isa)
    da = _output(ct.N, meter)
    K.da_from_isa(isa, ct.boundaries, da)
    return DocumentArray(da, ct.d)


def da_via_rank(sa: SuffixArray, bv: RankBitvector, meter: WorkspaceMeter = METER) -> DocumentArray:
    """``DA[i] = rank1(bit, SA[i] - 1) + 1``.

    The rank is taken over the prefix *before* the suffix start, so a suffix
    starting at a separator is not counted past its own document.
    """
    n = len(sa)
    if bv.universe != n:
        raise UniverseMismatch(f"bit vector covers {bv.universe} positions, SA has {n}")
    da = _output(n, meter)
    if isinstance(bv, PlainBitvector):
        K.da_from_plain(sa.entries, bv.words, bv.supers, bv.rels, da)
    elif isinstance(bv, SparseBitvector):
        K.da_from_sparse(sa.entries, *bv._args(), da)
    else:
        da[:] = bv.rank1_many(sa.entries.astype(np.int64) - 1) + 1
    return DocumentArray(da, bv.ones)


def oracle_da(sa: SuffixArray, ct: ConcatText) -> DocumentArray:
    """Document of each suffix start, read straight off the boundaries."""
    return DocumentArray(docs_of_positions(ct, sa.entries).astype(DA_DTYPE), ct.d)


@dataclass
class VerifyReport:
    ok: bool
    first_mismatch: int | None = None  # 1-based SA index
    expected: int | None = None
    found: int | None = None
    histogram: dict[int, int] = field(default_factory=dict)
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_da(da: DocumentArray, sa: SuffixArray, ct: ConcatText) -> VerifyReport:
    hist = da.histogram() if da.entries.size and da.entries.min() >= 0 else {}
    if len(da) != len(sa) or len(sa) != ct.N:
        return VerifyReport(
            False, histogram=hist,
            message=f"length mismatch: DA={len(da)}, SA={len(sa)}, N={ct.N}",
        )
    expected = oracle_da(sa, ct).entries
    bad = np.flatnonzero(expected != da.entries)
    if bad.size:
        i = int(bad[0])
        return VerifyReport(
            False, i + 1, int(expected[i]), int(da.entries[i]), hist,
            f"first mismatch at index {i + 1}: expected {expected[i]}, found {da.entries[i]}"
            f" ({bad.size} mismatches total)",
        )
    return VerifyReport(True, histogram=hist, message="ok")
