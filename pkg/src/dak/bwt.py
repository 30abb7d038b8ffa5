"""BWT and LF-mapping derived from a suffix array.

:class:`WorkArray` is the single integer buffer that the in-place document
array method reinterprets as SA, then BWT, then LF, then SA again.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import CycleTooShort, LengthMismatch, MalformedSA, WrongPhase
from .meter import METER, WorkspaceMeter
from .suffix import InversePermutation, SuffixArray
from .text import ConcatText, CountTable


class Phase(enum.Enum):
    SA = "SA"
    BWT = "BWT"
    LF = "LF"
    SA_RESTORED = "SA_RESTORED"


@dataclass(eq=False)
class WorkArray:
    cells: np.ndarray
    phase: Phase = Phase.SA

    @classmethod
    def from_sa(cls, sa: SuffixArray, *, copy: bool = True) -> "WorkArray":
        """Wrap ``sa``; with ``copy=False`` the suffix array itself is reused."""
        return cls(sa.entries.copy() if copy else sa.entries, Phase.SA)

    def expect(self, *phases: Phase) -> None:
        if self.phase not in phases:
            names = ", ".join(p.value for p in phases)
            raise WrongPhase(f"work array is in phase {self.phase.value}, expected {names}")

    def tolist(self) -> list[int]:
        return self.cells.tolist()

    def __len__(self) -> int:
        return int(self.cells.shape[0])


def bwt_in_place(A: WorkArray, ct: ConcatText) -> WorkArray:
    A.expect(Phase.SA, Phase.SA_RESTORED)
    if A.cells.shape[0] != ct.N:
        raise LengthMismatch(f"work array has {A.cells.shape[0]} cells, text has N={ct.N}")
    bad = K.bwt_in_place(A.cells, ct.data)
    if bad >= 0:
        raise MalformedSA(f"entry {bad + 1} is outside [1, {ct.N}]")
    A.phase = Phase.BWT
    return A


def lf_counting_in_place(A: WorkArray, C: CountTable, meter: WorkspaceMeter = METER) -> WorkArray:
    """Replace BWT codes by ``C[c] + rank_c(BWT, i)``.

    Cells whose BWT symbol is a separator get provisional values in
    ``[2, d + 1]``.  ``C`` is left untouched; a metered working copy of it
    is consumed instead.
    """
    A.expect(Phase.BWT)
    counts = meter.copy(C.counts, A.cells.dtype)
    K.lf_counting_in_place(A.cells, counts)
    A.phase = Phase.LF
    return A


def lf_exact(sa: SuffixArray, isa: InversePermutation) -> np.ndarray:
    if sa.entries.shape != isa.entries.shape:
        raise LengthMismatch(f"SA has {len(sa)} entries, ISA has {isa.entries.shape[0]}")
    out = np.empty_like(sa.entries)
    K.lf_exact(sa.entries, isa.entries, out)
    return out


def invert_bwt(bwt, lf, start: int = 1) -> bytes:
    """Rebuild the text right to left by following ``lf`` from ``start``."""
    bwt = np.asarray(bwt, dtype=np.uint8)
    lf = np.asarray(lf)
    if bwt.shape != lf.shape:
        raise LengthMismatch(f"BWT has {bwt.shape[0]} symbols, LF has {lf.shape[0]}")
    out = np.empty_like(bwt)
    steps = K.invert_bwt(bwt, lf, start, out)
    if steps:
        raise CycleTooShort(f"LF cycle from {start} closed after {steps} of {bwt.shape[0]} steps")
    return out.tobytes()


def bwt_of(sa: SuffixArray, ct: ConcatText) -> np.ndarray:
    """BWT symbol codes as a fresh array, leaving ``sa`` intact."""
    A = bwt_in_place(WorkArray.from_sa(sa), ct)
    return A.cells.astype(np.uint8)
