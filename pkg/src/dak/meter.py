"""Allocation-level workspace accounting.

Algorithms allocate every internal buffer through :data:`METER`.  Buffers that
belong to the input or the output of a method are allocated with
``output=True`` (or registered with :meth:`WorkspaceMeter.exclude`) and never
count toward the workspace, which is the peak of everything else.

Release is tied to the lifetime of the numpy array, so a buffer stops counting
as soon as the last reference to it goes away.
"""

from __future__ import annotations

import weakref
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np


@dataclass
class Measurement:
    peak: int = 0
    leaked: int = 0


class WorkspaceMeter:
    def __init__(self) -> None:
        self.live = 0
        self.peak = 0
        self._excluded: set[int] = set()

    def _charge(self, nbytes: int) -> None:
        self.live += nbytes
        if self.live > self.peak:
            self.peak = self.live

    def _release(self, nbytes: int) -> None:
        self.live -= nbytes

    def alloc(self, shape, dtype, *, fill=None, output: bool = False) -> np.ndarray:
        a = np.empty(shape, dtype=dtype) if fill is None else np.full(shape, fill, dtype=dtype)
        if output:
            self._excluded.add(id(a))
            weakref.finalize(a, self._excluded.discard, id(a))
        else:
            self._charge(a.nbytes)
            weakref.finalize(a, self._release, a.nbytes)
        return a

    def zeros(self, shape, dtype, *, output: bool = False) -> np.ndarray:
        return self.alloc(shape, dtype, fill=0, output=output)

    def copy(self, src: np.ndarray, dtype=None) -> np.ndarray:
        a = self.alloc(src.shape, dtype or src.dtype)
        a[...] = src
        return a

    def exclude(self, *arrays: np.ndarray) -> None:
        """Register caller-owned input/output buffers (informational only)."""
        for a in arrays:
            self._excluded.add(id(a))

    def is_excluded(self, a: np.ndarray) -> bool:
        return id(a) in self._excluded

    @contextmanager
    def measure(self):
        """Measure the peak workspace of the enclosed block, in bytes.

        The peak is relative to the live total on entry; ``leaked`` is the
        live total left over on exit.
        """
        base = self.live
        saved_peak = self.peak
        self.peak = base
        m = Measurement()
        try:
            yield m
        finally:
            m.peak = self.peak - base
            m.leaked = self.live - base
            self.peak = max(saved_peak, self.peak)


METER = WorkspaceMeter()
