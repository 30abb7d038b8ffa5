"""Timing and workspace measurement of the document array methods.

Only the compute phase is timed.  The text, the suffix array and the count
table are inputs and the document array is the output; neither counts toward
the workspace, which is the metered peak of everything else the method
allocates.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .bitvector import Backend, separator_bitvector
from .bwt import WorkArray
from .docarray import DocumentArray, da_inplace, da_via_isa, da_via_rank, verify_da
from .meter import METER, WorkspaceMeter
from .suffix import SuffixArray
from .text import ConcatText, build_concat, count_table

METHODS = ("inplace", "isa", "rank-plain", "rank-sparse")


@dataclass
class BenchReport:
    dataset: str
    N: int
    d: int
    sigma: int
    method: str
    seconds: float
    workspace: int  # bytes
    verified: bool | None = None
    reps: int = 1
    times: list[float] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def run_once(
    method: str, ct: ConcatText, sa: SuffixArray, meter: WorkspaceMeter = METER
) -> tuple[DocumentArray, float, int]:
    """Run one method; returns the array, wall seconds and peak workspace bytes.

    ``inplace`` works directly in ``sa.entries`` and leaves them restored.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    C = count_table(ct) if method == "inplace" else None
    with meter.measure() as m:
        t0 = time.perf_counter()
        if method == "inplace":
            da, _ = da_inplace(WorkArray.from_sa(sa, copy=False), ct, C, meter)
        elif method == "isa":
            da = da_via_isa(sa, ct, meter)
        else:
            backend = Backend.PLAIN if method == "rank-plain" else Backend.SPARSE
            bv = separator_bitvector(ct, backend, meter)
            da = da_via_rank(sa, bv, meter)
            del bv
        elapsed = time.perf_counter() - t0
    return da, elapsed, m.peak


def bench(
    dataset: str,
    ct: ConcatText,
    sa: SuffixArray,
    method: str,
    reps: int = 1,
    verify: bool = True,
    meter: WorkspaceMeter = METER,
) -> tuple[DocumentArray, BenchReport]:
    times = []
    peak = 0
    for _ in range(max(1, reps)):
        da, seconds, ws = run_once(method, ct, sa, meter)
        times.append(seconds)
        peak = max(peak, ws)
    report = BenchReport(
        dataset=dataset, N=ct.N, d=ct.d, sigma=ct.sigma, method=method,
        seconds=statistics.median(times), workspace=peak, reps=len(times), times=times,
    )
    if verify:
        report.verified = verify_da(da, sa, ct).ok
    return da, report


def warmup() -> None:
    """Compile every kernel on a toy input so timings exclude JIT cost."""
    from .suffix import suffix_sort

    ct = build_concat([b"ab", b"a", b""])
    sa = suffix_sort(ct)
    for method in METHODS:
        run_once(method, ct, sa)
        run_once(method, ct, SuffixArray(sa.entries.astype(np.int64)))


def calibration_run(nbytes: int = 1 << 20, meter: WorkspaceMeter = METER) -> tuple[int, int]:
    """Allocate a known scratch buffer; returns (reported peak, leaked bytes)."""
    with meter.measure() as m:
        scratch = meter.alloc(nbytes, np.uint8)
        scratch[:] = 1
        del scratch
    return m.peak, m.leaked


def markdown_table(reports: list[BenchReport]) -> str:
    """Time and workspace per method, one row per dataset."""
    methods = [m for m in METHODS if any(r.method == m for r in reports)]
    methods += sorted({r.method for r in reports} - set(methods))
    rows: dict[str, dict[str, BenchReport]] = {}
    for r in reports:
        rows.setdefault(r.dataset, {})[r.method] = r

    head = ["Dataset", "N", "d"]
    head += [f"{m} time (s)" for m in methods]
    head += [f"{m} workspace (KB)" for m in methods]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for name, by_method in rows.items():
        any_r = next(iter(by_method.values()))
        cells = [name, str(any_r.N), str(any_r.d)]
        for m in methods:
            r = by_method.get(m)
            cells.append(f"{r.seconds:.4f}" if r else "")
        for m in methods:
            r = by_method.get(m)
            cells.append(f"{r.workspace / 1024:,.2f}" if r else "")
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def human_table(reports: list[BenchReport]) -> str:
    head = f"{'dataset':<16} {'method':<12} {'N':>12} {'d':>9} {'time (s)':>10} {'workspace (B)':>14}  verified"
    lines = [head, "-" * len(head)]
    for r in reports:
        lines.append(
            f"{r.dataset:<16} {r.method:<12} {r.N:>12} {r.d:>9} {r.seconds:>10.4f} {r.workspace:>14}  {r.verified}"
        )
    return "\n".join(lines)

