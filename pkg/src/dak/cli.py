"""Command-line front end: ``dak build|compute|bench|verify``."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bench as B
from .bwt import bwt_of
from .docarray import DocumentArray, verify_da
from .errors import DakError, FormatError, ReservedByteInDocument
from .suffix import SuffixArray, suffix_sort
from .text import FORMATS, ConcatText, from_raw, load_collection

TEXT_FILE = "text.bin"
SA_FILE = "sa.bin"
META_FILE = "meta.json"


@dataclass
class Index:
    path: Path
    ct: ConcatText
    sa: SuffixArray
    meta: dict

    @property
    def name(self) -> str:
        return self.meta.get("name") or self.path.name


def boundaries_digest(ct: ConcatText) -> str:
    return hashlib.sha256(ct.boundaries.astype("<i8").tobytes()).hexdigest()


def load_index(path: str | Path) -> Index:
    path = Path(path)
    try:
        meta = json.loads((path / META_FILE).read_text())
        ct = from_raw((path / TEXT_FILE).read_bytes())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: unreadable index ({exc})") from exc
    sa, d = SuffixArray.load(path / SA_FILE)
    if len(sa) != ct.N or d != ct.d:
        raise FormatError(f"{path}: SA header (N={len(sa)}, d={d}) does not match text (N={ct.N}, d={ct.d})")
    if meta.get("N") != ct.N or meta.get("d") != ct.d:
        raise FormatError(f"{path}: {META_FILE} does not match the stored text")
    if meta.get("boundaries_sha256") not in (None, boundaries_digest(ct)):
        raise FormatError(f"{path}: boundary digest mismatch")
    return Index(path, ct, sa, meta)


def cmd_build(args) -> int:
    try:
        ct = load_collection(args.input, args.format)
    except ReservedByteInDocument as exc:
        noun = {"lines": "line", "fasta": "record"}.get(args.format, "record")
        raise DakError(f"{args.input}: {noun} {exc.doc}: {exc}") from exc
    sa = suffix_sort(ct)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / TEXT_FILE).write_bytes(ct.tobytes())
    sa.save(out / SA_FILE, ct.d)
    meta = {
        "name": args.name or Path(args.input).stem,
        "source": str(args.input),
        "format": args.format,
        "N": ct.N,
        "d": ct.d,
        "sigma": ct.sigma,
        "sa_width": sa.width,
        "boundaries_sha256": boundaries_digest(ct),
    }
    (out / META_FILE).write_text(json.dumps(meta, indent=2) + "\n")
    if args.bwt_out:
        Path(args.bwt_out).write_bytes(bwt_of(sa, ct).tobytes())
    print(f"built {out}: N={ct.N} d={ct.d} sigma={ct.sigma}")
    return 0


def cmd_compute(args) -> int:
    index = load_index(args.index)
    B.warmup()
    da, report = B.bench(index.name, index.ct, index.sa, args.method, reps=args.reps)
    if args.method == "inplace":
        on_disk = (index.path / SA_FILE).read_bytes()
        if index.sa.tobytes(index.ct.d) != on_disk:
            print("error: suffix array was not restored after the in-place run", file=sys.stderr)
            return 1
    da.save(args.out)
    print(B.human_table([report]))
    print(report.to_json())
    return 0 if report.verified else 1


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = sorted(set(methods) - set(B.METHODS))
    if unknown:
        raise DakError(f"unknown methods {unknown}; choose from {', '.join(B.METHODS)}")
    B.warmup()
    reports = []
    for path in args.index:
        index = load_index(path)
        for method in methods:
            _, report = B.bench(index.name, index.ct, index.sa, method, reps=args.reps)
            reports.append(report)
            print(report.to_json(), file=sys.stderr)
    table = B.markdown_table(reports)
    print(table)
    if args.json:
        Path(args.json).write_text("".join(r.to_json() + "\n" for r in reports))
    if args.markdown:
        Path(args.markdown).write_text(table + "\n")
    return 0 if all(r.verified for r in reports) else 1


def cmd_verify(args) -> int:
    index = load_index(args.index)
    da = DocumentArray.load(args.da)
    if len(da) != index.ct.N:
        raise FormatError(f"{args.da}: expected {index.ct.N} entries, found {len(da)}")
    report = verify_da(da, index.sa, index.ct)
    if report.ok:
        print(f"ok: N={index.ct.N} d={index.ct.d}")
        return 0
    print(f"mismatch: {report.message}", file=sys.stderr)
    return 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dak", description="Document array construction and benchmarking.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="ingest a collection and write T^cat, SA and metadata")
    p.add_argument("--format", choices=FORMATS, default="lines")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True, help="index directory")
    p.add_argument("--name", help="dataset name recorded in the index")
    p.add_argument("--bwt-out", help="also dump the BWT symbol codes to this file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("compute", help="compute the document array with one method")
    p.add_argument("--index", required=True)
    p.add_argument("--method", choices=B.METHODS, default="inplace")
    p.add_argument("--out", required=True, help="DA output file")
    p.add_argument("--reps", type=int, default=1)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bench", help="time and measure methods over several indexes")
    p.add_argument("--index", nargs="+", required=True)
    p.add_argument("--methods", default=",".join(B.METHODS))
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--json", help="write one JSON report per line here")
    p.add_argument("--markdown", help="write the Markdown table here")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check a DA file against the definitional oracle")
    p.add_argument("--index", required=True)
    p.add_argument("--da", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except DakError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
