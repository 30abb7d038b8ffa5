import json
import subprocess
import sys

import pytest

from dak import DocumentArray
from dak.cli import main


@pytest.fixture
def index(tmp_path):
    src = tmp_path / "docs.txt"
    src.write_bytes(b"ab\na\n")
    out = tmp_path / "idx"
    assert main(["build", "--format", "lines", "--in", str(src), "--out", str(out)]) == 0
    return out


def test_build_writes_index(index):
    meta = json.loads((index / "meta.json").read_text())
    assert (meta["N"], meta["d"], meta["sigma"], meta["sa_width"]) == (6, 2, 4, 4)
    assert (index / "text.bin").read_bytes() == b"ab\x01a\x01\x00"
    assert (index / "sa.bin").read_bytes()[:4] == b"DSAK"


def test_build_fasta(tmp_path):
    src = tmp_path / "r.fa"
    src.write_bytes(b">1\nAC\nGT\n>2\nA\n>3\nCC\n")
    assert main(["build", "--format", "fasta", "--in", str(src), "--out", str(tmp_path / "i")]) == 0
    assert json.loads((tmp_path / "i" / "meta.json").read_text())["d"] == 3


def test_build_raw(tmp_path, index):
    assert main(["build", "--format", "raw", "--in", str(index / "text.bin"), "--out", str(tmp_path / "i")]) == 0
    assert (tmp_path / "i" / "sa.bin").read_bytes() == (index / "sa.bin").read_bytes()


def test_build_reserved_byte(tmp_path, capsys):
    src = tmp_path / "bad.txt"
    src.write_bytes(b"ok\nba\x01d\n")
    assert main(["build", "--in", str(src), "--out", str(tmp_path / "i")]) != 0
    assert "line 2" in capsys.readouterr().err


def test_build_bwt_dump(tmp_path):
    src = tmp_path / "docs.txt"
    src.write_bytes(b"ab\na\n")
    dump = tmp_path / "bwt.bin"
    main(["build", "--in", str(src), "--out", str(tmp_path / "i"), "--bwt-out", str(dump)])
    assert dump.read_bytes() == b"\x01ba\x01\x00a"


@pytest.mark.parametrize("method", ["inplace", "isa", "rank-plain", "rank-sparse"])
def test_compute_and_verify(index, tmp_path, method, capsys):
    out = tmp_path / f"{method}.da"
    assert main(["compute", "--index", str(index), "--method", method, "--out", str(out)]) == 0
    assert DocumentArray.load(out).tolist() == [3, 1, 2, 2, 1, 1]
    report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert report["method"] == method and report["verified"] is True
    assert main(["verify", "--index", str(index), "--da", str(out)]) == 0


def test_methods_write_identical_files(index, tmp_path):
    blobs = set()
    for method in ("inplace", "isa", "rank-plain", "rank-sparse"):
        out = tmp_path / f"{method}.da"
        main(["compute", "--index", str(index), "--method", method, "--out", str(out)])
        blobs.add(out.read_bytes())
    assert len(blobs) == 1


def test_verify_detects_corruption(index, tmp_path, capsys):
    out = tmp_path / "da.bin"
    main(["compute", "--index", str(index), "--out", str(out)])
    raw = bytearray(out.read_bytes())
    raw[32 + 4 * 2] ^= 0x03  # entry 3: 2 -> 1
    out.write_bytes(bytes(raw))
    assert main(["verify", "--index", str(index), "--da", str(out)]) == 1
    assert "index 3" in capsys.readouterr().err

    out.write_bytes(bytes(raw[:-2]))
    assert main(["verify", "--index", str(index), "--da", str(out)]) == 2
    err = capsys.readouterr().err
    assert "expected 56 bytes" in err and "got 54" in err


def test_corrupt_index(index, tmp_path, capsys):
    sa = index / "sa.bin"
    sa.write_bytes(b"XXXX" + sa.read_bytes()[4:])
    assert main(["compute", "--index", str(index), "--out", str(tmp_path / "x")]) == 2
    assert "magic" in capsys.readouterr().err


def test_bench_outputs(index, tmp_path, capsys):
    js = tmp_path / "bench.jsonl"
    md = tmp_path / "bench.md"
    rc = main(["bench", "--index", str(index), str(index), "--methods", "inplace,isa", "--reps", "2",
               "--json", str(js), "--markdown", str(md)])
    assert rc == 0
    rows = [json.loads(line) for line in js.read_text().splitlines()]
    assert [r["method"] for r in rows] == ["inplace", "isa"] * 2
    assert md.read_text().startswith("| Dataset |")
    assert main(["bench", "--index", str(index), "--methods", "bogus"]) == 2


def test_deterministic_outputs(tmp_path):
    src = tmp_path / "docs.txt"
    src.write_bytes(b"banana\nbandana\nanna\n")
    for run in ("a", "b"):
        main(["build", "--in", str(src), "--out", str(tmp_path / run)])
        main(["compute", "--index", str(tmp_path / run), "--out", str(tmp_path / f"{run}.da")])
    assert (tmp_path / "a" / "sa.bin").read_bytes() == (tmp_path / "b" / "sa.bin").read_bytes()
    assert (tmp_path / "a.da").read_bytes() == (tmp_path / "b.da").read_bytes()


def test_module_entry_point(index, tmp_path):
    out = tmp_path / "da.bin"
    proc = subprocess.run(
        [sys.executable, "-m", "dak", "compute", "--index", str(index), "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert DocumentArray.load(out).tolist() == [3, 1, 2, 2, 1, 1]
