import numpy as np
import pytest

from dak import (
    DocumentArray,
    WorkArray,
    build_concat,
    count_table,
    da_inplace,
    da_via_isa,
    da_via_rank,
    oracle_da,
    separator_bitvector,
    suffix_sort,
    verify_da,
)
from dak.bwt import Phase
from dak.errors import FormatError, LengthMismatch, MalformedSA, UniverseMismatch, WrongPhase
from dak.suffix import SuffixArray

from conftest import da_oracle, random_collection


def trace_algorithm(ct, sa):
    """Plain-Python replay of the in-place method; also counts separator branches."""
    n, d = ct.N, ct.d
    text = ct.data.tolist()
    A = [text[p - 2] if p > 1 else text[n - 1] for p in sa.tolist()]
    C = count_table(ct).counts.tolist()
    for i in range(n):
        C[A[i]] += 1
        A[i] = C[A[i]]
    DA = [0] * n
    pos, doc, branches, visited = 1, d + 1, 0, set()
    for i in range(n, 0, -1):
        visited.add(pos)
        tmp = A[pos - 1]
        A[pos - 1] = i
        DA[pos - 1] = doc
        if tmp <= d + 1:
            tmp = doc
            doc -= 1
            branches += 1
        pos = tmp
    return DA, A, branches, doc, visited


@pytest.mark.parametrize(
    "docs, sa, da",
    [
        ([b"ab", b"a"], [6, 3, 5, 4, 1, 2], [3, 1, 2, 2, 1, 1]),
        ([b"x"], [3, 2, 1], [2, 1, 1]),
        ([b"a", b"a"], [5, 2, 4, 1, 3], [3, 1, 2, 1, 2]),
    ],
)
def test_worked_examples(docs, sa, da):
    ct = build_concat(docs)
    sa_ = SuffixArray(np.array(sa, dtype=np.int32))
    assert suffix_sort(ct) == sa_
    assert da_oracle(ct, sa_) == da
    assert trace_algorithm(ct, sa_)[0] == da

    got, A = da_inplace(WorkArray.from_sa(sa_), ct, count_table(ct))
    assert got.tolist() == da
    assert A.tolist() == sa and A.phase is Phase.SA_RESTORED
    assert da_via_isa(sa_, ct).tolist() == da
    for backend in ("plain", "sparse"):
        assert da_via_rank(sa_, separator_bitvector(ct, backend)).tolist() == da


def test_trace_properties(rng):
    for _ in range(100):
        ct = random_collection(rng, max_total=800)
        sa = suffix_sort(ct)
        DA, A, branches, doc, visited = trace_algorithm(ct, sa)
        assert A == sa.tolist()
        assert branches == ct.d + 1 and doc == 0
        assert visited == set(range(1, ct.N + 1))
        assert DA == da_oracle(ct, sa)


def test_three_methods_agree(rng):
    for _ in range(200):
        ct = random_collection(rng)
        sa = suffix_sort(ct)
        expected = da_oracle(ct, sa)
        da, A = da_inplace(WorkArray.from_sa(sa), ct)
        assert da.tolist() == expected
        assert np.array_equal(A.cells, sa.entries)
        assert da_via_isa(sa, ct).tolist() == expected
        assert da_via_rank(sa, separator_bitvector(ct, "plain")).tolist() == expected
        assert da_via_rank(sa, separator_bitvector(ct, "sparse")).tolist() == expected
        assert oracle_da(sa, ct).tolist() == expected


def test_histogram_counts_document_lengths(rng):
    for _ in range(20):
        ct = random_collection(rng)
        da, _ = da_inplace(WorkArray.from_sa(suffix_sort(ct)), ct)
        hist = da.histogram()
        assert [hist[j] for j in range(1, ct.d + 1)] == ct.doc_lengths().tolist()
        assert hist[ct.d + 1] == 1
        assert da.entries[0] == ct.d + 1


def test_single_document():
    ct = build_concat([b"banana"])
    da, _ = da_inplace(WorkArray.from_sa(suffix_sort(ct)), ct)
    assert da.tolist() == [2] + [1] * 7


def test_int64_work_array(toy):
    sa = SuffixArray(suffix_sort(toy).entries.astype(np.int64))
    da, A = da_inplace(WorkArray.from_sa(sa), toy)
    assert da.tolist() == [3, 1, 2, 2, 1, 1]
    assert A.cells.dtype == np.int64 and A.tolist() == [6, 3, 5, 4, 1, 2]


def test_inplace_reuses_the_buffer(toy):
    sa = suffix_sort(toy)
    A = WorkArray.from_sa(sa, copy=False)
    da_inplace(A, toy)
    assert A.cells is sa.entries and sa.tolist() == [6, 3, 5, 4, 1, 2]
    da, _ = da_inplace(A, toy)  # restored arrays can be run again
    assert da.tolist() == [3, 1, 2, 2, 1, 1]


@pytest.mark.parametrize("bad", [[6, 3, 5, 4, 2, 1], [6, 5, 3, 4, 1, 2], [6, 6, 5, 4, 1, 2]])
def test_malformed_sa_detected(toy, bad):
    with pytest.raises(MalformedSA):
        da_inplace(WorkArray(np.array(bad, dtype=np.int32)), toy)


def test_wrong_phase(toy):
    A = WorkArray(suffix_sort(toy).entries.copy(), Phase.LF)
    with pytest.raises(WrongPhase):
        da_inplace(A, toy)


def test_length_checks(toy):
    with pytest.raises(LengthMismatch):
        da_via_isa(SuffixArray(np.array([2, 1], dtype=np.int32)), toy)
    bv = separator_bitvector(build_concat([b"x"]), "plain")
    with pytest.raises(UniverseMismatch):
        da_via_rank(suffix_sort(toy), bv)


def test_verify_da(toy):
    sa = suffix_sort(toy)
    good = DocumentArray(np.array([3, 1, 2, 2, 1, 1], dtype=np.int32), 2)
    report = verify_da(good, sa, toy)
    assert report.ok and report.histogram == {1: 3, 2: 2, 3: 1}

    bad = DocumentArray(np.array([1, 1, 2, 2, 1, 1], dtype=np.int32), 2)
    report = verify_da(bad, sa, toy)
    assert not report.ok and report.first_mismatch == 1
    assert (report.expected, report.found) == (3, 1)

    short = DocumentArray(np.array([3, 1], dtype=np.int32), 2)
    assert not verify_da(short, sa, toy).ok


def test_da_serialization(tmp_path, toy):
    da, _ = da_inplace(WorkArray.from_sa(suffix_sort(toy)), toy)
    path = tmp_path / "da.bin"
    da.save(path)
    raw = path.read_bytes()
    assert raw[:4] == b"DDAK" and raw[5] == 4 and len(raw) == 32 + 6 * 4
    assert DocumentArray.load(path) == da
    path.write_bytes(raw[:-4])
    with pytest.raises(FormatError, match="expected 56 bytes"):
        DocumentArray.load(path)
