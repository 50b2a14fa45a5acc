import json

import pytest

from quintic_descent.arith import PowerShape
from quintic_descent.search import Hit, partition, scan_range, theorem_search


def test_n1_example_hit():
    rep = theorem_search(5, [1])
    assert [h.as_dict() for h in rep.hits] == [
        {"N": 1, "X": 41, "Z": 5, "alpha": 1, "beta": 0, "gamma": 1, "p": 19}]
    assert 41**2 + 2**2 * 19**2 == 5**5


def test_no_counterexamples_small():
    rep = theorem_search(120, [2, 3, 5, 7])
    assert rep.counterexamples == []


def test_rejects_small_zmax():
    with pytest.raises(ValueError):
        theorem_search(1, [1])


def test_n1_hits_reverify():
    rep = theorem_search(40, [1])
    assert rep.hits and all(h.verify() for h in rep.hits)
    assert sum(1 for h in rep.hits if (h.X, h.Z) == (41, 5)) == 1


def test_n1_hits_match_naive_scan():
    from math import gcd
    from oracles import shape_oracle
    naive = set()
    for Z in range(2, 14):
        for X in range(1, Z**3):
            D = Z**5 - X * X
            if D > 0 and gcd(X, Z) == 1 and shape_oracle(D):
                naive.add((X, Z))
    assert {(h.X, h.Z) for h in theorem_search(13, [1]).hits} == naive


def test_hit_ordering_and_counterexamples():
    a = Hit(1, 5, 41, PowerShape(1, 0, 1, 19))
    b = Hit(2, 3, 1, PowerShape(1, 0, 0, None))
    assert sorted([b, a]) == [a, b]


def test_partition_covers_range():
    for z_max, k in [(200, 16), (10, 50), (3, 4)]:
        parts = partition(z_max, k)
        covered = [z for lo, hi in parts for z in range(lo, hi + 1)]
        assert covered == list(range(2, z_max + 1))


def test_partition_invariance():
    base = theorem_search(80, [1, 2, 3], chunks=1)
    for chunks in (2, 5, 13):
        assert theorem_search(80, [1, 2, 3], chunks=chunks).hits == base.hits
    merged = sorted(scan_range(2, 33, [1, 2, 3])[0] + scan_range(34, 80, [1, 2, 3])[0])
    assert merged == base.hits


def test_workers_match_serial():
    serial = theorem_search(60, [1, 2])
    parallel = theorem_search(60, [1, 2], workers=3)
    assert parallel.hits == serial.hits and parallel.pairs_scanned == serial.pairs_scanned


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "state.jsonl"
    first = theorem_search(50, [1], checkpoint=ck, chunks=4)
    lines = ck.read_text().splitlines()
    assert len(lines) == 4
    # drop the last chunk and resume: only that chunk is recomputed
    ck.write_text("\n".join(lines[:-1]) + "\n")
    again = theorem_search(50, [1], checkpoint=ck, chunks=4)
    assert again.hits == first.hits and again.pairs_scanned == first.pairs_scanned
    assert len(ck.read_text().splitlines()) == 4
    assert json.loads(lines[0])["n_values"] == [1]


def test_checkpoint_ignores_other_n(tmp_path):
    ck = tmp_path / "state.jsonl"
    theorem_search(30, [1], checkpoint=ck, chunks=2)
    rep = theorem_search(30, [2], checkpoint=ck, chunks=2)
    assert rep.hits == [] and len(ck.read_text().splitlines()) == 4
