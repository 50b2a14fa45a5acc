import math

import pytest
from hypothesis import given, strategies as st

from oracles import brute_quintic
from quintic_descent.descent import (
    QuinticSolution, UVPair, completeness_report, enumerate_primitive, qy_identity_defect,
    oracle_enumerate, parametrize, quartic_x, quartic_y,
)


@pytest.mark.parametrize("u, v, qx, qy", [
    (1, 2, 41, -19),
    (1, 0, 1, 5),
    (0, 1, 5, 1),
    (2, 1, -19, 41),
])
def test_quartic_examples(u, v, qx, qy):
    assert quartic_x((u, v)) == qx
    assert quartic_y((u, v)) == qy


def test_quartics_by_direct_evaluation():
    # 1 - 40 + 80 and 16 - 40 + 5
    assert quartic_x(UVPair(1, 2)) == 1 - 10 * 4 + 5 * 16
    assert quartic_y(UVPair(1, 2)) == 16 - 10 * 4 + 5


@pytest.mark.parametrize("u, v, sol", [
    (1, 2, (41, -38, 5)),
    (1, 0, (1, 0, 1)),
    (2, 1, (-38, 41, 5)),
])
def test_parametrize_examples(u, v, sol):
    s = parametrize((u, v))
    assert (s.x, s.y, s.z) == sol


def test_uvpair_invariants():
    UVPair(3, 4)
    UVPair(1, 0, allow_degenerate=True)
    for bad in [(2, 4), (3, 5), (1, 0)]:
        with pytest.raises(ValueError):
            UVPair(*bad)


def test_solution_rejects_non_solution():
    with pytest.raises(ValueError):
        QuinticSolution(1, 1, 1)


def test_identity_on_grid():
    for u in range(-50, 51):
        for v in range(-50, 51):
            x, y = u * quartic_x((u, v)), v * quartic_y((u, v))
            assert x * x + y * y == (u * u + v * v) ** 5


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_symmetry(u, v):
    assert quartic_x((u, v)) == quartic_y((v, u))


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_qy_identity_property(u, v):
    assert qy_identity_defect(u, v) == 0


@given(st.integers(-300, 300), st.integers(-300, 300))
def test_coprime_opposite_parity_gives_primitive(u, v):
    if math.gcd(u, v) != 1 or (u - v) % 2 == 0:
        return
    assert parametrize((u, v)).primitive


def test_enumerate_small():
    assert set(enumerate_primitive(1)) == {QuinticSolution(1, 0, 1), QuinticSolution(0, 1, 1)}
    assert enumerate_primitive(4) == enumerate_primitive(1)
    five = enumerate_primitive(5)
    assert QuinticSolution(41, 38, 5) in five and QuinticSolution(38, 41, 5) in five


def test_no_solutions_with_z_2_to_4():
    brute = brute_quintic(4)
    assert {s[2] for s in brute} == {1}


def test_sorted_by_z_then_abs_x():
    sols = enumerate_primitive(30)
    assert sols == sorted(sols, key=lambda s: (s.z, abs(s.x), abs(s.y)))


def test_oracle_matches_double_scan():
    assert {(s.x, s.y, s.z) for s in oracle_enumerate(13)} == brute_quintic(13)


def test_oracle_small():
    assert QuinticSolution(41, 38, 5) in oracle_enumerate(5)
    assert set(oracle_enumerate(1)) == {QuinticSolution(1, 0, 1), QuinticSolution(0, 1, 1)}


@pytest.mark.parametrize("z_max", [1, 5, 30])
def test_completeness(z_max):
    rep = completeness_report(z_max)
    assert rep.equal, rep.failures()
    assert rep.non_primitive_pairs == []


def test_completeness_classes_at_5():
    rep = completeness_report(5)
    assert [(s.x, s.y, s.z) for s in rep.parametrized if s.z == 5] == [(38, 41, 5), (41, 38, 5)]


def test_partitioned_enumeration_merges():
    whole = enumerate_primitive(60)
    parts = enumerate_primitive(20) + enumerate_primitive(45, z_min=21) + enumerate_primitive(60, z_min=46)
    assert sorted(parts, key=QuinticSolution.sort_key) == whole
    oparts = oracle_enumerate(30, z_min=16) + oracle_enumerate(15)
    assert sorted(oparts, key=QuinticSolution.sort_key) == oracle_enumerate(30)


def test_report_names_discrepancy(monkeypatch):
    import quintic_descent.descent as d
    real = d.oracle_enumerate
    monkeypatch.setattr(d, "oracle_enumerate", lambda z: real(z)[:-1])
    rep = d.completeness_report(5)
    assert not rep.equal
    assert rep.failures() == ["parametrized solution 41 38 5 not found by the oracle"]
