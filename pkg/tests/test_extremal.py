import random
from fractions import Fraction
from math import comb

import pytest

from helpers import brute_copy_exists, random_colored
from turan2c import extremal
from turan2c.builtins import builtin
from turan2c.extremal import ExtremalResult, MonotonicityError, colex_pairs, extremal_number, extremal_table
from turan2c.model import ColoredGraph, GraphError

FAMILIES = {
    "K3": ["K3"],
    "K3MINUS": ["K3MINUS"],
    "T": ["T"],
    "T1": ["T1"],
    "T3": ["T3"],
    "T1+T2": ["T1", "T2"],
}


def family(names):
    return [builtin(x) for x in names]


def assert_witness(result, fam):
    w = result.witness
    assert w is not None and w.n == result.n
    assert w.edge_count == result.value
    for F in fam:
        assert not brute_copy_exists(w, F)


def test_colex_order():
    assert colex_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize("key", FAMILIES)
def test_branch_and_bound_matches_exhaustive(key):
    fam = family(FAMILIES[key])
    for n in range(2, 6):
        fast = extremal_number(fam, n)
        slow = extremal_number(fam, n, "exhaustive")
        assert fast.value == slow.value, (key, n)
        assert fast.complete and slow.complete
        assert_witness(fast, fam)
        assert_witness(slow, fam)


def test_random_families_match_exhaustive():
    rng = random.Random(31)
    for _ in range(25):
        fam = [random_colored(rng, rng.randint(2, 3), 0.6) for _ in range(rng.randint(1, 2))]
        fam = [F for F in fam if F.edge_count] or [ColoredGraph(2, [(1, 2)], [])]
        n = rng.randint(2, 4)
        assert extremal_number(fam, n).value == extremal_number(fam, n, "exhaustive").value


def test_spec_examples():
    assert extremal_number(family(["K3"]), 4).value == 10
    assert extremal_number(family(["T1"]), 3).value == 6
    assert extremal_number(family(["T1"]), 5).value == 16
    assert extremal_number(family(["T"]), 2).value == 2


def test_t1_t2_values_at_four_vertices():
    fam = family(["T1", "T2"])
    r = extremal_number(fam, 4)
    assert r.value == extremal_number(fam, 4, "exhaustive").value == 10
    # both members have K4 as underlying graph, so an all-double K4 minus an edge is free
    assert r.witness.red == r.witness.blue


@pytest.mark.parametrize("n, value", [(3, 5), (4, 10), (5, 16), (6, 24)])
def test_k3_formula(n, value):
    r = extremal_number(family(["K3"]), n)
    assert r.value == value == comb(n, 2) + n * n // 4
    assert_witness(r, family(["K3"]))


@pytest.mark.parametrize("n, value", [(4, 10), (5, 16), (6, 24)])
def test_t1_formula(n, value):
    assert extremal_number(family(["T1"]), n).value == value


def test_k3_table_densities_and_monotonicity():
    rows = extremal_table(family(["K3"]), range(3, 7))
    assert [r.value for r in rows] == [5, 10, 16, 24]
    assert [r.density for r in rows] == [Fraction(5, 3), Fraction(5, 3), Fraction(8, 5), Fraction(8, 5)]


@pytest.mark.parametrize("key", FAMILIES)
def test_tables_are_monotone(key):
    rows = extremal_table(family(FAMILIES[key]), range(2, 7))
    densities = [r.density for r in rows]
    assert densities == sorted(densities, reverse=True)


def test_t_free_bound():
    for r in extremal_table(family(["T"]), range(1, 7)):
        assert r.value <= comb(r.n + 1, 2)


def test_empty_range_and_empty_family():
    assert extremal_table(family(["K3"]), []) == []
    r = extremal_number([], 4)
    assert r.value == 12 and r.note


def test_argument_errors():
    with pytest.raises(GraphError):
        extremal_number(family(["K3"]), 0)
    with pytest.raises(GraphError):
        extremal_number(family(["K3"]), 3, "greedy")
    with pytest.raises(GraphError):
        extremal_number([ColoredGraph(2)], 3)
    with pytest.raises(GraphError):
        extremal_number(family(["K3"]), 6, "exhaustive")
    with pytest.raises(GraphError):
        extremal_table(family(["K3"]), [4, 3])


def test_monotonicity_violation_is_reported(monkeypatch):
    fake = {3: 3, 4: 12}

    def fake_number(fam, n, mode="branch_and_bound", **kw):
        return ExtremalResult(n, ("F",), fake[n], None, 0)

    monkeypatch.setattr(extremal, "extremal_number", fake_number)
    with pytest.raises(MonotonicityError):
        extremal_table(family(["K3"]), [3, 4])


def test_forbidden_graph_larger_than_n():
    r = extremal_number(family(["H8"]), 5)
    assert r.value == 2 * comb(5, 2)


def test_timeout_reports_lower_bound():
    r = extremal_number(family(["K3"]), 8, timeout=0.05)
    assert not r.complete and "lower bound" in r.note
    assert r.value <= comb(8, 2) + 16


def test_parallel_matches_serial():
    fam = family(["T1"])
    serial = extremal_number(fam, 5, threads=1)
    parallel = extremal_number(fam, 5, threads=2)
    assert serial.value == parallel.value
    assert_witness(parallel, fam)


def test_names_are_recorded():
    assert extremal_number(family(["K3"]), 3, names=["K3"]).family == ("K3",)
    assert extremal_number(family(["K3", "T"]), 3).family == ("F1", "F2")
