import random

import pytest

from helpers import brute_hom_exists, random_colored, random_mixed
from turan2c.builtins import NAMES, builtin
from turan2c.hom import VertexAssignment, verify_hom
from turan2c.model import ColoredGraph, GraphError, MixedGraph, complete_colored, complete_mixed
from turan2c.nonuniform import (
    apex_lift,
    h9_vertex,
    mixed_colorability_checks,
    subdivide_2edges,
    suspend,
    vertex_link,
)

PATH_DOUBLE = ColoredGraph(4, [(1, 2), (1, 3), (3, 4)], [(1, 2), (1, 3), (3, 4)])


def test_apex_lift_of_t():
    g = apex_lift(builtin("T"))
    assert g == MixedGraph(5, [(1, 2), (1, 3), (3, 4)], [(1, 2, 5), (2, 3, 5), (3, 4, 5)])
    assert g == builtin("H5T")


def test_apex_lift_of_double_path_is_h5():
    assert apex_lift(PATH_DOUBLE) == builtin("H5")


def test_apex_lift_disjoint_edges():
    g = apex_lift(ColoredGraph(4, [(1, 2)], [(3, 4)]))
    assert g.e2 == {(1, 2)} and g.e3 == {(3, 4, 5)}


def test_link_examples():
    assert vertex_link(builtin("H5"), 5) == PATH_DOUBLE
    assert vertex_link(complete_mixed(4), 4) == complete_colored(3)
    with pytest.raises(GraphError):
        vertex_link(builtin("H5"), 6)


def test_link_renumbers_and_drops_incident_pairs():
    g = MixedGraph(4, [(1, 2), (2, 4)], [(1, 2, 3), (2, 3, 4)])
    assert vertex_link(g, 2) == ColoredGraph(3, [], [(1, 2), (2, 3)])


@pytest.mark.parametrize("name", [x for x in NAMES if isinstance(builtin(x), ColoredGraph)])
def test_round_trip_on_builtins(name):
    H = builtin(name)
    assert vertex_link(apex_lift(H), H.n + 1) == H


def test_round_trip_on_random_graphs():
    rng = random.Random(51)
    for _ in range(200):
        H = random_colored(rng, rng.randint(2, 8), 0.5, proper=True)
        lifted = apex_lift(H)
        assert len(lifted.e2) == len(H.red) and len(lifted.e3) == len(H.blue)
        assert vertex_link(lifted, H.n + 1) == H


def test_suspend_examples():
    assert suspend(MixedGraph(2, [(1, 2)], [])) == MixedGraph(3, [], [(1, 2, 3)])
    assert suspend(MixedGraph(3, [(1, 2), (1, 3)], [])) == MixedGraph(4, [], [(1, 2, 4), (1, 3, 4)])
    assert suspend(MixedGraph(0)) == MixedGraph(1)
    assert suspend(ColoredGraph(3, [(1, 2)], [(1, 2), (2, 3)])).e3 == {(1, 2, 4), (2, 3, 4)}
    with pytest.raises(GraphError):
        suspend(MixedGraph(3, [], [(1, 2, 3)]))


def test_subdivide_examples():
    assert subdivide_2edges(MixedGraph(3, [(1, 2)], [(1, 2, 3)])) == MixedGraph(4, [(1, 4), (2, 4)], [(1, 2, 3)])
    assert subdivide_2edges(MixedGraph(4, [(1, 2), (3, 4)], [])) == MixedGraph(
        6, [(1, 5), (2, 5), (3, 6), (4, 6)], [])
    g = MixedGraph(3, [], [(1, 2, 3)])
    assert subdivide_2edges(g) == g


def test_subdivide_properties():
    rng = random.Random(52)
    for _ in range(100):
        g = random_mixed(rng, rng.randint(1, 6))
        s = subdivide_2edges(g)
        assert s.e3 == g.e3
        assert len(s.e2) == 2 * len(g.e2)
        assert s.n == g.n + len(g.e2)


def test_h9_labels():
    assert h9_vertex("AXE") == 1 and h9_vertex("AYE") == 9
    with pytest.raises(ValueError):
        h9_vertex("ZZZ")


def test_colorability_checks():
    checks = {c.name: c for c in mixed_colorability_checks()}
    assert set(checks) == {"a", "b", "c", "d", "a-literal"}
    for key in "abcd":
        c = checks[key]
        assert c.passed and not c.informational
        assert verify_hom(c.source, builtin(c.target_name), c.assignment)
    assert checks["c"].source.n == 12
    assert checks["a"].source.n == 8
    assert not checks["a-literal"].passed and checks["a-literal"].informational


def test_literal_h5_failure_confirmed_by_oracle():
    h9 = builtin("H9")
    without_axf = h9.remove_vertex(h9_vertex("AXF"))
    assert not brute_hom_exists(without_axf, builtin("H5"))
    assert brute_hom_exists(without_axf, builtin("H5T"))


def test_link_check_hand_assignment():
    link = vertex_link(builtin("H5"), 5)
    a = VertexAssignment(4, 4, (2, 1, 1, 2))
    assert verify_hom(link, builtin("T"), a)
