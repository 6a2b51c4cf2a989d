"""Constructions on {2,3}-graphs and the colorability checks around H9."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .builtins import H9_LABELS, builtin
from .hom import VertexAssignment, find_hom, product, verify_hom
from .model import ColoredGraph, Graph, GraphError, MixedGraph


def apex_lift(H: ColoredGraph) -> MixedGraph:
    """Add vertex n+1; red edges become 2-edges, blue edges plus the apex become 3-edges."""
    apex = H.n + 1
    return MixedGraph(apex, H.red, {e + (apex,) for e in H.blue})


def vertex_link(G: MixedGraph, v: int) -> ColoredGraph:
    """2-colored graph on V - {v}: red = 2-edges avoiding v, blue = link pairs of v in 3-edges.

    Remaining vertices keep their order and are renumbered 1..n-1.
    """
    if not 1 <= v <= G.n:
        raise GraphError(f"vertex {v} outside 1..{G.n}")

    def shift(e):
        return tuple(u - (u > v) for u in e)

    red = {shift(e) for e in G.e2 if v not in e}
    blue = {shift(tuple(u for u in e if u != v)) for e in G.e3 if v in e}
    return ColoredGraph(G.n - 1, red, blue)


def suspend(G: Union[MixedGraph, ColoredGraph]) -> MixedGraph:
    """Add one new vertex to every edge, turning 2-edges into 3-edges.

    A 2-colored graph is read as the plain 2-graph on the union of its colors.
    """
    if isinstance(G, ColoredGraph):
        pairs = G.red | G.blue
    else:
        if G.e3:
            raise GraphError("suspension of 3-edges would create 4-edges")
        pairs = G.e2
    v = G.n + 1
    return MixedGraph(v, (), {e + (v,) for e in pairs})


def subdivide_2edges(G: MixedGraph) -> MixedGraph:
    """Split every 2-edge {u, v} into {u, x}, {x, v} through a fresh vertex x.

    New vertices are numbered n+1, n+2, ... following the sorted order of the 2-edges.
    """
    e2 = set()
    n = G.n
    for u, v in sorted(G.e2):
        n += 1
        e2.add((u, n))
        e2.add((v, n))
    return MixedGraph(n, e2, G.e3)


@dataclass(frozen=True)
class ColorabilityCheck:
    name: str
    description: str
    source: Graph
    target_name: str
    assignment: Optional[VertexAssignment]
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.assignment is not None


def _check(name, description, source, target_name, informational=False):
    target = builtin(target_name)
    a = find_hom(source, target)
    if a is not None and not verify_hom(source, target, a):
        raise AssertionError(f"search returned an invalid homomorphism for {name}")
    return ColorabilityCheck(name, description, source, target_name, a, informational)


def h9_vertex(label: str) -> int:
    return H9_LABELS.index(label) + 1


def mixed_colorability_checks() -> list[ColorabilityCheck]:
    """The four colorability facts around H9, plus one informational row.

    Check (a) uses H5 as the apex lift of T; the literal six-edge H5 list is
    reported separately because it does not color H9 minus AXF.
    """
    h9 = builtin("H9")
    without_axf = h9.remove_vertex(h9_vertex("AXF"))
    axe_aye = tuple(sorted((h9_vertex("AXE"), h9_vertex("AYE"))))
    without_pair = MixedGraph(h9.n, h9.e2 - {axe_aye}, h9.e3)
    triple = product(product(builtin("H1"), builtin("H2")), builtin("H3"))
    link5 = vertex_link(builtin("H5"), 5)
    return [
        _check("a", "H9 minus AXF is H5-colorable (H5 = apex lift of T)", without_axf, "H5T"),
        _check("b", "H9 minus the 2-edge AXE-AYE is H6-colorable", without_pair, "H6"),
        _check("c", "H1 x H2 x H3 (12 vertices) is H9-colorable", triple, "H9"),
        _check("d", "link of vertex 5 in H5 is T-colorable", link5, "T"),
        _check("a-literal", "H9 minus AXF into the listed H5 {12,13,34,125,135,345}",
               without_axf, "H5", informational=True),
    ]
