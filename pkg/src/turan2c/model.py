"""Core graph types: 2-colored graphs, {2,3}-graphs and loop-carrying patterns.

Vertices are the integers ``1..n``.  Every edge is stored as a sorted tuple;
for pattern graphs a tuple may repeat a vertex (a loop).  All values are
frozen after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Union

Edge = tuple[int, ...]

COLORED_LABELS = ("red", "blue")
MIXED_LABELS = ("e2", "e3")


class GraphError(ValueError):
    """Raised when a graph value violates its invariants."""


def _normalize(edges: Iterable[Iterable[int]]) -> frozenset[Edge]:
    return frozenset(tuple(sorted(e)) for e in edges)


def _check_simple(n: int, edges: frozenset[Edge], arity: int, what: str) -> None:
    for e in edges:
        if len(e) != arity:
            raise GraphError(f"{what} edge {e} does not have {arity} vertices")
        if e[0] < 1 or e[-1] > n:
            raise GraphError(f"{what} edge {e} has a vertex outside 1..{n}")
        if len(set(e)) != arity:
            raise GraphError(f"loop in simple graph: {what} edge {e}")


@dataclass(frozen=True)
class EdgeClass:
    """One color/arity class of a (pattern) hypergraph."""

    label: str
    arity: int
    edges: frozenset[Edge]


@dataclass(frozen=True)
class ColoredGraph:
    """Simple 2-edge-colored graph; a pair in both sets is a double-colored edge."""

    n: int
    red: frozenset[Edge] = field(default_factory=frozenset)
    blue: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "red", _normalize(self.red))
        object.__setattr__(self, "blue", _normalize(self.blue))
        _check_simple(self.n, self.red, 2, "red")
        _check_simple(self.n, self.blue, 2, "blue")

    @property
    def classes(self) -> tuple[EdgeClass, ...]:
        return (EdgeClass("red", 2, self.red), EdgeClass("blue", 2, self.blue))

    @property
    def double(self) -> frozenset[Edge]:
        return self.red & self.blue

    @property
    def edge_count(self) -> int:
        """|red| + |blue|, so double-colored edges count twice."""
        return len(self.red) + len(self.blue)

    @property
    def is_proper(self) -> bool:
        return bool(self.red) and bool(self.blue)

    def color(self, name: str) -> frozenset[Edge]:
        if name not in COLORED_LABELS:
            raise GraphError(f"unknown color {name!r}")
        return getattr(self, name)


@dataclass(frozen=True)
class MixedGraph:
    """{2,3}-hypergraph with 2-edges ``e2`` and 3-edges ``e3``."""

    n: int
    e2: frozenset[Edge] = field(default_factory=frozenset)
    e3: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "e2", _normalize(self.e2))
        object.__setattr__(self, "e3", _normalize(self.e3))
        _check_simple(self.n, self.e2, 2, "2-")
        _check_simple(self.n, self.e3, 3, "3-")

    @property
    def classes(self) -> tuple[EdgeClass, ...]:
        return (EdgeClass("e2", 2, self.e2), EdgeClass("e3", 3, self.e3))

    def remove_vertex(self, v: int) -> "MixedGraph":
        """Delete ``v`` and its edges, shifting higher labels down by one."""
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} outside 1..{self.n}")

        def shift(e):
            return tuple(u - (u > v) for u in e)

        return MixedGraph(
            self.n - 1,
            {shift(e) for e in self.e2 if v not in e},
            {shift(e) for e in self.e3 if v not in e},
        )


@dataclass(frozen=True)
class PatternGraph:
    """Edge template whose edges are multisets, so loops like ``(1, 1)`` are allowed.

    ``classes`` is an ordered tuple of :class:`EdgeClass`; labels identify
    classes when patterns are compared, multiplied or used as hom targets.
    """

    n: int
    classes: tuple[EdgeClass, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        fixed = []
        seen = set()
        for cls in self.classes:
            if cls.arity < 2:
                raise GraphError(f"class {cls.label!r} has arity {cls.arity} < 2")
            if (cls.label, cls.arity) in seen:
                raise GraphError(f"duplicate class {cls.label!r} of arity {cls.arity}")
            seen.add((cls.label, cls.arity))
            edges = _normalize(cls.edges)
            for e in edges:
                if len(e) != cls.arity:
                    raise GraphError(f"{cls.label} edge {e} does not have multiplicity {cls.arity}")
                if e[0] < 1 or e[-1] > self.n:
                    raise GraphError(f"{cls.label} edge {e} has a vertex outside 1..{self.n}")
            fixed.append(EdgeClass(cls.label, cls.arity, edges))
        object.__setattr__(self, "classes", tuple(fixed))

    def edges(self, label: str) -> frozenset[Edge]:
        for cls in self.classes:
            if cls.label == label:
                return cls.edges
        raise KeyError(label)

    @property
    def has_loops(self) -> bool:
        return any(len(set(e)) < len(e) for cls in self.classes for e in cls.edges)


Graph = Union[ColoredGraph, MixedGraph, PatternGraph]


def signature(g: Graph) -> tuple[tuple[str, int], ...]:
    """The (label, arity) class structure of ``g``."""
    return tuple((c.label, c.arity) for c in g.classes)


def as_pattern(g: Graph) -> PatternGraph:
    if isinstance(g, PatternGraph):
        return g
    return PatternGraph(g.n, g.classes)


def from_classes(n: int, classes: Iterable[EdgeClass]) -> Graph:
    """Build the most specific graph type for loop-free class data."""
    classes = tuple(classes)
    labels = tuple(c.label for c in classes)
    loop_free = all(len(set(e)) == len(e) for c in classes for e in c.edges)
    if loop_free and labels == COLORED_LABELS:
        return ColoredGraph(n, classes[0].edges, classes[1].edges)
    if loop_free and labels == MIXED_LABELS:
        return MixedGraph(n, classes[0].edges, classes[1].edges)
    return PatternGraph(n, classes)


def density(g: Union[ColoredGraph, MixedGraph]) -> Fraction:
    """Edge density: each class count over C(n, arity), summed over classes."""
    total = Fraction(0)
    for cls in g.classes:
        if not cls.edges:
            continue
        if g.n < cls.arity:
            raise GraphError(f"n={g.n} is too small for arity {cls.arity}")
        total += Fraction(len(cls.edges), comb(g.n, cls.arity))
    return total


def complete_colored(n: int) -> ColoredGraph:
    """All pairs on ``1..n`` colored both red and blue."""
    pairs = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return ColoredGraph(n, pairs, pairs)


def complete_mixed(n: int) -> MixedGraph:
    vs = range(1, n + 1)
    return MixedGraph(n, combinations(vs, 2), combinations(vs, 3))
