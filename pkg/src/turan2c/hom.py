"""Color-preserving homomorphisms, copies, blow-ups and products."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, permutations, product as cartesian
from math import comb
from typing import Iterator, Mapping, Optional, Sequence

from .model import (
    ColoredGraph,
    Edge,
    EdgeClass,
    Graph,
    GraphError,
    PatternGraph,
    as_pattern,
    from_classes,
    signature,
)


@dataclass(frozen=True)
class VertexAssignment:
    """Total map ``1..source_n -> 1..target_n``; ``images[v - 1]`` is the image of ``v``."""

    source_n: int
    target_n: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source_n:
            raise GraphError(f"assignment covers {len(self.images)} of {self.source_n} vertices")
        for t in self.images:
            if not 1 <= t <= self.target_n:
                raise GraphError(f"image {t} outside 1..{self.target_n}")

    def __getitem__(self, v: int) -> int:
        if not 1 <= v <= self.source_n:
            raise IndexError(v)
        return self.images[v - 1]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], source_n: int, target_n: int):
        return cls(source_n, target_n, tuple(mapping[v] for v in range(1, source_n + 1)))

    def as_dict(self) -> dict[int, int]:
        return {v: t for v, t in enumerate(self.images, start=1)}

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)


def _target_classes(G: Graph, H: Graph) -> dict[str, frozenset[Edge]]:
    target = {(c.label, c.arity): c.edges for c in H.classes}
    out = {}
    for c in G.classes:
        if (c.label, c.arity) not in target:
            raise GraphError(
                f"class mismatch: source class {c.label!r}/{c.arity} has no counterpart in "
                f"target classes {signature(H)}"
            )
        out[c.label] = target[(c.label, c.arity)]
    return out


def _image(a: VertexAssignment, e: Edge) -> Edge:
    return tuple(sorted(a[v] for v in e))


def first_violation(G: Graph, H: Graph, a: VertexAssignment) -> Optional[tuple[str, Edge]]:
    """The first source edge (in class then sorted order) whose image is not a target edge."""
    if a.source_n != G.n or a.target_n != H.n:
        raise GraphError("assignment sizes do not match the graphs")
    target = _target_classes(G, H)
    for cls in G.classes:
        for e in sorted(cls.edges):
            if _image(a, e) not in target[cls.label]:
                return cls.label, e
    return None


def verify_hom(G: Graph, H: Graph, a: VertexAssignment) -> bool:
    return first_violation(G, H, a) is None


def _sub_multisets(edges: frozenset[Edge]) -> set[Edge]:
    subs = set()
    for e in edges:
        for k in range(1, len(e) + 1):
            subs.update(combinations(e, k))
    return subs


def iter_homs(G: Graph, H: Graph, *, injective: bool = False) -> Iterator[VertexAssignment]:
    """Enumerate homomorphisms ``G -> H`` in a fixed deterministic order.

    Backtracking with forward checking: after each assignment the domain of
    every unassigned vertex sharing an edge with it is cut down to values
    whose partial image still extends to a target edge.  The next vertex is
    the one with the smallest domain, ties broken by vertex index.
    """
    target = _target_classes(G, H)
    partial_ok = {label: _sub_multisets(edges) for label, edges in target.items()}
    n, m = G.n, H.n

    incident: list[list[tuple[str, Edge]]] = [[] for _ in range(n + 1)]
    for cls in G.classes:
        for e in cls.edges:
            for v in set(e):
                incident[v].append((cls.label, e))
    neighbors = [set() for _ in range(n + 1)]
    for v in range(1, n + 1):
        for _, e in incident[v]:
            neighbors[v].update(u for u in e if u != v)

    def consistent(v: int, t: int, assign: dict[int, int]) -> bool:
        for label, e in incident[v]:
            img = tuple(sorted(t if u == v else assign[u] for u in e if u == v or u in assign))
            if img not in partial_ok[label]:
                return False
        return True

    domains: dict[int, set[int]] = {}
    for v in range(1, n + 1):
        domains[v] = {t for t in range(1, m + 1) if consistent(v, t, {})}
        if not domains[v]:
            return

    def search(assign: dict[int, int], domains: dict[int, set[int]]):
        if len(assign) == n:
            yield VertexAssignment(n, m, tuple(assign[v] for v in range(1, n + 1)))
            return
        v = min((u for u in domains if u not in assign), key=lambda u: (len(domains[u]), u))
        for t in sorted(domains[v]):
            assign[v] = t
            new = dict(domains)
            new[v] = {t}
            ok = True
            for u in neighbors[v] | (set(new) if injective else set()):
                if u in assign:
                    continue
                pruned = {c for c in new[u] if (not injective or c != t) and consistent(u, c, assign)}
                if not pruned:
                    ok = False
                    break
                new[u] = pruned
            if ok:
                yield from search(assign, new)
            del assign[v]

    if n == 0:
        yield VertexAssignment(0, m, ())
        return
    yield from search({}, domains)


def find_hom(G: Graph, H: Graph, *, injective: bool = False) -> Optional[VertexAssignment]:
    return next(iter_homs(G, H, injective=injective), None)


def _bitmask_adjacency(G: ColoredGraph) -> tuple[list[int], list[int]]:
    red = [0] * G.n
    blue = [0] * G.n
    for adj, edges in ((red, G.red), (blue, G.blue)):
        for u, v in edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
    return red, blue


class CopyFinder:
    """Injective color-preserving embeddings of a fixed 2-colored graph.

    Hosts are given as bitmask adjacency lists (0-indexed); the search plan
    for each choice of pre-placed pattern vertices is compiled once.
    """

    def __init__(self, pattern: ColoredGraph):
        self.pattern = pattern
        self.k = pattern.n
        self.red = [set() for _ in range(self.k)]
        self.blue = [set() for _ in range(self.k)]
        for adj, edges in ((self.red, pattern.red), (self.blue, pattern.blue)):
            for u, v in edges:
                adj[u - 1].add(v - 1)
                adj[v - 1].add(u - 1)
        self._plans: dict[tuple[int, ...], list] = {}
        self.edges = sorted(
            (tuple(x - 1 for x in e), e in pattern.red, e in pattern.blue)
            for e in pattern.red | pattern.blue
        )

    def _plan(self, prefix: tuple[int, ...]):
        plan = self._plans.get(prefix)
        if plan is not None:
            return plan
        order = list(prefix)
        rest = [v for v in range(self.k) if v not in prefix]
        while rest:
            placed = set(order)
            best = max(rest, key=lambda v: (len((self.red[v] | self.blue[v]) & placed), -v))
            order.append(best)
            rest.remove(best)
        pos = {v: i for i, v in enumerate(order)}
        plan = []
        for i, v in enumerate(order):
            reds = [pos[u] for u in self.red[v] if pos[u] < i]
            blues = [pos[u] for u in self.blue[v] if pos[u] < i]
            plan.append((v, reds, blues))
        self._plans[prefix] = plan
        return plan

    def find(self, red_adj: Sequence[int], blue_adj: Sequence[int], n: int,
             fixed: Sequence[tuple[int, int]] = ()) -> Optional[list[int]]:
        """Return ``image[pattern_vertex] = host_vertex`` (0-indexed) or None.

        ``fixed`` pins pattern vertices to host vertices before the search.
        """
        k = self.k
        if k > n:
            return None
        prefix = tuple(a for a, _ in fixed)
        plan = self._plan(prefix)
        chosen = [0] * k
        full = (1 << n) - 1
        pinned = [h for _, h in fixed]

        def candidates(i: int, used: int) -> int:
            _, reds, blues = plan[i]
            mask = full & ~used
            for j in reds:
                mask &= red_adj[chosen[j]]
            for j in blues:
                mask &= blue_adj[chosen[j]]
            return mask

        def extend(i: int, used: int) -> bool:
            if i == k:
                return True
            mask = candidates(i, used)
            if i < len(pinned):
                bit = 1 << pinned[i]
                if not mask & bit:
                    return False
                chosen[i] = pinned[i]
                return extend(i + 1, used | bit)
            while mask:
                low = mask & -mask
                h = low.bit_length() - 1
                chosen[i] = h
                if extend(i + 1, used | low):
                    return True
                mask ^= low
            return False

        if not extend(0, 0):
            return None
        image = [0] * k
        for i, (v, _, _) in enumerate(plan):
            image[v] = chosen[i]
        return image


def contains_copy(G: ColoredGraph, H: ColoredGraph) -> Optional[VertexAssignment]:
    """An injective embedding of ``H`` into ``G`` keeping edge colors (not necessarily induced)."""
    red, blue = _bitmask_adjacency(G)
    image = CopyFinder(H).find(red, blue, G.n)
    if image is None:
        return None
    return VertexAssignment(H.n, G.n, tuple(h + 1 for h in image))


def blow_up(H: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``i`` by ``sizes[i-1]`` independent vertices; loops expand inside a part."""
    if len(sizes) != H.n:
        raise GraphError(f"need {H.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    parts = []
    start = 1
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    total = start - 1

    classes = []
    for cls in H.classes:
        out = set()
        for e in cls.edges:
            mult = Counter(e)
            choices = [combinations(parts[x - 1], k) for x, k in sorted(mult.items())]
            for pick in cartesian(*choices):
                out.add(tuple(sorted(v for group in pick for v in group)))
        classes.append(EdgeClass(cls.label, cls.arity, frozenset(out)))
    return from_classes(total, classes)


def blow_up_edge_counts(H: Graph, sizes: Sequence[int]) -> dict[str, int]:
    """Per-class edge counts of ``blow_up(H, sizes)`` without building it.

    Distinct pattern multisets expand to disjoint edge sets, so each class
    count is a sum of products of binomials.
    """
    if len(sizes) != H.n:
        raise GraphError(f"need {H.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    counts = {}
    for cls in H.classes:
        total = 0
        for e in cls.edges:
            term = 1
            for x, k in Counter(e).items():
                term *= comb(sizes[x - 1], k)
            total += term
        counts[cls.label] = total
    return counts


def product_index(i: int, j: int, n2: int) -> int:
    """Lexicographic index of the vertex pair ``(i, j)`` in a product."""
    return (i - 1) * n2 + j


def product(G1: Graph, G2: Graph) -> PatternGraph:
    """Product over matching classes: edges combine through all permutation matchings."""
    G1, G2 = as_pattern(G1), as_pattern(G2)
    if sorted(signature(G1)) != sorted(signature(G2)):
        raise GraphError(f"class mismatch: {signature(G1)} vs {signature(G2)}")
    n2 = G2.n
    classes = []
    for cls in G1.classes:
        other = G2.edges(cls.label)
        out = set()
        for e in cls.edges:
            for f in other:
                for sigma in set(permutations(f)):
                    out.add(tuple(sorted(product_index(a, b, n2) for a, b in zip(e, sigma))))
        classes.append(EdgeClass(cls.label, cls.arity, frozenset(out)))
    return PatternGraph(G1.n * n2, tuple(classes))


def two_coloring(n: int, edges) -> Optional[dict[int, int]]:
    """Sides 1/2 for every vertex so each edge joins different sides, or None."""
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = {}
    for s in range(1, n + 1):
        if s in side:
            continue
        side[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in side:
                    side[w] = 3 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


_T1_TARGET = {(1, 1): 1, (2, 2): 2, (2, 1): 3, (1, 2): 4}


def t1_coloring(H: ColoredGraph, red_sides: Optional[Mapping[int, int]] = None,
                blue_sides: Optional[Mapping[int, int]] = None) -> VertexAssignment:
    """Map a bipartite 2-colored graph into T1 by the pair of sides each vertex lies on.

    Sides default to BFS 2-colorings of the red and blue subgraphs.
    """
    for color, sides in (("red", red_sides), ("blue", blue_sides)):
        edges = H.color(color)
        if sides is None:
            sides = two_coloring(H.n, edges)
            if sides is None:
                raise GraphError(f"{color} subgraph has an odd cycle")
        else:
            if set(sides) != set(range(1, H.n + 1)) or not set(sides.values()) <= {1, 2}:
                raise GraphError(f"{color} bipartition must give side 1 or 2 to every vertex")
            bad = [e for e in edges if sides[e[0]] == sides[e[1]]]
            if bad:
                raise GraphError(f"invalid {color} bipartition: edge {min(bad)} inside one side")
        if color == "red":
            red_sides = sides
        else:
            blue_sides = sides
    images = tuple(_T1_TARGET[(red_sides[v], blue_sides[v])] for v in range(1, H.n + 1))
    return VertexAssignment(H.n, 4, images)
