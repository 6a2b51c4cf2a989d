"""Random generators and brute-force oracles shared by the test modules.

The oracles deliberately avoid the library's search code: they enumerate
every map and compare edge images directly.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement, permutations, product

from turan2c.model import ColoredGraph, EdgeClass, MixedGraph, PatternGraph


def random_colored(rng: random.Random, n: int, p: float = 0.5, proper: bool = False) -> ColoredGraph:
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        red = [e for e in pairs if rng.random() < p]
        blue = [e for e in pairs if rng.random() < p]
        G = ColoredGraph(n, red, blue)
        if not proper or G.is_proper:
            return G


def random_mixed(rng: random.Random, n: int, p2: float = 0.4, p3: float = 0.3) -> MixedGraph:
    vs = range(1, n + 1)
    return MixedGraph(n, [e for e in combinations(vs, 2) if rng.random() < p2],
                      [e for e in combinations(vs, 3) if rng.random() < p3])


def random_pattern(rng: random.Random, n: int, labels=(("red", 2), ("blue", 2)), p: float = 0.4) -> PatternGraph:
    classes = []
    for label, arity in labels:
        pool = list(combinations_with_replacement(range(1, n + 1), arity))
        classes.append(EdgeClass(label, arity, frozenset(e for e in pool if rng.random() < p)))
    return PatternGraph(n, tuple(classes))


def _class_map(g):
    return {(c.label, c.arity): set(c.edges) for c in g.classes}


def image_ok(G, H, images) -> bool:
    target = _class_map(H)
    for c in G.classes:
        allowed = target[(c.label, c.arity)]
        for e in c.edges:
            if tuple(sorted(images[v - 1] for v in e)) not in allowed:
                return False
    return True


def brute_homs(G, H) -> list[tuple[int, ...]]:
    """Every homomorphism G -> H as an image tuple, by enumerating all m^n maps."""
    return [imgs for imgs in product(range(1, H.n + 1), repeat=G.n) if image_ok(G, H, imgs)]


def brute_hom_exists(G, H) -> bool:
    return any(image_ok(G, H, imgs) for imgs in product(range(1, H.n + 1), repeat=G.n))


def brute_copy_exists(host: ColoredGraph, F: ColoredGraph) -> bool:
    for imgs in permutations(range(1, host.n + 1), F.n):
        if image_ok(F, host, imgs):
            return True
    return False
