"""Turán density classification of 2-colored graphs with checkable certificates.

Bipartite inputs (no monochromatic odd cycle) land in {1, 4/3, 3/2}:
1 iff T-colorable, 4/3 iff H8-colorable but not T-colorable, 3/2 otherwise.
Non-bipartite inputs only get the lower bound 3/2.
"""

from __future__ import annotations

import enum
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .builtins import builtin
from .hom import VertexAssignment, find_hom, verify_hom
from .model import ColoredGraph, GraphError


class DensityClass(enum.Enum):
    DEGENERATE = Fraction(1)
    FOUR_THIRDS = Fraction(4, 3)
    THREE_HALVES = Fraction(3, 2)
    NON_BIPARTITE = "at least 3/2"

    @property
    def lower_bound(self) -> Fraction:
        if self is DensityClass.NON_BIPARTITE:
            return Fraction(3, 2)
        return self.value

    @property
    def exact(self) -> bool:
        return self is not DensityClass.NON_BIPARTITE

    def __str__(self) -> str:
        return ">= 3/2" if self is DensityClass.NON_BIPARTITE else str(self.value)


@dataclass(frozen=True)
class OddCycleWitness:
    color: str
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class HomWitness:
    target: str
    assignment: VertexAssignment


@dataclass(frozen=True)
class NonColorabilityClaim:
    """Exhaustive search found no homomorphism into ``target``."""

    target: str
    exhausted: bool = True


Certificate = Union[OddCycleWitness, HomWitness, NonColorabilityClaim]


@dataclass(frozen=True)
class Classification:
    density: DensityClass
    certificate: Certificate

    @property
    def value(self) -> Fraction:
        return self.density.lower_bound


def monochromatic_odd_cycle(H: ColoredGraph, color: str) -> Optional[tuple[int, ...]]:
    """An odd cycle all of whose edges have ``color``, or None if that class is bipartite."""
    edges = H.color(color)
    adj = [[] for _ in range(H.n + 1)]
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    side: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for s in range(1, H.n + 1):
        if s in side:
            continue
        side[s], parent[s] = 0, None
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in side:
                    side[w], parent[w] = 1 - side[u], u
                    queue.append(w)
                elif side[w] == side[u]:
                    return _close_cycle(u, w, parent)
    return None


def _close_cycle(u: int, w: int, parent: dict) -> tuple[int, ...]:
    # u and w sit at the same BFS depth parity; join both tree paths at their meeting point
    path_u = [u]
    while parent[path_u[-1]] is not None:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] is not None:
        path_w.append(parent[path_w[-1]])
    on_u = set(path_u)
    meet = next(x for x in path_w if x in on_u)
    up = path_u[: path_u.index(meet) + 1]
    down = path_w[: path_w.index(meet)]
    return tuple(up + down[::-1])


def is_odd_cycle(H: ColoredGraph, color: str, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    edges = H.color(color)
    return all(tuple(sorted((cycle[i], cycle[(i + 1) % k]))) in edges for i in range(k))


def classify(H: ColoredGraph, *, allow_improper: bool = False) -> Classification:
    if not H.is_proper:
        msg = "input must have at least one red and one blue edge"
        if not allow_improper:
            raise GraphError(msg)
        warnings.warn(msg + "; classifying outside the classification's hypotheses", stacklevel=2)

    for color in ("red", "blue"):
        cycle = monochromatic_odd_cycle(H, color)
        if cycle is not None:
            return Classification(DensityClass.NON_BIPARTITE, OddCycleWitness(color, cycle))

    for name, cls in (("T", DensityClass.DEGENERATE), ("H8", DensityClass.FOUR_THIRDS)):
        a = find_hom(H, builtin(name))
        if a is not None:
            return Classification(cls, HomWitness(name, a))
    return Classification(DensityClass.THREE_HALVES, NonColorabilityClaim("H8"))


def check_certificate(H: ColoredGraph, result: Classification) -> bool:
    """Re-verify a certificate independently of how it was produced."""
    cert = result.certificate
    if isinstance(cert, OddCycleWitness):
        return result.density is DensityClass.NON_BIPARTITE and is_odd_cycle(H, cert.color, cert.cycle)
    if isinstance(cert, HomWitness):
        expected = {"T": DensityClass.DEGENERATE, "H8": DensityClass.FOUR_THIRDS}[cert.target]
        return result.density is expected and verify_hom(H, builtin(cert.target), cert.assignment)
    return (
        result.density is DensityClass.THREE_HALVES
        and find_hom(H, builtin("H8")) is None
        and all(monochromatic_odd_cycle(H, c) is None for c in ("red", "blue"))
    )
