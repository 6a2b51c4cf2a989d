"""Exact extremal numbers ex(F, n) for families of forbidden 2-colored graphs.

Each unordered pair gets one of four states (none, red, blue, both) and
contributes 0, 1, 1 or 2 to the edge count.  ``branch_and_bound`` walks the
pairs in colex order with an optimistic-bound cut, an incremental
forbidden-copy check seeded at the newly decided pair, and a symmetry cut
that keeps vertex 1 of maximum weighted degree.  ``exhaustive`` visits every
one of the 4^C(n,2) states and checks copies by brute force over injective
maps; it shares no search code with the branch-and-bound.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import Optional, Sequence

from .hom import CopyFinder
from .model import ColoredGraph, GraphError

NONE, RED, BLUE, BOTH = 0, 1, 2, 3
WEIGHT = (0, 1, 1, 2)
# greedy: dense states first so a good incumbent appears early
STATE_ORDER = (BOTH, RED, BLUE, NONE)
EXHAUSTIVE_MAX_N = 5


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    family: tuple[str, ...]
    value: int
    witness: Optional[ColoredGraph]
    node_count: int
    complete: bool = True
    mode: str = "branch_and_bound"
    note: str = ""

    @property
    def density(self) -> Optional[Fraction]:
        if self.n < 2:
            return None
        return Fraction(self.value, comb(self.n, 2))


class _Timeout(Exception):
    pass


def colex_pairs(n: int) -> list[tuple[int, int]]:
    """Pairs (u, v), u < v, 0-indexed, ordered by (v, u)."""
    return [(u, v) for v in range(n) for u in range(v)]


def _graph_from_states(n: int, pairs, states) -> ColoredGraph:
    red = [(u + 1, v + 1) for (u, v), s in zip(pairs, states) if s & RED]
    blue = [(u + 1, v + 1) for (u, v), s in zip(pairs, states) if s & BLUE]
    return ColoredGraph(n, red, blue)


def _validate_family(family: Sequence[ColoredGraph]) -> None:
    for F in family:
        if not isinstance(F, ColoredGraph):
            raise GraphError("family members must be 2-colored graphs")
        if F.edge_count == 0:
            raise GraphError("a forbidden graph without edges is contained in every large graph")


class _Search:
    def __init__(self, family, n, deadline=None, prefix=()):
        self.n = n
        self.pairs = colex_pairs(n)
        self.finders = [CopyFinder(F) for F in family if F.n <= n]
        self.deadline = deadline
        self.prefix = tuple(prefix)
        self.red = [0] * n
        self.blue = [0] * n
        self.deg = [0] * n
        self.open = [n - 1] * n
        self.states = [NONE] * len(self.pairs)
        self.best = -1
        self.best_states = None
        self.nodes = 0

    def _creates_copy(self, u: int, v: int, state: int) -> bool:
        has_red, has_blue = bool(state & RED), bool(state & BLUE)
        for finder in self.finders:
            for (a, b), need_red, need_blue in finder.edges:
                if (need_red and not has_red) or (need_blue and not has_blue):
                    continue
                for x, y in ((u, v), (v, u)):
                    if finder.find(self.red, self.blue, self.n, ((a, x), (b, y))) is not None:
                        return True
        return False

    def _set(self, i: int, state: int, sign: int) -> None:
        u, v = self.pairs[i]
        w = WEIGHT[state] * sign
        self.deg[u] += w
        self.deg[v] += w
        self.open[u] -= sign
        self.open[v] -= sign
        if state & RED:
            self.red[u] ^= 1 << v
            self.red[v] ^= 1 << u
        if state & BLUE:
            self.blue[u] ^= 1 << v
            self.blue[v] ^= 1 << u
        self.states[i] = state if sign > 0 else NONE

    def _symmetry_cut(self) -> bool:
        cap = self.deg[0] + 2 * self.open[0]
        return any(d > cap for d in self.deg[1:])

    def run(self) -> None:
        self._descend(0, 0)

    def _descend(self, i: int, current: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Timeout
        if i == len(self.pairs):
            if current > self.best:
                self.best = current
                self.best_states = tuple(self.states)
            return
        remaining = len(self.pairs) - i
        if current + 2 * remaining <= self.best:
            return
        order = (self.prefix[i],) if i < len(self.prefix) else STATE_ORDER
        u, v = self.pairs[i]
        for state in order:
            if current + WEIGHT[state] + 2 * (remaining - 1) <= self.best:
                continue
            self._set(i, state, 1)
            if not self._symmetry_cut() and not (state and self._creates_copy(u, v, state)):
                self._descend(i + 1, current + WEIGHT[state])
            self._set(i, state, -1)


def _names(family, names):
    if names is not None:
        return tuple(names)
    return tuple(f"F{i + 1}" for i in range(len(family)))


def _run_branch(args):
    family, n, deadline, prefix = args
    search = _Search(family, n, deadline, prefix)
    try:
        search.run()
        complete = True
    except _Timeout:
        complete = False
    return search.best, search.best_states, search.nodes, complete


def _branch_and_bound(family, n, timeout, threads):
    deadline = None if timeout is None else time.monotonic() + timeout
    pairs = colex_pairs(n)
    if threads <= 1 or len(pairs) < 2:
        best, states, nodes, complete = _run_branch((family, n, deadline, ()))
    else:
        # split on the first two pairs; results are merged in fixed branch order
        prefixes = [p for p in product(STATE_ORDER, repeat=2)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outs = list(pool.map(_run_branch, [(family, n, deadline, p) for p in prefixes]))
        best, states, nodes, complete = -1, None, 0, True
        for b, s, k, c in outs:
            nodes += k
            complete &= c
            if b > best:
                best, states = b, s
    return best, states, nodes, complete


def _has_copy_bruteforce(red: set, blue: set, n: int, F: ColoredGraph) -> bool:
    f_red = [(a - 1, b - 1) for a, b in F.red]
    f_blue = [(a - 1, b - 1) for a, b in F.blue]
    for image in permutations(range(n), F.n):
        if all(frozenset((image[a], image[b])) in red for a, b in f_red) and all(
            frozenset((image[a], image[b])) in blue for a, b in f_blue
        ):
            return True
    return False


def _exhaustive(family, n):
    if n > EXHAUSTIVE_MAX_N:
        raise GraphError(f"exhaustive mode is limited to n <= {EXHAUSTIVE_MAX_N}")
    pairs = [frozenset(p) for p in colex_pairs(n)]
    best, best_states, visited = -1, None, 0
    for states in product(range(4), repeat=len(pairs)):
        visited += 1
        count = sum(WEIGHT[s] for s in states)
        if count <= best:
            continue
        red = {p for p, s in zip(pairs, states) if s & RED}
        blue = {p for p, s in zip(pairs, states) if s & BLUE}
        if not any(_has_copy_bruteforce(red, blue, n, F) for F in family if F.n <= n):
            best, best_states = count, states
    return best, best_states, visited


def extremal_number(family: Sequence[ColoredGraph], n: int, mode: str = "branch_and_bound", *,
                    names: Optional[Sequence[str]] = None, timeout: Optional[float] = None,
                    threads: Optional[int] = None) -> ExtremalResult:
    """Maximum of |red| + |blue| over n-vertex graphs containing no member of ``family``.

    With ``timeout`` (seconds) the branch-and-bound may stop early; the result
    then carries the best value found so far and ``complete=False``.
    """
    if n < 1:
        raise GraphError("n must be at least 1")
    family = list(family)
    labels = _names(family, names)
    if mode not in ("branch_and_bound", "exhaustive"):
        raise GraphError(f"unknown mode {mode!r}")
    if not family:
        full = 2 * comb(n, 2)
        pairs = [(u, v) for v in range(2, n + 1) for u in range(1, v)]
        return ExtremalResult(n, labels, full, ColoredGraph(n, pairs, pairs), 0, True, mode,
                              note="empty family: every graph is free")
    _validate_family(family)

    if mode == "exhaustive":
        best, states, nodes = _exhaustive(family, n)
        complete = True
    else:
        if threads is None:
            threads = int(os.environ.get("TURAN2C_THREADS", "1"))
        best, states, nodes, complete = _branch_and_bound(family, n, timeout, threads)

    witness = _graph_from_states(n, colex_pairs(n), states) if states is not None else None
    note = "" if complete else "timed out: value is a lower bound"
    return ExtremalResult(n, labels, max(best, 0), witness, nodes, complete, mode, note)


class MonotonicityError(AssertionError):
    pass


def extremal_table(family: Sequence[ColoredGraph], ns: Sequence[int], mode: str = "branch_and_bound",
                   **kwargs) -> list[ExtremalResult]:
    """Results for each n, checking that ex(n)/C(n,2) never increases along ``ns``."""
    ns = list(ns)
    if ns != sorted(ns):
        raise GraphError("n range must be ascending")
    results = [extremal_number(family, n, mode, **kwargs) for n in ns]
    previous = None
    for r in results:
        if r.density is None or not r.complete:
            continue
        if previous is not None and r.density > previous.density:
            raise MonotonicityError(
                f"pi_n increased from {previous.density} (n={previous.n}) to {r.density} (n={r.n})"
            )
        previous = r
    return results
