"""Blow-up edge density of a pattern as a polynomial, maximized over the simplex."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

import numpy as np
from scipy.stats import qmc

from .hom import blow_up, blow_up_edge_counts
from .model import EdgeClass, Graph, GraphError, PatternGraph, as_pattern, density


@dataclass(frozen=True)
class DensityPolynomial:
    """Sum of ``coeff * prod(p_i ** exps[i])`` over ``terms``."""

    m: int
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __call__(self, x) -> float:
        x = np.asarray(x, dtype=float)
        return float(sum(float(c) * np.prod(x ** np.array(e)) for c, e in self.terms))

    def exact(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * prod(Fraction(xi) ** k for xi, k in zip(x, e)) for c, e in self.terms),
                   Fraction(0))

    def gradient(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        g = np.zeros(self.m)
        for c, e in self.terms:
            for i, k in enumerate(e):
                if k:
                    reduced = list(e)
                    reduced[i] -= 1
                    g[i] += float(c) * k * np.prod(x ** np.array(reduced))
        return g

    def hessian(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        h = np.zeros((self.m, self.m))
        for c, e in self.terms:
            for i in range(self.m):
                for j in range(self.m):
                    reduced = list(e)
                    k = reduced[i]
                    reduced[i] -= 1
                    k2 = reduced[j]
                    reduced[j] -= 1
                    if k and k2 > 0:
                        h[i, j] += float(c) * k * k2 * np.prod(x ** np.array(reduced))
        return h

    def degrees(self) -> set[int]:
        return {sum(e) for _, e in self.terms}


def density_polynomial(H: Graph) -> DensityPolynomial:
    """Limit density of blow-ups of ``H`` with part proportions ``p``.

    An edge multiset with multiplicities m_1..m_j (arity r) contributes
    r!/(m_1!...m_j!) * prod p_i^m_i; all classes are summed.
    """
    H = as_pattern(H)
    acc: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for cls in H.classes:
        for e in cls.edges:
            mult = Counter(e)
            exps = tuple(mult.get(i, 0) for i in range(1, H.n + 1))
            acc[exps] += Fraction(factorial(cls.arity), prod(factorial(k) for k in mult.values()))
    return DensityPolynomial(H.n, tuple(sorted(((c, e) for e, c in acc.items()), key=lambda t: t[1])))


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1} (sort-based)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def projected_residual(p: DensityPolynomial, x: np.ndarray) -> float:
    return float(np.linalg.norm(x - project_simplex(x + p.gradient(x))))


def kkt_gap(p: DensityPolynomial, x, support_tol: float = 1e-9) -> float:
    """How far ``x`` is from KKT on the simplex: equal partials on the support, none larger off it."""
    x = np.asarray(x, dtype=float)
    g = p.gradient(x)
    support = x > support_tol
    lam = g[support].max()
    spread = float(lam - g[support].min())
    excess = float(max(0.0, (g[~support] - lam).max())) if (~support).any() else 0.0
    return max(spread, excess)


def start_points(m: int, interior: int = 16) -> list[np.ndarray]:
    """Corners, centroid, then low-discrepancy interior points; fixed order."""
    points = [np.eye(m)[i] for i in range(m)]
    points.append(np.full(m, 1.0 / m))
    if m > 1 and interior > 0:
        halton = qmc.Halton(d=m - 1, scramble=False).random(interior + 1)[1:]
        for h in halton:
            cuts = np.concatenate(([0.0], np.sort(h), [1.0]))
            points.append(np.diff(cuts))
    return points


@dataclass(frozen=True)
class SimplexMaximum:
    weights: np.ndarray
    value: float
    residual: float
    starts_used: int
    converged: bool


def _ascend(p: DensityPolynomial, x: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, float]:
    fx = p(x)
    step = 1.0
    for _ in range(max_iter):
        g = p.gradient(x)
        if np.linalg.norm(x - project_simplex(x + g)) <= tol:
            break
        while True:
            cand = project_simplex(x + step * g)
            fc = p(cand)
            if fc >= fx + 1e-4 * float(g @ (cand - x)):
                break
            step *= 0.5
            if step < 1e-14:
                # no float-visible ascent left
                return x, fx
        if fc <= fx:
            return x, fx
        x, fx = cand, fc
        step = min(step * 2.0, 1e3)
    return x, fx


def _polish(p: DensityPolynomial, x: np.ndarray, iters: int = 20) -> np.ndarray:
    """Newton steps on the face spanned by the support: equal partials, unit sum."""
    support = np.nonzero(x > 1e-12)[0]
    k = len(support)
    if k < 2:
        return x
    best = x
    for _ in range(iters):
        g = p.gradient(x)[support]
        h = p.hessian(x)[np.ix_(support, support)]
        lam = g.mean()
        kkt = np.zeros((k + 1, k + 1))
        kkt[:k, :k] = h
        kkt[:k, k] = -1.0
        kkt[k, :k] = 1.0
        rhs = np.concatenate([-(g - lam), [1.0 - x[support].sum()]])
        try:
            delta = np.linalg.solve(kkt, rhs)
        except np.linalg.LinAlgError:
            break
        trial = x.copy()
        trial[support] += delta[:k]
        if (trial < 0).any():
            break
        if projected_residual(p, trial) > projected_residual(p, best):
            break
        x = best = trial
        if np.abs(delta[:k]).max() < 1e-16:
            break
    return best


def maximize_simplex(p: DensityPolynomial, starts: int = 16, tol: float = 1e-11,
                     max_iter: int = 20000) -> SimplexMaximum:
    """Multi-start projected gradient ascent with Armijo backtracking.

    Each run ends with Newton steps on its support face, since near the
    optimum value differences drop below float resolution and Armijo stalls.
    """
    if tol <= 0:
        raise GraphError("tolerance must be positive")
    best = None
    points = start_points(p.m, starts)
    for x0 in points:
        x, fx = _ascend(p, x0.copy(), max(tol, 1e-8), max_iter)
        x = _polish(p, x)
        fx = p(x)
        if best is None or fx > best[1] + 1e-15:
            best = (x, fx)
    x, fx = best
    residual = projected_residual(p, x)
    return SimplexMaximum(x, fx, residual, len(points), residual <= tol)


def grid_maximum(p: DensityPolynomial, step: float = 1e-3, max_points: int = 5_000_000):
    """Best value over the lattice {x : x_i in step*Z, sum x = 1}."""
    N = round(1 / step)
    m = p.m
    if comb(N + m - 1, m - 1) > max_points:
        raise GraphError(f"grid with step {step} on {m} parts is too large")
    if m == 1:
        pts = np.ones((1, 1))
    elif m == 2:
        i = np.arange(N + 1)
        pts = np.stack([i, N - i], axis=1) / N
    else:
        pts = _compositions(N, m).astype(float) / N
    values = np.zeros(len(pts))
    for c, e in p.terms:
        values += float(c) * np.prod(pts ** np.array(e), axis=1)
    k = int(np.argmax(values))
    return pts[k], float(values[k])


def _compositions(N: int, m: int) -> np.ndarray:
    if m == 1:
        return np.array([[N]])
    parts = []
    for first in range(N + 1):
        rest = _compositions(N - first, m - 1)
        parts.append(np.hstack([np.full((len(rest), 1), first), rest]))
    return np.vstack(parts)


def rounded_sizes(weights: Sequence[float], n: int) -> list[int]:
    """Largest-remainder rounding of ``n * weights`` to integers summing to ``n``."""
    raw = [w * n for w in weights]
    sizes = [int(np.floor(r)) for r in raw]
    short = n - sum(sizes)
    order = sorted(range(len(raw)), key=lambda i: (-(raw[i] - sizes[i]), i))
    for i in order[:short]:
        sizes[i] += 1
    return sizes


def empirical_density_check(H: Graph, point: Sequence[float], n: int,
                            materialize_limit: int = 60) -> Fraction:
    """Exact density of the blow-up of ``H`` with part sizes rounded from ``n * point``.

    Up to ``materialize_limit`` vertices the blow-up is built and its edges
    counted; beyond that the same count comes from binomial products.
    """
    H = as_pattern(H)
    if len(point) != H.n:
        raise GraphError(f"point has {len(point)} weights for {H.n} parts")
    sizes = rounded_sizes(point, n)
    used = {v for cls in H.classes for e in cls.edges for v in e}
    keep = []
    for v, s in enumerate(sizes, start=1):
        if s == 0 and v in used:
            raise GraphError(f"part {v} rounds to size 0 but carries edges")
        if s > 0:
            keep.append(v)
    relabel = {v: i for i, v in enumerate(keep, start=1)}
    reduced = PatternGraph(
        len(keep),
        tuple(EdgeClass(c.label, c.arity, frozenset(tuple(relabel[v] for v in e) for e in c.edges))
              for c in H.classes),
    )
    reduced_sizes = [sizes[v - 1] for v in keep]
    if n <= materialize_limit:
        return density(blow_up(reduced, reduced_sizes))
    counts = blow_up_edge_counts(reduced, reduced_sizes)
    total = Fraction(0)
    for cls in reduced.classes:
        if counts[cls.label]:
            total += Fraction(counts[cls.label], comb(n, cls.arity))
    return total
