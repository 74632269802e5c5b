"""Generalized traces and the leading coefficients they determine.

The d-th trace of a k-uniform hypergraph is a weighted count of closed
multi-digraph walks assembled from edge choices at each vertex.  Scaled by
-1/d and fed through the exponential (Newton-Schur) recurrence, the first
few traces give the top coefficients of the characteristic polynomial
without building the Macaulay matrix.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .hypergraphs import Hypergraph
from .macaulay import int_determinant

__all__ = [
    "coefficients_via_traces",
    "count_closed_arrangements",
    "count_simplices",
    "generalized_trace",
    "schur_coefficients",
]


def count_closed_arrangements(arcs) -> int:
    """Weighted count of closed orderings of a multiset of arcs.

    arcs maps (tail, head) to a positive multiplicity.  The count is
    m * t_w * prod over vertices of (indegree - 1)!, where m is the number
    of arcs and t_w the number of arborescences of the support digraph, and
    it vanishes unless the digraph is balanced and weakly connected.  This
    is the BEST-theorem count of Eulerian circuits times m, written so that
    parallel arcs are interchangeable.
    """
    arcs = {(int(a), int(b)): int(m) for (a, b), m in arcs.items() if m}
    if not arcs:
        return 0
    indeg: dict = {}
    outdeg: dict = {}
    verts = set()
    for (a, b), m in arcs.items():
        if m < 0:
            raise ValueError("negative arc multiplicity")
        outdeg[a] = outdeg.get(a, 0) + m
        indeg[b] = indeg.get(b, 0) + m
        verts.add(a)
        verts.add(b)
    if any(indeg.get(v, 0) != outdeg.get(v, 0) for v in verts):
        return 0
    order = sorted(verts)
    pos = {v: i for i, v in enumerate(order)}
    # weak connectivity over the support
    adj = [[] for _ in order]
    for (a, b) in arcs:
        adj[pos[a]].append(pos[b])
        adj[pos[b]].append(pos[a])
    seen = [False] * len(order)
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                stack.append(u)
    if not all(seen):
        return 0
    # arborescences toward order[0] via the directed matrix-tree minor;
    # the digraph is Eulerian so the root does not matter
    t = len(order)
    if t == 1:
        trees = 1
    else:
        lap = [[0] * (t - 1) for _ in range(t - 1)]
        for (a, b), m in arcs.items():
            ia, ib = pos[a], pos[b]
            if ia == ib:
                continue
            if ia > 0:
                lap[ia - 1][ia - 1] += m
            if ia > 0 and ib > 0:
                lap[ia - 1][ib - 1] -= m
        trees = int_determinant(lap)
    if trees == 0:
        return 0
    total_arcs = sum(arcs.values())
    out = total_arcs * trees
    for v in order:
        out *= math.factorial(indeg[v] - 1)
    return out


def _vertex_choices(link, weight: int, support):
    """Multisets of `weight` link edges inside `support`, with multinomial
    coefficients weight! / prod(multiplicity!).
    """
    usable = [rest for rest in link if all(u in support for u in rest)]
    fact_w = math.factorial(weight)
    for combo in itertools.combinations_with_replacement(range(len(usable)), weight):
        coeff = fact_w
        run = 1
        for a, b in zip(combo, combo[1:]):
            run = run + 1 if a == b else 1
            if run > 1:
                coeff //= run
        yield [usable[i] for i in combo], coeff


def generalized_trace(h: Hypergraph, d: int) -> int:
    """The d-th generalized trace.

    Sums over degree splittings (d_1..d_n summing to d) and, per vertex,
    multisets of d_i link edges; each arrangement contributes the closed-
    ordering count of its arc multiset.  The result equals the power sum of
    the characteristic polynomial's roots (with multiplicity), scaled so
    that sum over the spectrum is exact.
    """
    if d < 0:
        raise ValueError("trace order must be nonnegative")
    n, k = h.n, h.k
    if d == 0:
        return n * (k - 1) ** (n - 1)
    links = [h.link(v) for v in range(n)]
    active = [v for v in range(n) if links[v]]
    scale = (k - 1) ** (n - 1)
    total = Fraction(0)
    for split in _compositions(d, active):
        support = set(split)
        # factor 1/prod (d_v (k-1))!
        denom = 1
        for v, dv in split.items():
            denom *= math.factorial(dv * (k - 1))
        contrib = _sum_over_choices(links, split, support)
        if contrib:
            total += Fraction(contrib, denom)
    result = total * scale
    assert result.denominator == 1
    return int(result)


def _compositions(d: int, active):
    """All maps from subsets of active vertices to positive weights summing
    to d, yielded as dicts."""
    verts = list(active)

    def rec(i, remaining):
        if remaining == 0:
            yield {}
            return
        if i == len(verts):
            return
        # vertex verts[i] takes 0..remaining
        for take in range(remaining + 1):
            for rest in rec(i + 1, remaining - take):
                if take:
                    out = {verts[i]: take}
                    out.update(rest)
                    yield out
                else:
                    yield rest

    yield from rec(0, d)


def _sum_over_choices(links, split, support):
    """Sum of weighted closed-arrangement counts over per-vertex choices."""
    items = sorted(split.items())

    def rec(idx, arcs, coeff):
        if idx == len(items):
            return coeff * count_closed_arrangements(arcs)
        v, dv = items[idx]
        total = 0
        for chosen, mult in _vertex_choices(links[v], dv, support):
            new_arcs = dict(arcs)
            for rest in chosen:
                for u in rest:
                    new_arcs[(v, u)] = new_arcs.get((v, u), 0) + 1
            total += rec(idx + 1, new_arcs, coeff * mult)
        return total

    return rec(0, {}, 1)


def schur_coefficients(traces) -> list:
    """Newton's identities: power sums to monic-polynomial coefficients.

    traces[j] holds the power sum of order j+1.  Returns [c_1, c_2, ...]
    as Fractions, where c_d is the codegree-d coefficient, from
    d*c_d = -sum over j of traces[j-1]*c_{d-j} with c_0 = 1.
    """
    out = []
    p = [Fraction(1)]
    for d in range(1, len(traces) + 1):
        acc = Fraction(0)
        for j in range(1, d + 1):
            acc += Fraction(-traces[j - 1]) * p[d - j]
        val = acc / d
        p.append(val)
        out.append(val)
    return out


def coefficients_via_traces(h: Hypergraph, max_codegree: int | None = None,
                            *, allow_deep: bool = False) -> list:
    """Top coefficients [codegree 0..max_codegree] of the characteristic
    polynomial, computed from generalized traces.

    Default depth is k+1, where the trace cost is still combinatorial in
    max-degree only; deeper orders grow quickly, so they sit behind
    allow_deep.
    """
    cap = h.k + 1
    if max_codegree is None:
        max_codegree = cap
    if max_codegree > cap and not allow_deep:
        raise ValueError(
            f"codegree {max_codegree} exceeds the default depth {cap}; "
            "pass allow_deep=True to force it")
    traces = [generalized_trace(h, d) for d in range(1, max_codegree + 1)]
    coeffs = schur_coefficients(traces)
    out = [1]
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return out


def count_simplices(h: Hypergraph) -> int:
    """Number of (k+1)-vertex subsets whose k-subsets are all edges."""
    n, k = h.n, h.k
    deg = [h.degree(v) for v in range(n)]
    candidates = [v for v in range(n) if deg[v] >= k]
    count = 0
    for combo in itertools.combinations(sorted(candidates), k + 1):
        if all(h.has_edge(e) for e in itertools.combinations(combo, k)):
            count += 1
    return count
