"""k-uniform hypergraphs: canonical storage, families, and combinatorics.

Vertices are 0-based integers internally; the text edge-list format is
1-based.  Edges are k-subsets stored as sorted tuples, and a hypergraph may
have isolated vertices (they matter to the spectrum, so n is explicit).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import EdgeListFormatError

__all__ = [
    "EigenSystem",
    "Hypergraph",
    "cartesian_product",
    "complete",
    "complete_cylinder",
    "disjoint_union",
    "from_edge_list",
    "is_subgraph",
    "single_edge",
    "tetra_minus_face",
    "to_edge_list",
    "ultracube",
]


@dataclass(frozen=True)
class EigenSystem:
    """The polynomial eigenvalue system of a hypergraph.

    ``links[i]`` lists the edges through vertex i with i removed, so the
    i-th equation reads  sum over links[i] of x^edge = lambda * x_i^(k-1).
    """

    n: int
    k: int
    links: tuple


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices 0..n-1.

    Instances are treated as immutable; no method mutates self.  Equal
    hypergraphs (same n, k, edge set) compare and hash equal.
    """

    __slots__ = ("n", "k", "edges", "_edge_set")

    def __init__(self, n: int, k: int, edges=()):
        if n < 1:
            raise ValueError("need at least one vertex")
        if k < 2:
            raise ValueError("uniformity k must be at least 2")
        canon = set()
        for e in edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != k:
                raise ValueError(f"edge {t} has {len(t)} vertices, expected k={k}")
            if len(set(t)) != k:
                raise ValueError(f"edge {t} repeats a vertex")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} out of range for n={n}")
            canon.add(t)
        self.n = n
        self.k = k
        self.edges = tuple(sorted(canon))
        self._edge_set = frozenset(canon)

    # -- basic inspection ----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, e) -> bool:
        return tuple(sorted(e)) in self._edge_set

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self):
        """(min degree, average degree as an exact Fraction, max degree)."""
        counts = [0] * self.n
        for e in self.edges:
            for v in e:
                counts[v] += 1
        avg = Fraction(self.k * len(self.edges), self.n)
        return min(counts), avg, max(counts)

    def link(self, v: int) -> tuple:
        """Edges through v, with v removed: sorted (k-1)-tuples."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return tuple(tuple(u for u in e if u != v) for e in self.edges if v in e)

    def eigen_system(self) -> EigenSystem:
        return EigenSystem(self.n, self.k,
                           tuple(self.link(v) for v in range(self.n)))

    # -- structure -----------------------------------------------------------

    def components(self):
        """Connected components as (sub-hypergraph, original-vertices) pairs.

        original-vertices is the ascending tuple of vertex ids; the
        sub-hypergraph relabels them to 0..len-1 in that order.  Isolated
        vertices form singleton components.
        """
        adj = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                adj[v].append(idx)
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            verts = []
            while stack:
                v = stack.pop()
                verts.append(v)
                for idx in adj[v]:
                    for u in self.edges[idx]:
                        if not seen[u]:
                            seen[u] = True
                            stack.append(u)
            verts.sort()
            pos = {v: i for i, v in enumerate(verts)}
            edges = [tuple(pos[v] for v in e) for e in self.edges
                     if e[0] in pos]
            out.append((Hypergraph(len(verts), self.k, edges), tuple(verts)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabel(self, perm) -> "Hypergraph":
        """Apply a permutation of 0..n-1 to the vertices."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        return Hypergraph(self.n, self.k,
                          [tuple(perm[v] for v in e) for e in self.edges])

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self._edge_set) == (other.n, other.k, other._edge_set)

    def __hash__(self):
        return hash((self.n, self.k, self._edge_set))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, k={self.k}, m={len(self.edges)})"


# -- families -----------------------------------------------------------------


def single_edge(k: int) -> Hypergraph:
    """One edge on exactly k vertices."""
    return Hypergraph(k, k, [tuple(range(k))])


def complete(n: int, k: int) -> Hypergraph:
    """All k-subsets of n vertices."""
    if n < k:
        raise ValueError("complete hypergraph needs n >= k")
    return Hypergraph(n, k, itertools.combinations(range(n), k))


def tetra_minus_face() -> Hypergraph:
    """Three faces of the tetrahedron boundary: complete(4,3) minus (1,2,3)."""
    return Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def complete_cylinder(parts) -> Hypergraph:
    """All transversals of k disjoint parts; parts gives the part sizes.

    Uniformity is the number of parts; part i occupies the next parts[i]
    vertex ids in order.
    """
    sizes = [int(m) for m in parts]
    if len(sizes) < 2:
        raise ValueError("need at least two parts")
    if any(m < 1 for m in sizes):
        raise ValueError("part sizes must be positive")
    groups = []
    base = 0
    for m in sizes:
        groups.append(range(base, base + m))
        base += m
    return Hypergraph(base, len(sizes), itertools.product(*groups))


def cartesian_product(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Cartesian product; vertex (a, b) becomes a * h.n + b.

    An edge is a g-edge within one fixed h-coordinate, or an h-edge within
    one fixed g-coordinate.
    """
    if g.k != h.k:
        raise ValueError("factors must share the uniformity k")
    edges = []
    for e in g.edges:
        for b in range(h.n):
            edges.append(tuple(a * h.n + b for a in e))
    for a in range(g.n):
        for f in h.edges:
            edges.append(tuple(a * h.n + b for b in f))
    return Hypergraph(g.n * h.n, g.k, edges)


def disjoint_union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Place h after g; h's vertex ids shift up by g.n."""
    if g.k != h.k:
        raise ValueError("parts must share the uniformity k")
    edges = list(g.edges)
    edges.extend(tuple(v + g.n for v in f) for f in h.edges)
    return Hypergraph(g.n + h.n, g.k, edges)


def ultracube(k: int, d: int) -> Hypergraph:
    """d-fold cartesian power of the single k-edge: axis lines of a k^d grid.

    Vertex ids read the coordinate tuple as a big-endian base-k numeral,
    matching iterated cartesian_product.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    if k < 2:
        raise ValueError("uniformity k must be at least 2")
    n = k**d
    edges = []
    for axis in range(d):
        stride = k ** (d - 1 - axis)
        for base in range(n):
            if (base // stride) % k == 0:
                edges.append(tuple(base + c * stride for c in range(k)))
    h = Hypergraph(n, k, edges)
    assert len(h.edges) == d * k ** (d - 1)
    return h


def is_subgraph(g: Hypergraph, h: Hypergraph, embedding=None) -> bool:
    """True when g maps into h: every g-edge lands on an h-edge.

    embedding maps g's vertices to distinct h-vertices; default is the
    identity (requires g.n <= h.n).
    """
    if g.k != h.k:
        return False
    if embedding is None:
        embedding = list(range(g.n))
    else:
        embedding = list(embedding)
    if len(embedding) != g.n or len(set(embedding)) != g.n:
        raise ValueError("embedding must assign each vertex a distinct image")
    if any(not 0 <= v < h.n for v in embedding):
        raise ValueError("embedding image out of range")
    return all(h.has_edge(embedding[v] for v in e) for e in g.edges)


# -- edge-list text format ------------------------------------------------------


def from_edge_list(text: str) -> Hypergraph:
    """Parse the plain edge-list format.

    First significant line is "n k"; each later line lists the k vertices of
    one edge, 1-based.  '#' starts a comment; blank lines are skipped.
    """
    n = k = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise EdgeListFormatError(f"non-integer field in {fields!r}", lineno)
        if n is None:
            if len(values) != 2:
                raise EdgeListFormatError("header must be exactly 'n k'", lineno)
            n, k = values
            if n < 1 or k < 2:
                raise EdgeListFormatError(f"invalid header n={n} k={k}", lineno)
            continue
        if len(values) != k:
            raise EdgeListFormatError(
                f"edge has {len(values)} vertices, expected k={k}", lineno)
        if any(not 1 <= v <= n for v in values):
            raise EdgeListFormatError(f"vertex out of range 1..{n}", lineno)
        if len(set(values)) != k:
            raise EdgeListFormatError("edge repeats a vertex", lineno)
        edges.append(tuple(v - 1 for v in values))
    if n is None:
        raise EdgeListFormatError("missing 'n k' header")
    return Hypergraph(n, k, edges)


def to_edge_list(h: Hypergraph) -> str:
    """Canonical edge-list text: sorted edges, 1-based, one per line."""
    lines = [f"{h.n} {h.k}"]
    for e in h.edges:
        lines.append(" ".join(str(v + 1) for v in e))
    return "\n".join(lines) + "\n"
