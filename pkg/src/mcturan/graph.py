"""Colored graphs whose color classes are edge-disjoint 5-cycles.

Vertices are the integers ``0..n-1``. A class ``(x1, ..., x5)`` stands for the
cycle with edges ``x_i x_{i+1}`` (indices mod 5); its position in the class
list is its color.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BadClass, DuplicateEdge, PatternTooLarge

MAX_PATTERN_VERTICES = 8


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of a cycle given by its vertex sequence, each as a sorted pair."""
    m = len(cycle)
    out = []
    for i in range(m):
        u, v = cycle[i], cycle[(i + 1) % m]
        out.append((u, v) if u < v else (v, u))
    return out


class ColoredGraph:
    """An edge-disjoint union of colored 5-cycles on ``n`` vertices.

    Build instances with :func:`build_colored_graph`; the constructor trusts its
    input. Instances are immutable. Equality compares ``n`` and the class list
    as given, so two rotations of the same cycle give unequal objects.
    """

    __slots__ = ("n", "classes", "adj", "_color")

    def __init__(self, n: int, classes: tuple, adj: tuple, color: tuple):
        self.n = n
        self.classes = classes
        self.adj = adj
        self._color = color

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def num_edges(self) -> int:
        return 5 * len(self.classes)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def color(self, u: int, v: int) -> Optional[int]:
        """Class index of edge ``uv``, or None if it is not an edge."""
        return self._color[u].get(v)

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(u, v, color)`` with ``u < v``, sorted."""
        return sorted((u, v, c) for u in range(self.n) for v, c in self._color[u].items() if u < v)

    def class_edges(self, i: int) -> list[tuple[int, int]]:
        return cycle_edges(self.classes[i])

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.classes == other.classes

    def __hash__(self):
        return hash((self.n, self.classes))

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, k={self.k})"


def build_colored_graph(n: int, classes: Sequence[Sequence[int]]) -> ColoredGraph:
    """Validate a decomposition and return the colored graph it describes.

    Raises BadClass for a class that is not five distinct in-range vertices and
    DuplicateEdge when two classes share an edge.
    """
    if not isinstance(n, int) or n < 0:
        raise BadClass(f"vertex count must be a nonnegative integer, got {n!r}")
    frozen = []
    color: list[dict[int, int]] = [{} for _ in range(n)]
    adj = [0] * n
    for ci, cls in enumerate(classes):
        cyc = tuple(cls)
        if len(cyc) != 5:
            raise BadClass(f"class {ci} has {len(cyc)} vertices, expected 5")
        for x in cyc:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise BadClass(f"class {ci} has out-of-range vertex {x!r}")
        if len(set(cyc)) != 5:
            raise BadClass(f"class {ci} repeats a vertex: {cyc}")
        for u, v in cycle_edges(cyc):
            prev = color[u].get(v)
            if prev is not None:
                raise DuplicateEdge((u, v), prev, ci)
            color[u][v] = ci
            color[v][u] = ci
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        frozen.append(cyc)
    return ColoredGraph(n, tuple(frozen), tuple(adj), tuple(color))


def degree(G: ColoredGraph, v: int) -> int:
    return G.degree(v)


def edges_inside_neighborhood(G: ColoredGraph, v: int) -> int:
    """Number of edges of G with both endpoints in N(v)."""
    nv = G.adj[v]
    total = 0
    for u in iter_bits(nv):
        total += popcount(G.adj[u] & nv)
    return total // 2


@dataclass(frozen=True)
class PatternGraph:
    """A small simple graph H to look for, given by vertex count and edge list."""

    m: int
    edges: tuple

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if a == b or not (0 <= a < self.m and 0 <= b < self.m):
                raise ValueError(f"bad pattern edge ({a}, {b})")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"repeated pattern edge {key}")
            seen.add(key)


TRIANGLE = PatternGraph(3, ((0, 1), (1, 2), (0, 2)))


def find_multicolored_copy(G: ColoredGraph, H: PatternGraph = TRIANGLE) -> Optional[dict[int, int]]:
    """Search for an embedding of H whose edges all have distinct colors.

    Returns a map from H's vertices to G's vertices, or None when no such copy
    exists. The search is exhaustive and tries host vertices in increasing
    order, so the returned embedding is deterministic.
    """
    if H.m > MAX_PATTERN_VERTICES:
        raise PatternTooLarge(f"pattern has {H.m} vertices; at most {MAX_PATTERN_VERTICES} supported")
    if H.m == 0:
        return {}
    hadj = [set() for _ in range(H.m)]
    for a, b in H.edges:
        hadj[a].add(b)
        hadj[b].add(a)
    # Connected-first order: each vertex after the first of its component has an earlier neighbor.
    order: list[int] = []
    placed = set()
    for start in sorted(range(H.m), key=lambda x: -len(hadj[x])):
        if start in placed:
            continue
        stack = [start]
        while stack:
            x = stack.pop(0)
            if x in placed:
                continue
            placed.add(x)
            order.append(x)
            stack.extend(sorted(hadj[x] - placed))
    back = [[y for y in hadj[x] if order.index(y) < i] for i, x in enumerate(order)]

    emb: dict[int, int] = {}
    used_colors: set[int] = set()
    all_vertices = (1 << G.n) - 1

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        cand = all_vertices
        for y in back[i]:
            cand &= G.adj[emb[y]]
        for y in emb:
            cand &= ~(1 << emb[y])
        for g in iter_bits(cand):
            cols = [G.color(g, emb[y]) for y in back[i]]
            if len(set(cols)) != len(cols) or used_colors.intersection(cols):
                continue
            emb[x] = g
            used_colors.update(cols)
            if extend(i + 1):
                return True
            used_colors.difference_update(cols)
            del emb[x]
        return False

    if extend(0):
        return dict(sorted(emb.items()))
    return None


def has_multicolored_triangle(G: ColoredGraph) -> bool:
    return find_multicolored_copy(G, TRIANGLE) is not None
