"""Lower-bound constructions: blow-ups of C5 packed with edge-disjoint pentagons.

Part ``i`` (1-based, ``i = 1..5``) of a blow-up with sizes ``a`` holds the
vertices ``offset_i .. offset_i + a_i - 1``, where ``offset_i`` is the sum of the
earlier part sizes. Vertex ``v^i_j`` (part ``i``, 1-based index ``j``) is
therefore ``offset_i + j - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadN, PackingNotFound
from .graph import ColoredGraph, build_colored_graph


@dataclass(frozen=True)
class TnValue:
    n: int
    q: int
    r: int
    t: int


def b(a: Sequence[int]) -> int:
    """Smallest number of edges between two consecutive parts of the blow-up."""
    if len(a) != 5:
        raise ValueError("part sizes must be a 5-tuple")
    return min(a[i] * a[(i + 1) % 5] for i in range(5))


def t(n: int) -> TnValue:
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(n, 5)
    return TnValue(n, q, r, q * q if r <= 2 else q * (q + 1))


def balanced_parts(n: int) -> tuple[int, ...]:
    """Part sizes summing to n whose bottleneck b equals t(n).

    The larger parts are placed so that no two parts of size q are adjacent
    when r >= 3.
    """
    q, r = divmod(n, 5)
    extra = {0: (), 1: (0,), 2: (0, 2), 3: (0, 2, 4), 4: (0, 1, 3, 4)}[r]
    return tuple(q + (i in extra) for i in range(5))


def part_offsets(a: Sequence[int]) -> list[int]:
    off = [0]
    for x in a[:4]:
        off.append(off[-1] + x)
    return off


def natural_partition(a: Sequence[int]) -> dict[int, int]:
    """Vertex -> part (1..5) for the labeling used by every blow-up here."""
    off = part_offsets(a)
    return {off[i] + j: i + 1 for i in range(5) for j in range(a[i])}


def blowup_edges(a: Sequence[int]) -> set[tuple[int, int]]:
    """All edges of the complete blow-up C5(A_1, ..., A_5)."""
    off = part_offsets(a)
    out = set()
    for i in range(5):
        i2 = (i + 1) % 5
        for x in range(a[i]):
            for y in range(a[i2]):
                u, v = off[i] + x, off[i2] + y
                out.add((min(u, v), max(u, v)))
    return out


def _equal_packing_classes(q: int) -> list[tuple[int, ...]]:
    # F_{i,j} = v^1_i v^2_j v^3_i v^4_j v^5_{i+j}, with i+j reduced mod q into 1..q.
    def v(part, idx):
        return (part - 1) * q + (idx - 1)

    classes = []
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            s = (i + j - 1) % q + 1
            classes.append((v(1, i), v(2, j), v(3, i), v(4, j), v(5, s)))
    return classes


def _direct_packing(a: Sequence[int]) -> Optional[list[tuple[int, ...]]]:
    """Index packing for unequal parts, when some dihedral arrangement allows it.

    With the parts relabeled as p1..p5, take x <= min(|p1|, |p3|, |p5|) and
    y <= min(|p2|, |p4|, |p5|); the cycles u^1_i u^2_j u^3_i u^4_j u^5_{(i+j) mod |p5|}
    are edge-disjoint and there are x*y of them.
    """
    target = b(a)
    off = part_offsets(a)
    for shift in range(5):
        for sign in (1, -1):
            perm = [(shift + sign * s) % 5 for s in range(5)]
            sz = [a[p] for p in perm]
            x = min(sz[0], sz[2], sz[4])
            y = min(sz[1], sz[3], sz[4])
            if x * y < target:
                continue
            # choose x', y' with x'*y' == target to keep exactly b(a) classes
            for xx in range(1, x + 1):
                if target % xx == 0 and target // xx <= y:
                    yy = target // xx
                    break
            else:
                continue
            m5 = sz[4]
            classes = []
            for i in range(xx):
                for j in range(yy):
                    idx = (i, j, i, j, (i + j) % m5)
                    classes.append(tuple(off[perm[s]] + idx[s] for s in range(5)))
            return classes
    return None


def blowup_packing(a: Sequence[int], method: str = "auto", node_budget: int = 200_000) -> ColoredGraph:
    """Pack exactly b(a) edge-disjoint 5-cycles into the blow-up with part sizes a.

    Equal parts use the explicit labeling F_{i,j}. Unequal parts try the
    index packing of :func:`_direct_packing` and otherwise fall back to the
    exact solver restricted to the blow-up edges. ``method="search"`` forces
    the solver route.
    """
    a = tuple(int(x) for x in a)
    if len(a) != 5 or min(a) < 1:
        raise ValueError("blowup_packing needs five part sizes, each at least 1")
    n = sum(a)
    target = b(a)
    if method not in ("auto", "search"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        if len(set(a)) == 1:
            return build_colored_graph(n, _equal_packing_classes(a[0]))
        classes = _direct_packing(a)
        if classes is not None:
            return build_colored_graph(n, classes)

    from .errors import BudgetExhausted
    from .solver import SearchOptions, solve_exact

    opts = SearchOptions(node_budget=node_budget, symmetry_breaking=False,
                         restrict_to_edges=frozenset(blowup_edges(a)), target=target)
    try:
        res = solve_exact(n, opts)
    except BudgetExhausted as exc:
        res = exc.result
    if res.k_star < target:
        raise PackingNotFound(f"found {res.k_star} of {target} classes for parts {a} "
                              f"within {node_budget} nodes")
    return res.witness


@dataclass(frozen=True)
class PerturbedConstruction:
    graph: ColoredGraph
    crossing_edges: tuple
    partition: dict


def perturbed_construction(n: int) -> ColoredGraph:
    return perturbed_construction_detail(n).graph


def perturbed_construction_detail(n: int) -> PerturbedConstruction:
    """Balanced blow-up packing with one switch per i, plus its bookkeeping.

    For each i the class F_{i,i} = v^1_i v^2_i v^3_i v^4_i v^5_{2i} becomes
    v^1_i v^3_i v^2_i v^4_i v^5_{2i}, keeping its color. The new edges
    v^1_i v^3_i and v^2_i v^4_i are the crossing edges.
    """
    if not isinstance(n, int) or n % 5 or n < 10:
        raise BadN(f"n must be a multiple of 5 with n/5 >= 2, got {n!r}")
    q = n // 5
    classes = _equal_packing_classes(q)
    crossing = []
    for i in range(1, q + 1):
        ci = (i - 1) * q + (i - 1)
        x1, x2, x3, x4, x5 = classes[ci]
        classes[ci] = (x1, x3, x2, x4, x5)
        crossing.append((x1, x3))
        crossing.append((x2, x4))
    G = build_colored_graph(n, classes)
    return PerturbedConstruction(G, tuple(sorted(crossing)), natural_partition((q,) * 5))


def k5_star(m: int) -> ColoredGraph:
    """m copies of K5 glued at vertex 0, each colored by a pentagon and a pentagram."""
    if m < 1:
        raise ValueError("k5_star needs at least one blade")
    classes = []
    for blade in range(m):
        a, b_, c, d = (4 * blade + s for s in range(1, 5))
        classes.append((0, a, b_, c, d))
        classes.append((0, b_, d, a, c))
    return build_colored_graph(4 * m + 1, classes)


def single_c5(n: int = 5) -> ColoredGraph:
    return build_colored_graph(n, [(0, 1, 2, 3, 4)])


def k5_two_pentagons() -> ColoredGraph:
    return build_colored_graph(5, [(0, 1, 2, 3, 4), (0, 2, 4, 1, 3)])
