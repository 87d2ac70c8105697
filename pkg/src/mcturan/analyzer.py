"""Instance-level quantities from the structural argument: degree deviations,
vertex-split bounds, blow-up partitions and the counts defined on them.

Everything is exact (integers and Fractions). The structural lemmas are
statements about extremal graphs with n large, so on a given instance they are
reported with a pass/fail flag rather than asserted.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .constructions import t
from .graph import ColoredGraph, iter_bits, popcount
from .verifier import TriangleCensus, triangle_census


@dataclass(frozen=True)
class AnalyzerConfig:
    gamma: Fraction = Fraction(1, 16)
    good_threshold: Fraction = Fraction(7, 20)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "good_threshold", Fraction(self.good_threshold))
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie in (0, 1)")
        if not 0 < self.good_threshold < 1:
            raise ValueError("good_threshold must lie in (0, 1)")


class BlowupPartition:
    """Assignment of every vertex to one of the parts 1..5 (indices mod 5)."""

    __slots__ = ("part_of",)

    def __init__(self, part_of: Sequence[int]):
        part_of = tuple(int(p) for p in part_of)
        for v, p in enumerate(part_of):
            if not 1 <= p <= 5:
                raise ValueError(f"vertex {v} assigned to part {p}, expected 1..5")
        self.part_of = part_of

    @classmethod
    def from_mapping(cls, n: int, mapping: dict) -> "BlowupPartition":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"partition misses vertices {missing[:5]}")
        extra = [v for v in mapping if not 0 <= v < n]
        if extra:
            raise ValueError(f"partition names out-of-range vertices {extra[:5]}")
        return cls([mapping[v] for v in range(n)])

    @property
    def n(self) -> int:
        return len(self.part_of)

    def sizes(self) -> tuple[int, ...]:
        out = [0] * 5
        for p in self.part_of:
            out[p - 1] += 1
        return tuple(out)

    def is_structured(self, u: int, v: int) -> bool:
        return (self.part_of[u] - self.part_of[v]) % 5 in (1, 4)

    def classify(self, G: ColoredGraph) -> tuple[list[int], list[tuple[int, int]]]:
        """Per-i counts e(A_i, A_{i+1}) and the list of unstructured edges."""
        counts = [0] * 5
        unstructured = []
        for u, v, _ in G.edges():
            pu, pv = self.part_of[u], self.part_of[v]
            if (pv - pu) % 5 == 1:
                counts[pu - 1] += 1
            elif (pu - pv) % 5 == 1:
                counts[pv - 1] += 1
            else:
                unstructured.append((u, v))
        return counts, unstructured

    def structured_count(self, G: ColoredGraph) -> int:
        return sum(self.classify(G)[0])

    def __eq__(self, other):
        return isinstance(other, BlowupPartition) and self.part_of == other.part_of

    def __hash__(self):
        return hash(self.part_of)

    def __repr__(self):
        return f"BlowupPartition(sizes={self.sizes()})"


def deviation_stats(G: ColoredGraph) -> tuple[list[Fraction], Fraction]:
    """s_v = d(v) - 2e(G)/n for every vertex, and the sum of their squares."""
    if G.n < 1:
        raise ValueError("deviation_stats needs n >= 1")
    avg = Fraction(2 * G.num_edges, G.n)
    s = [d - avg for d in G.degrees()]
    return s, sum((x * x for x in s), Fraction(0))


def split_sizes(G: ColoredGraph) -> list[int]:
    """e(B_v) for every v: edges between N(v) and the rest of the vertex set."""
    out = []
    for v in range(G.n):
        nv = G.adj[v]
        out.append(sum(popcount(G.adj[u] & ~nv) for u in iter_bits(nv)))
    return out


def vertex_split_bound(G: ColoredGraph) -> int:
    """e(G) minus the largest bipartite subgraph B_v.

    Every class is an odd cycle, so each keeps at least one edge outside B_v;
    this caps the number of classes of any decomposition of G.
    """
    if G.n == 0:
        return 0
    return G.num_edges - max(split_sizes(G))


def f_eval(x, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    x = Fraction(x)
    return x - 4 * x * x / (n * n) + 6 * x / n


def f_decreasing_interval(n: int) -> tuple[Fraction, int]:
    return Fraction(n * n, 8) + Fraction(3 * n, 4), n * (n - 1) // 2


def _indicator_34(r: int) -> int:
    return 1 if r in (3, 4) else 0


def thm11_upper(n: int, delta=0) -> Fraction:
    return Fraction(n * n, 25) + Fraction(3 * n, 25) + Fraction(delta) * n


def thm24_upper(n: int, delta=0) -> Fraction:
    """q^2 + q(6 + 8r/5 - 3[r in {3,4}] + delta), the s_v-free part of the bound."""
    q, r = divmod(n, 5)
    return q * q + q * (6 + Fraction(8 * r, 5) - 3 * _indicator_34(r) + Fraction(delta))


def sum_s_sq_bound(n: int, delta=0) -> Fraction:
    q, r = divmod(n, 5)
    return (6 + Fraction(8 * r, 5) + Fraction(delta)) * q * n


@dataclass
class BoundsRow:
    n: int
    q: int
    r: int
    t: int
    thm11: Fraction
    thm24: Fraction
    lower_le_thm11: bool
    lower_le_thm24: bool
    quad_lower: Fraction
    quad_lower_ok: bool


def bounds_table(n_min: int, n_max: int, delta=0) -> list[BoundsRow]:
    if n_min < 5:
        raise ValueError("n_min must be at least 5")
    delta = Fraction(delta)
    rows = []
    for n in range(n_min, n_max + 1):
        tv = t(n)
        u11 = thm11_upper(n, delta)
        u24 = thm24_upper(n, delta)
        low = Fraction(n * n, 25) - Fraction(2 * n, 5)
        rows.append(BoundsRow(n, tv.q, tv.r, tv.t, u11, u24, tv.t <= u11, tv.t <= u24,
                              low, low <= tv.t))
    return rows


@dataclass
class BoundCheck:
    """A lemma inequality evaluated on one instance: ``value`` against ``bound``."""

    name: str
    value: object
    bound: object
    holds: bool


@dataclass
class AnalysisReport:
    n: int
    k: int
    s: list
    sum_s_sq: Fraction
    Vg: list
    Vgamma: list
    census: TriangleCensus
    vertex_split_bound: int
    part_sizes: tuple = ()
    structured_edge_counts: list = field(default_factory=list)
    M: list = field(default_factory=list)
    L_edges: list = field(default_factory=list)
    L_is_matching: bool = True
    Vg_part_edges: list = field(default_factory=list)
    d_j_table: list = field(default_factory=list)
    g_ab: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    implied: dict = field(default_factory=dict)

    @property
    def M_size(self) -> int:
        return len(self.M)


def _is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def _vgamma(G: ColoredGraph, gamma: Fraction) -> list[int]:
    target = Fraction(2 * G.n, 5)
    return [v for v in range(G.n) if abs(G.degree(v) - target) <= gamma * G.n]


def great_cycle_counts(G: ColoredGraph, P: BlowupPartition, cfg: AnalyzerConfig = AnalyzerConfig()
                       ) -> dict[tuple[int, int], int]:
    """For every unstructured edge ab inside V_gamma, the number of classes
    lying entirely in V_gamma that pass through both a and b."""
    vg = set(_vgamma(G, cfg.gamma))
    great = [set(cyc) for cyc in G.classes if vg.issuperset(cyc)]
    _, unstructured = P.classify(G)
    out = {}
    for a, b in unstructured:
        if a in vg and b in vg:
            out[(a, b)] = sum(1 for cyc in great if a in cyc and b in cyc)
    return out


def analyze_basic(G: ColoredGraph, cfg: AnalyzerConfig = AnalyzerConfig()) -> AnalysisReport:
    """Partition-free part of the report."""
    if G.n == 0:
        s, ssq = [], Fraction(0)
    else:
        s, ssq = deviation_stats(G)
    vgood = [v for v in range(G.n) if G.degree(v) >= cfg.good_threshold * G.n]
    return AnalysisReport(G.n, G.k, s, ssq, vgood, _vgamma(G, cfg.gamma), triangle_census(G),
                          vertex_split_bound(G))


def structure_report(G: ColoredGraph, P: BlowupPartition, cfg: AnalyzerConfig = AnalyzerConfig()
                     ) -> AnalysisReport:
    if P.n != G.n:
        raise ValueError(f"partition covers {P.n} vertices, graph has {G.n}")
    rep = analyze_basic(G, cfg)
    n = G.n
    q, r = divmod(n, 5)
    gamma = cfg.gamma
    counts, unstructured = P.classify(G)
    good = set(rep.Vg)
    rep.part_sizes = P.sizes()
    rep.structured_edge_counts = counts
    rep.M = unstructured
    rep.L_edges = [(u, v) for u, v in unstructured if u in good and v in good]
    rep.L_is_matching = _is_matching(rep.L_edges)
    rep.Vg_part_edges = [(u, v) for u, v in unstructured
                         if u in good and v in good and P.part_of[u] == P.part_of[v]]
    table = []
    for v in range(n):
        row = [0] * 5
        for u in iter_bits(G.adj[v]):
            row[P.part_of[u] - 1] += 1
        table.append(row)
    rep.d_j_table = table
    rep.g_ab = great_cycle_counts(G, P, cfg)

    checks = rep.checks
    checks.append(BoundCheck("L_is_matching", rep.L_is_matching, True, rep.L_is_matching))
    checks.append(BoundCheck("good_vertices_independent_in_parts", len(rep.Vg_part_edges), 0,
                             not rep.Vg_part_edges))
    m_bound = 2 * q + 64 * gamma * q
    checks.append(BoundCheck("unstructured_le_2q_plus_64gamma_q", len(unstructured), m_bound,
                             len(unstructured) <= m_bound))
    checks.append(BoundCheck("unstructured_le_2n_over_5", len(unstructured), Fraction(2 * n, 5),
                             len(unstructured) <= Fraction(2 * n, 5)))
    sizes = rep.part_sizes
    checks.append(BoundCheck("part_min_gt_q_minus_15", min(sizes), q - 15, min(sizes) > q - 15))
    checks.append(BoundCheck("part_max_le_q_plus_64", max(sizes), q + 64, max(sizes) <= q + 64))
    n_far = n - len(rep.Vgamma)
    far_bound = 8 / (gamma * gamma)
    checks.append(BoundCheck("outside_Vgamma_le_8_over_gamma_sq", n_far, far_bound, n_far <= far_bound))
    # g_ab lower bound applies to unstructured edges between parts i and i+2
    skip = [g for (a, b), g in rep.g_ab.items() if (P.part_of[a] - P.part_of[b]) % 5 in (2, 3)]
    g_bound = Fraction(n, 5) - 4 * gamma * n
    g_min = min(skip) if skip else None
    checks.append(BoundCheck("g_ab_ge_n_over_5_minus_4gamma_n", g_min, g_bound,
                             g_min is None or g_min >= g_bound))
    ssq_bound = sum_s_sq_bound(n)
    checks.append(BoundCheck("sum_s_sq_le_(6+8r/5)qn", rep.sum_s_sq, ssq_bound, rep.sum_s_sq <= ssq_bound))
    tri_bound = Fraction(2 * n * n, 25)
    checks.append(BoundCheck("triangles_le_2n2_over_25", rep.census.triangle_count, tri_bound,
                             rep.census.triangle_count <= tri_bound))
    checks.append(BoundCheck("k_le_vertex_split_bound", G.k, rep.vertex_split_bound,
                             G.k <= rep.vertex_split_bound))

    # smallest constants that would make the linear-error statements true here
    if n:
        nn = Fraction(n * n)
        implied = rep.implied
        implied["eps_structured_pairs"] = max(Fraction(0), max(Fraction(n * n, 25) - c for c in counts) / nn)
        implied["eps_part_sizes"] = max(Fraction(0), max(abs(Fraction(sz) - Fraction(n, 5)) for sz in sizes) / n)
        over = []
        for v in range(n):
            i = P.part_of[v] - 1
            over.append(Fraction(G.degree(v)) - Fraction(2 * n, 5))
            over.extend(table[v][j] for j in range(5) if j not in ((i - 1) % 5, (i + 1) % 5))
        implied["delta_degree_and_cross"] = max(Fraction(0), Fraction(max(over)) / n)
        implied["delta_unstructured"] = max(Fraction(0), (len(unstructured) - Fraction(2 * n, 5)) / n)
        implied["delta_triangles"] = max(Fraction(0), (rep.census.triangle_count - tri_bound) / (2 * nn))
    return rep


def _local_search(G: ColoredGraph, part: list[int]) -> int:
    """Steepest-ascent single-vertex moves; returns the final structured count."""
    n = G.n
    nbrs = [G.neighbors(v) for v in range(n)]

    def gain(v, p):
        return sum(1 for u in nbrs[v] if (part[u] - p) % 5 in (1, 4))

    while True:
        best_delta, best_move = 0, None
        for v in range(n):
            cur = gain(v, part[v])
            for p in range(1, 6):
                if p != part[v]:
                    d = gain(v, p) - cur
                    if d > best_delta:
                        best_delta, best_move = d, (v, p)
        if best_move is None:
            break
        part[best_move[0]] = best_move[1]
    return BlowupPartition(part).structured_count(G)


def _exact_partition(G: ColoredGraph) -> list[int]:
    n = G.n
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in G.neighbors(v) if pos[u] < pos[v]] for v in order]
    later_edges = [0] * (n + 1)
    # edges with both endpoints at positions >= i
    for i in range(n - 1, -1, -1):
        v = order[i]
        later_edges[i] = later_edges[i + 1] + sum(1 for u in G.neighbors(v) if pos[u] > i)
    part = [0] * n
    best_val = -1
    best_part: list[int] = [1] * n

    def bound(i, val):
        extra = later_edges[i]
        for j in range(i, n):
            v = order[j]
            fixed = [part[u] for u in G.neighbors(v) if pos[u] < i]
            if fixed:
                extra += max(sum(1 for pu in fixed if (pu - p) % 5 in (1, 4)) for p in range(1, 6))
        return val + extra

    def dfs(i, val):
        nonlocal best_val, best_part
        if i == n:
            if val > best_val:
                best_val, best_part = val, part[:]
            return
        if bound(i, val) <= best_val:
            return
        v = order[i]
        # rotation symmetry: the first vertex sits in part 1
        choices = (1,) if i == 0 else (1, 2, 3, 4, 5)
        scored = []
        for p in choices:
            g = sum(1 for u in earlier[i] if (part[u] - p) % 5 in (1, 4))
            scored.append((-g, p))
        for neg, p in sorted(scored):
            part[v] = p
            dfs(i + 1, val - neg)
        part[v] = 0

    dfs(0, 0)
    return best_part


def best_blowup_partition(G: ColoredGraph, budget: int = 5 ** 10, seed: int = 0,
                          restarts: int = 32) -> BlowupPartition:
    """A partition maximizing the number of edges between consecutive parts.

    Exact (branch and bound over all assignments) when 5^n <= budget;
    otherwise the best of ``restarts`` seeded local searches.
    """
    n = G.n
    if n == 0:
        return BlowupPartition([])
    if 5 ** n <= budget:
        return BlowupPartition(_exact_partition(G))
    rng = random.Random(seed)
    best_val, best = -1, None
    for _ in range(restarts):
        part = [rng.randint(1, 5) for _ in range(n)]
        val = _local_search(G, part)
        if val > best_val:
            best_val, best = val, part
    return BlowupPartition(best)
