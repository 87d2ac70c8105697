"""Exact search for the largest multicolored-triangle-free C5 packing of K_n.

The search extends a list of classes by candidate 5-cycles in increasing
canonical order, so every packing is generated once up to color relabeling.
Subtrees below the first free choice form fixed blocks; blocks are searched
independently (optionally in worker processes) and reduced by (k, block index),
which keeps the output independent of the worker count.
"""
from __future__ import annotations

import functools
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .constructions import t
from .errors import BudgetExhausted, TooLarge
from .graph import ColoredGraph, build_colored_graph, iter_bits, popcount


@dataclass(frozen=True)
class SearchOptions:
    node_budget: int = 10_000_000
    parallel_width: int = 1
    symmetry_breaking: bool = True
    restrict_to_edges: Optional[frozenset] = None
    # stop as soon as a packing with this many classes is found
    target: Optional[int] = None

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node_budget must be at least 1")
        if self.parallel_width < 1:
            raise ValueError("parallel_width must be at least 1")


@dataclass
class SolveResult:
    n: int
    k_star: int
    witness: ColoredGraph
    nodes_explored: int
    runtime: float
    lower_bound_used: int
    complete: bool = True
    upper_bound: int = 0
    blocks: int = 0
    extra: dict = field(default_factory=dict)


def canonical_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least of the 10 rotations/reflections of a cycle."""
    m = len(cyc)
    best = None
    for seq in (list(cyc), list(reversed(cyc))):
        for s in range(m):
            rot = tuple(seq[s:] + seq[:s])
            if best is None or rot < best:
                best = rot
    return best


def enumerate_candidate_cycles(n: int, restrict=None) -> list[tuple[int, ...]]:
    """All 5-cycles of K_n, or of the graph with edge set ``restrict``.

    Each cycle is returned once, as its canonical tuple, and the list is
    sorted lexicographically.
    """
    if n < 5:
        return []
    if restrict is None:
        nbrs = [set(range(n)) - {v} for v in range(n)]
    else:
        nbrs = [set() for _ in range(n)]
        for u, v in restrict:
            nbrs[u].add(v)
            nbrs[v].add(u)
    out = []
    # Canonical form starts at the minimum vertex s and has second < last.
    for s in range(n):
        higher = [v for v in sorted(nbrs[s]) if v > s]
        for x1 in higher:
            for x2 in sorted(nbrs[x1]):
                if x2 <= s or x2 == x1:
                    continue
                for x3 in sorted(nbrs[x2]):
                    if x3 <= s or x3 in (x1, x2):
                        continue
                    for x4 in sorted(nbrs[x3]):
                        if x4 <= x1 or x4 in (x2, x3) or s not in nbrs[x4]:
                            continue
                        out.append((s, x1, x2, x3, x4))
    out.sort()
    return out


class _Instance:
    """Immutable search data shared by every block of one solve call."""

    def __init__(self, n: int, restrict):
        self.n = n
        if restrict is None:
            edges = list(itertools.combinations(range(n), 2))
        else:
            edges = sorted((min(u, v), max(u, v)) for u, v in restrict)
        self.edges = edges
        self.eid = [[-1] * n for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            self.eid[u][v] = self.eid[v][u] = i
        self.inc = [0] * n
        for i, (u, v) in enumerate(edges):
            self.inc[u] |= 1 << i
            self.inc[v] |= 1 << i
        self.cycles = enumerate_candidate_cycles(n, restrict)
        self.masks = []
        self.cyc_edges = []
        for cyc in self.cycles:
            pairs = [(cyc[i], cyc[(i + 1) % 5]) for i in range(5)]
            self.cyc_edges.append(pairs)
            self.masks.append(sum(1 << self.eid[u][v] for u, v in pairs))


@functools.lru_cache(maxsize=16)
def _instance(n: int, restrict: Optional[frozenset]) -> _Instance:
    return _Instance(n, restrict)


class _Search:
    """Worker-local mutable state for a depth-first search."""

    def __init__(self, inst: _Instance, budget: int, target: Optional[int]):
        self.inst = inst
        self.budget = budget
        self.target = target
        self.color = [-1] * len(inst.edges)
        self.adj = [0] * inst.n
        self.vdeg = [0] * inst.n
        self.stack: list[int] = []
        self.nodes = 0
        self.exhausted = False
        self.best = -1
        self.best_classes: Optional[list[int]] = None

    def push(self, c: int):
        inst = self.inst
        col = len(self.stack)
        for u, v in inst.cyc_edges[c]:
            self.color[inst.eid[u][v]] = col
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.vdeg[u] += 1
            self.vdeg[v] += 1
        self.stack.append(c)

    def pop(self):
        inst = self.inst
        c = self.stack.pop()
        for u, v in inst.cyc_edges[c]:
            self.color[inst.eid[u][v]] = -1
            self.adj[u] &= ~(1 << v)
            self.adj[v] &= ~(1 << u)
            self.vdeg[u] -= 1
            self.vdeg[v] -= 1

    def compatible(self, c: int) -> bool:
        """True if adding cycle c creates no multicolored triangle.

        A new triangle uses one, two or three edges of c. Only the one-edge
        case can be multicolored, and then the two old edges must agree.
        """
        eid, color, adj = self.inst.eid, self.color, self.adj
        for u, v in self.inst.cyc_edges[c]:
            eu, ev = eid[u], eid[v]
            for w in iter_bits(adj[u] & adj[v]):
                if color[eu[w]] != color[ev[w]]:
                    return False
        return True

    def filtered(self, cands: list[int], c: int) -> list[int]:
        """Candidates that stay edge-disjoint from c and compatible; c must already be pushed."""
        masks = self.inst.masks
        mc = masks[c]
        return [d for d in cands if not masks[d] & mc and self.compatible(d)]

    def upper_bound(self, cands: list[int]) -> int:
        k = len(self.stack)
        ub = k + len(cands)
        free = 0
        for d in cands:
            free |= self.inst.masks[d]
        ub = min(ub, k + popcount(free) // 5)
        # final degrees are even: round each vertex's reachable degree down
        total = 0
        inc = self.inst.inc
        for v in range(self.inst.n):
            dv = self.vdeg[v] + popcount(free & inc[v])
            total += dv & ~1
        return min(ub, (total // 2) // 5)

    def record(self):
        k = len(self.stack)
        if k > self.best:
            self.best = k
            self.best_classes = list(self.stack)

    def done(self) -> bool:
        return self.exhausted or (self.target is not None and self.best >= self.target)

    def dfs(self, cands: list[int]):
        if self.done():
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        self.record()
        if self.done() or not cands:
            return
        if self.upper_bound(cands) <= self.best:
            return
        k = len(self.stack)
        for i, c in enumerate(cands):
            if k + len(cands) - i <= self.best:
                break
            self.push(c)
            rest = self.filtered(cands[i + 1:], c)
            self.dfs(rest)
            self.pop()
            if self.done():
                return


def _root(inst: _Instance, opts: SearchOptions) -> tuple[list[int], list[int]]:
    """Fixed prefix and the candidate list below it."""
    s = _Search(inst, 1, None)
    cands = list(range(len(inst.cycles)))
    prefix: list[int] = []
    if opts.symmetry_breaking and opts.restrict_to_edges is None and cands:
        # K_n is vertex-transitive: some cycle of any nonempty packing can be
        # relabeled to (0,1,2,3,4), the least canonical tuple.
        first = cands[0]
        prefix = [first]
        s.push(first)
        cands = s.filtered(cands[1:], first)
    return prefix, cands


def _greedy(inst: _Instance, prefix: list[int]) -> list[int]:
    s = _Search(inst, 1, None)
    for c in prefix:
        s.push(c)
    start = prefix[-1] + 1 if prefix else 0
    for c in range(start, len(inst.cycles)):
        if not inst.masks[c] & sum(inst.masks[x] for x in s.stack) and s.compatible(c):
            s.push(c)
    return list(s.stack)


def _run_blocks(args):
    n, restrict, opts, block_ids, per_block, floor_k = args
    inst = _instance(n, restrict)
    prefix, cands = _root(inst, opts)
    out = []
    for b in block_ids:
        s = _Search(inst, per_block, opts.target)
        s.best = floor_k
        for c in prefix:
            s.push(c)
        c = cands[b]
        s.push(c)
        rest = s.filtered(cands[b + 1:], c)
        s.dfs(rest)
        found = s.best_classes if s.best > floor_k else None
        out.append((b, s.best if found else -1, found, s.nodes, s.exhausted))
    return out


def solve_exact(n: int, opts: Optional[SearchOptions] = None) -> SolveResult:
    """Largest k such that k edge-disjoint 5-cycles of K_n have no multicolored triangle.

    Raises BudgetExhausted (carrying the best packing found) when a block runs
    out of nodes before it is fully explored.
    """
    opts = opts or SearchOptions()
    t0 = time.perf_counter()
    restrict = opts.restrict_to_edges
    if restrict is not None:
        restrict = frozenset((min(u, v), max(u, v)) for u, v in restrict)
    lb = t(n).t if n >= 0 else 0
    n_edges = comb(n, 2) if restrict is None else len(restrict)
    if n < 5:
        return SolveResult(n, 0, build_colored_graph(max(n, 0), []), 1,
                           time.perf_counter() - t0, lb, True, n_edges // 5, 0)

    inst = _instance(n, restrict)
    prefix, cands = _root(inst, opts)
    incumbent = _greedy(inst, prefix)
    floor_k = len(incumbent)
    nblocks = len(cands)
    per_block = max(1, opts.node_budget // max(1, nblocks))
    target_hit = opts.target is not None and floor_k >= opts.target

    results = []
    if nblocks and not target_hit:
        width = min(opts.parallel_width, nblocks)
        chunks = [list(range(i, nblocks, width)) for i in range(width)]
        jobs = [(n, restrict, opts, ids, per_block, floor_k) for ids in chunks]
        if width == 1:
            results = _run_blocks(jobs[0])
        else:
            with ProcessPoolExecutor(max_workers=width) as ex:
                for part in ex.map(_run_blocks, jobs):
                    results.extend(part)
        results.sort()

    best_k, best_classes = floor_k, incumbent
    nodes = 1
    complete = True
    for b, k, classes, nd, exhausted in results:
        nodes += nd
        complete = complete and not exhausted
        if classes is not None and k > best_k:
            best_k, best_classes = k, classes
    if opts.target is not None and best_k >= opts.target:
        complete = True
    witness = build_colored_graph(n, [inst.cycles[c] for c in best_classes])
    res = SolveResult(n, best_k, witness, nodes, time.perf_counter() - t0, lb, complete,
                      n_edges // 5, nblocks)
    if not complete:
        raise BudgetExhausted(res)
    return res


def _cycles_by_permutation(n: int) -> list[frozenset]:
    seen = set()
    out = []
    for p in itertools.permutations(range(n), 5):
        es = frozenset(frozenset((p[i], p[(i + 1) % 5])) for i in range(5))
        if es not in seen:
            seen.add(es)
            out.append(es)
    return out


def _leaf_has_multicolored_triangle(n: int, chosen: list[frozenset]) -> bool:
    color = {}
    for ci, es in enumerate(chosen):
        for e in es:
            color[e] = ci
    for a, b_, c in itertools.combinations(range(n), 3):
        x = color.get(frozenset((a, b_)))
        y = color.get(frozenset((b_, c)))
        z = color.get(frozenset((a, c)))
        if x is not None and y is not None and z is not None and len({x, y, z}) == 3:
            return True
    return False


def brute_force_oracle(n: int) -> int:
    """Maximum k by plain enumeration of every edge-disjoint set of 5-cycles.

    Shares no code with :func:`solve_exact`: cycles come from permutations,
    and each visited set is checked over all vertex triples from scratch.
    """
    if n > 7:
        raise TooLarge(f"brute_force_oracle supports n <= 7, got {n}")
    if n < 5:
        return 0
    cycles = _cycles_by_permutation(n)
    best = 0

    def dfs(start: int, chosen: list[frozenset], used: frozenset):
        nonlocal best
        if len(chosen) > best and not _leaf_has_multicolored_triangle(n, chosen):
            best = len(chosen)
        for j in range(start, len(cycles)):
            if not cycles[j] & used:
                chosen.append(cycles[j])
                dfs(j + 1, chosen, used | cycles[j])
                chosen.pop()

    dfs(0, [], frozenset())
    return best


def random_greedy_instance(n: int, rng: random.Random, max_classes: Optional[int] = None) -> ColoredGraph:
    """A random maximal (or truncated) multicolored-triangle-free packing of K_n."""
    inst = _instance(n, None)
    order = list(range(len(inst.cycles)))
    rng.shuffle(order)
    s = _Search(inst, 1, None)
    used = 0
    for c in order:
        if max_classes is not None and len(s.stack) >= max_classes:
            break
        if not inst.masks[c] & used and s.compatible(c):
            s.push(c)
            used |= inst.masks[c]
    return build_colored_graph(n, [inst.cycles[c] for c in s.stack])
