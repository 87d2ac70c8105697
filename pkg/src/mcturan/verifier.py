"""Certificate checks: decomposition validity, multicolored-triangle freeness,
and the inequalities that hold on every such decomposition."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidCertificate, PreconditionViolated
from .graph import (TRIANGLE, ColoredGraph, build_colored_graph, edges_inside_neighborhood,
                    find_multicolored_copy, iter_bits)


@dataclass
class TriangleCensus:
    """Triangles of G, classified by how many of their edges carry each color.

    ``one[i]`` / ``two[i]`` count triangles with exactly one / two edges of
    color i. Triangles lying entirely in one color cannot occur because every
    class is a 5-cycle.
    """

    k: int
    triangle_count: int = 0
    multicolored_count: int = 0
    one: list = field(default_factory=list)
    two: list = field(default_factory=list)
    three: list = field(default_factory=list)

    def __post_init__(self):
        for name in ("one", "two", "three"):
            if not getattr(self, name):
                setattr(self, name, [0] * self.k)


def iter_triangles(G: ColoredGraph):
    """Yield each triangle once as ``(a, b, c)`` with ``a < b < c``."""
    for a in range(G.n):
        higher = G.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            for c in iter_bits(higher & G.adj[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def triangle_census(G: ColoredGraph) -> TriangleCensus:
    census = TriangleCensus(G.k)
    for a, b, c in iter_triangles(G):
        cols = (G.color(a, b), G.color(b, c), G.color(a, c))
        census.triangle_count += 1
        distinct = set(cols)
        if len(distinct) == 3:
            census.multicolored_count += 1
        for col in distinct:
            mult = cols.count(col)
            if mult == 1:
                census.one[col] += 1
            elif mult == 2:
                census.two[col] += 1
            else:
                census.three[col] += 1
    return census


@dataclass
class KNCheck:
    color: int
    lhs: int
    rhs: int

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs


def check_kovacs_nagy(G: ColoredGraph, census: Optional[TriangleCensus] = None) -> list[KNCheck]:
    """Per color i: sum of degrees on class i versus 2n + 2*two[i] + one[i].

    Only claimed for decompositions without a multicolored triangle; raises
    PreconditionViolated otherwise.
    """
    census = census or triangle_census(G)
    if census.multicolored_count:
        raise PreconditionViolated("graph contains a multicolored triangle")
    deg = G.degrees()
    out = []
    for i, cyc in enumerate(G.classes):
        lhs = sum(deg[v] for v in cyc)
        out.append(KNCheck(i, lhs, 2 * G.n + 2 * census.two[i] + census.one[i]))
    return out


def double_count_check(G: ColoredGraph) -> tuple[int, int, bool]:
    """Sum over classes of the class's degree sum, against sum_v d(v)^2 / 2."""
    deg = G.degrees()
    by_cycles = sum(deg[v] for cyc in G.classes for v in cyc)
    sq = sum(d * d for d in deg)
    # every degree is even, so d^2/2 is an integer
    by_degrees = sq // 2
    return by_cycles, by_degrees, by_cycles * 2 == sq


def lemma22_violations(G: ColoredGraph) -> list[int]:
    """Vertices with more than floor(3 d(v) / 2) edges inside their neighborhood."""
    return [v for v in range(G.n) if edges_inside_neighborhood(G, v) > 3 * G.degree(v) // 2]


@dataclass
class VerifyReport:
    valid: bool
    n: int
    k: int
    multicolored_triangle: Optional[tuple] = None
    lemma22_violations: list = field(default_factory=list)
    kn_violations: list = field(default_factory=list)
    double_count_ok: bool = True
    error: Optional[str] = None

    @property
    def clean(self) -> bool:
        """Valid and every universally true inequality holds."""
        return (self.valid and not self.lemma22_violations and not self.kn_violations
                and self.double_count_ok)


def verify(cert) -> VerifyReport:
    """Full report for a ColoredGraph, or for an ``(n, classes)`` pair.

    A pair that fails decomposition validation yields ``valid=False`` with the
    reason in ``error``; nothing is raised.
    """
    if isinstance(cert, ColoredGraph):
        G = cert
    else:
        n, classes = cert
        try:
            G = build_colored_graph(n, classes)
        except InvalidCertificate as exc:
            return VerifyReport(False, n, len(classes), error=str(exc))
    emb = find_multicolored_copy(G, TRIANGLE)
    witness = tuple(sorted(emb.values())) if emb is not None else None
    bad22 = lemma22_violations(G)
    _, _, dc_ok = double_count_check(G)
    kn_bad: list[int] = []
    if witness is None:
        kn_bad = [c.color for c in check_kovacs_nagy(G) if not c.ok]
    return VerifyReport(witness is None, G.n, G.k, witness, bad22, kn_bad, dc_ok)


def verify_classes(n: int, classes: Sequence[Sequence[int]]) -> VerifyReport:
    return verify((n, classes))
