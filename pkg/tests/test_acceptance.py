"""Acceptance suite: one PASS/FAIL line per criterion.

The lines are printed in pytest's terminal summary, or directly when this file
is run as a script (``python3 tests/test_acceptance.py``).
"""
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles
from conftest import ACCEPTANCE_LINES, build_corpus
from mcturan.analyzer import BlowupPartition, best_blowup_partition, bounds_table, vertex_split_bound
from mcturan.constructions import k5_star, perturbed_construction_detail, t
from mcturan.graph import build_colored_graph, edges_inside_neighborhood
from mcturan.solver import SearchOptions, brute_force_oracle, solve_exact
from mcturan.verifier import check_kovacs_nagy, double_count_check, triangle_census, verify

_corpus = None


def corpus():
    global _corpus
    if _corpus is None:
        _corpus = build_corpus()
    return _corpus


def record(num, title, fn):
    """Run one criterion check, log its line, and re-raise any failure."""
    try:
        detail = fn()
    except AssertionError as exc:
        ACCEPTANCE_LINES.append(f"criterion {num} FAIL  {title}: {exc}")
        raise
    ACCEPTANCE_LINES.append(f"criterion {num} PASS  {title}: {detail}")


def c1_oracle_equivalence():
    got = {}
    for n in (5, 6, 7):
        t0 = time.perf_counter()
        res = solve_exact(n, SearchOptions(parallel_width=1))
        dt = time.perf_counter() - t0
        ora = brute_force_oracle(n)
        assert res.complete, f"n={n} search incomplete"
        assert res.k_star == ora, f"n={n}: solver {res.k_star} vs oracle {ora}"
        assert verify(res.witness).clean, f"n={n}: witness not clean"
        if n == 5:
            assert dt < 1.0, f"n=5 took {dt:.2f}s"
        if n == 7:
            assert dt < 600.0, f"n=7 took {dt:.1f}s"
        got[n] = (res.k_star, dt)
    assert got[5][0] == 2, f"n=5 gave {got[5][0]}"
    assert solve_exact(4).k_star == 0 == brute_force_oracle(4)
    return ", ".join(f"n={n} k={k} ({dt:.3f}s)" for n, (k, dt) in got.items()) + ", n=4 k=0"


def c2_perturbed():
    out = []
    for n in (10, 15, 20, 25, 50):
        t0 = time.perf_counter()
        det = perturbed_construction_detail(n)
        G = det.graph
        rep = verify(G)
        P = BlowupPartition.from_mapping(n, det.partition)
        _, unstructured = P.classify(G)
        dt = time.perf_counter() - t0
        q = n // 5
        assert rep.clean and rep.multicolored_triangle is None, f"n={n} fails verification"
        assert G.k == t(n).t == q * q, f"n={n}: k={G.k}"
        assert triangle_census(G).multicolored_count == 0
        assert len(unstructured) == 2 * n // 5, f"n={n}: {len(unstructured)} unstructured edges"
        ends = [x for e in unstructured for x in e]
        assert len(ends) == len(set(ends)), f"n={n}: unstructured edges are not a matching"
        assert dt < 1.0, f"n={n} took {dt:.2f}s"
        out.append(f"n={n} k={G.k} M={len(unstructured)} ({dt:.3f}s)")
    return "; ".join(out)


def c3_neighborhood():
    checked = 0
    for G in corpus():
        for v in range(G.n):
            e = edges_inside_neighborhood(G, v)
            assert e <= 3 * G.degree(v) // 2, f"n={G.n} v={v}: {e} > 3*{G.degree(v)}/2"
            checked += 1
    for m in (1, 2, 3):
        S = k5_star(m)
        e, d = edges_inside_neighborhood(S, 0), S.degree(0)
        assert (e, d) == (6 * m, 4 * m) and e == 3 * d // 2, f"k5_star({m}) hub: {e} vs {d}"
    return f"{len(corpus())} instances, {checked} vertices; hub equality for m=1,2,3"


def c4_kovacs_nagy():
    colors = 0
    for G in corpus():
        for chk in check_kovacs_nagy(G):
            assert chk.ok, f"n={G.n} color {chk.color}: {chk.lhs} > {chk.rhs}"
            colors += 1
    (c5,) = check_kovacs_nagy(build_colored_graph(5, [(0, 1, 2, 3, 4)]))
    assert c5.slack == 0, f"single C5 slack {c5.slack}"
    return f"{colors} colors checked; single C5 slack 0"


def c5_double_count():
    for G in corpus():
        by_cycles, by_degrees, ok = double_count_check(G)
        deg = oracles.degrees(G.n, G.classes)
        assert ok and Fraction(sum(d * d for d in deg), 2) == by_cycles, f"n={G.n}: {by_cycles} vs {by_degrees}"
    return f"{len(corpus())} instances"


def c6_vertex_split():
    tight = 0
    for G in corpus():
        bound = vertex_split_bound(G)
        assert bound >= G.k, f"n={G.n}: bound {bound} < k {G.k}"
        tight += bound == G.k
    return f"{len(corpus())} instances, {tight} tight"


def c7_bounds():
    t0 = time.perf_counter()
    rows = bounds_table(5, 10 ** 4, 0)
    for r in rows:
        assert Fraction(r.t) <= Fraction(r.n * r.n, 25) + Fraction(3 * r.n, 25), f"n={r.n}"
        assert Fraction(r.n * r.n, 25) - Fraction(2 * r.n, 5) <= r.t, f"n={r.n}"
        assert r.lower_le_thm11 and r.quad_lower_ok
    dt = time.perf_counter() - t0
    assert len(rows) == 10 ** 4 - 4
    assert dt < 1.0, f"took {dt:.2f}s"
    return f"{len(rows)} values of n ({dt:.3f}s)"


def c8_partition_recovery():
    G = perturbed_construction_detail(10).graph
    found = best_blowup_partition(G).structured_count(G)
    optimum = oracles.max_structured_by_enumeration(10, [tuple(c) for c in G.classes])
    assert found == optimum, f"found {found}, exhaustive optimum {optimum}"
    return (f"{found} structured / {G.num_edges - found} unstructured, equal to the 5^10 "
            f"enumeration (the natural partition gives 16 / 4)")


def c9_determinism():
    outs = {}
    for jobs in (1, 2, 8):
        r = subprocess.run([sys.executable, "-m", "mcturan", "solve", "--n", "6", "--jobs", str(jobs)],
                           capture_output=True, text=True, timeout=300)
        assert r.returncode == 0, f"jobs={jobs}: exit {r.returncode}: {r.stderr.strip()}"
        outs[jobs] = r.stdout
    assert outs[1] == outs[2] == outs[8], "outputs differ between job counts"
    return f"identical {len(outs[1].splitlines())}-line output for J=1,2,8"


CRITERIA = [
    (1, "oracle equivalence", c1_oracle_equivalence),
    (2, "perturbed construction certification", c2_perturbed),
    (3, "neighborhood edge bound", c3_neighborhood),
    (4, "Kovacs-Nagy inequality", c4_kovacs_nagy),
    (5, "double-count identity", c5_double_count),
    (6, "vertex-split bound", c6_vertex_split),
    (7, "bounds consistency", c7_bounds),
    (8, "partition recovery", c8_partition_recovery),
    (9, "solve determinism across job counts", c9_determinism),
]


@pytest.mark.parametrize("num, title, fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    record(num, title, fn)


@pytest.mark.xfail(strict=True, reason="the exhaustive optimum for perturbed(10) is 18, not 16")
def test_partition_recovery_stated_count():
    G = perturbed_construction_detail(10).graph
    assert best_blowup_partition(G).structured_count(G) == 16


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        try:
            record(num, title, fn)
        except AssertionError:
            failed += 1
        print(ACCEPTANCE_LINES[-1], flush=True)
    sys.exit(1 if failed else 0)
