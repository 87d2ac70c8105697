import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from mcturan.constructions import (b, balanced_parts, blowup_edges, blowup_packing, k5_star,
                                   k5_two_pentagons, natural_partition, perturbed_construction,
                                   perturbed_construction_detail, single_c5, t)
from mcturan.errors import BadN, PackingNotFound
from mcturan.verifier import verify


def brute_t(n):
    return max(b(a) for a in itertools.product(range(n + 1), repeat=5) if sum(a) == n)


@pytest.mark.parametrize("n", range(0, 23))
def test_t_matches_brute_force(n):
    assert t(n).t == brute_t(n)


@pytest.mark.parametrize("n, q, r, value", [(5, 1, 0, 1), (12, 2, 2, 4), (13, 2, 3, 6), (14, 2, 4, 6),
                                            (50, 10, 0, 100), (53, 10, 3, 110)])
def test_t_values(n, q, r, value):
    tv = t(n)
    assert (tv.n, tv.q, tv.r, tv.t) == (n, q, r, value)


def test_b_examples():
    assert b((2, 2, 2, 2, 2)) == 4
    assert b((3, 2, 3, 2, 3)) == 6
    assert b((3, 3, 2, 3, 3)) == 6
    assert b((1, 0, 1, 1, 1)) == 0


@given(st.integers(5, 400))
def test_balanced_parts_attain_t(n):
    a = balanced_parts(n)
    assert sum(a) == n and max(a) - min(a) <= 1
    assert b(a) == t(n).t


def test_natural_partition_and_edges():
    a = (1, 2, 1, 1, 2)
    part = natural_partition(a)
    assert [part[v] for v in range(7)] == [1, 2, 2, 3, 4, 5, 5]
    E = blowup_edges(a)
    assert len(E) == sum(a[i] * a[(i + 1) % 5] for i in range(5))
    for u, v in E:
        assert (part[u] - part[v]) % 5 in (1, 4)


@pytest.mark.parametrize("a", [(1, 1, 1, 1, 1), (2, 2, 2, 2, 2), (3, 3, 3, 3, 3), (2, 1, 2, 1, 2),
                               (3, 2, 3, 2, 3), (2, 2, 2, 2, 1), (3, 3, 2, 3, 3), (1, 2, 3, 1, 2)])
def test_blowup_packing_reaches_b(a):
    G = blowup_packing(a)
    assert G.k == b(a)
    assert verify(G).clean
    E = blowup_edges(a)
    assert all((u, v) in E for u, v, _ in G.edges())


def test_blowup_packing_by_search():
    G = blowup_packing((2, 2, 2, 2, 1), method="search")
    assert G.k == 2 and verify(G).clean


def test_blowup_packing_budget_too_small():
    with pytest.raises(PackingNotFound):
        blowup_packing((3, 2, 3, 2, 3), method="search", node_budget=5)


@pytest.mark.parametrize("a, method", [((1, 1, 1, 1), "auto"), ((1, 0, 1, 1, 1), "auto"),
                                       ((1, 1, 1, 1, 1), "magic")])
def test_blowup_packing_bad_input(a, method):
    with pytest.raises(ValueError):
        blowup_packing(a, method=method)


@pytest.mark.parametrize("n", [10, 15, 20, 25, 30])
def test_perturbed(n):
    det = perturbed_construction_detail(n)
    G = det.graph
    q = n // 5
    assert G.k == q * q
    rep = verify(G)
    assert rep.clean
    assert len(det.crossing_edges) == 2 * q
    ends = [x for e in det.crossing_edges for x in e]
    assert len(set(ends)) == len(ends)
    part = det.partition
    for u, v in det.crossing_edges:
        assert (part[u] - part[v]) % 5 not in (1, 4)
    # triangle count of the perturbation
    assert oracles.census(n, [tuple(c) for c in G.classes])["triangles"] == 2 * q * (q - 1)


@pytest.mark.parametrize("n", [5, 7, 12, 0, -5])
def test_perturbed_bad_n(n):
    with pytest.raises(BadN):
        perturbed_construction(n)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_k5_star(m):
    G = k5_star(m)
    assert G.n == 4 * m + 1 and G.k == 2 * m
    assert G.degree(0) == 4 * m
    assert verify(G).clean


def test_small_named_graphs():
    assert single_c5().k == 1
    assert single_c5(8).n == 8
    assert k5_two_pentagons().num_edges == 10
