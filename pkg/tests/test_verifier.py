import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mcturan.constructions import k5_star
from mcturan.errors import PreconditionViolated
from mcturan.graph import build_colored_graph
from mcturan.solver import random_greedy_instance
from mcturan.verifier import (check_kovacs_nagy, double_count_check, iter_triangles,
                              lemma22_violations, triangle_census, verify, verify_classes)


def test_k5_census(k5):
    c = triangle_census(k5)
    assert c.triangle_count == 10 and c.multicolored_count == 0
    assert c.one == [5, 5] and c.two == [5, 5] and c.three == [0, 0]


def test_k5_kovacs_nagy(k5):
    checks = check_kovacs_nagy(k5)
    assert [(c.lhs, c.rhs, c.slack) for c in checks] == [(20, 25, 5), (20, 25, 5)]
    assert all(c.ok for c in checks)


def test_c5_kovacs_nagy_is_tight(c5):
    (chk,) = check_kovacs_nagy(c5)
    assert (chk.lhs, chk.rhs, chk.slack) == (10, 10, 0)


def test_kovacs_nagy_precondition(witness14):
    with pytest.raises(PreconditionViolated):
        check_kovacs_nagy(witness14)


def test_iter_triangles_sorted(k5):
    tris = list(iter_triangles(k5))
    assert len(tris) == 10 and all(a < b < c for a, b, c in tris)


def test_double_count(k5):
    assert double_count_check(k5) == (40, 40, True)


def test_neighborhood_bound_clean_on_star():
    for m in (1, 2, 3):
        assert lemma22_violations(k5_star(m)) == []


def test_verify_clean(k5):
    rep = verify(k5)
    assert rep.valid and rep.clean
    assert (rep.n, rep.k) == (5, 2)
    assert rep.multicolored_triangle is None


def test_verify_reports_witness(witness14):
    rep = verify(witness14)
    assert not rep.valid and not rep.clean
    assert rep.multicolored_triangle == (0, 1, 2)
    assert rep.kn_violations == []


@pytest.mark.parametrize("classes", [[(0, 1, 2, 3)], [(0, 1, 2, 3, 4), (1, 0, 3, 2, 4)],
                                     [(0, 1, 2, 3, 7)]])
def test_verify_invalid_pair(classes):
    rep = verify_classes(5, classes)
    assert not rep.valid and rep.error
    assert rep.k == len(classes)


def test_verify_accepts_pair(k5):
    assert verify((5, list(k5.classes))) == verify(k5)


@settings(max_examples=80, deadline=None)
@given(st.integers(5, 12), st.integers(0, 10 ** 6))
def test_census_matches_oracle(n, seed):
    G = random_greedy_instance(n, random.Random(seed))
    c = triangle_census(G)
    o = oracles.census(n, [tuple(x) for x in G.classes])
    assert (c.triangle_count, c.multicolored_count, c.one, c.two) == \
        (o["triangles"], o["multicolored"], o["one"], o["two"])


@settings(max_examples=80, deadline=None)
@given(st.integers(5, 12), st.integers(0, 10 ** 6))
def test_verify_invariants_random(n, seed):
    rep = verify(random_greedy_instance(n, random.Random(seed)))
    assert rep.clean


def test_census_with_multicolored_triangles():
    rng = random.Random(3)
    checked = 0
    for _ in range(300):
        n = rng.randint(6, 9)
        classes, used = [], set()
        for _ in range(40):
            cyc = rng.sample(range(n), 5)
            es = {frozenset((cyc[i], cyc[(i + 1) % 5])) for i in range(5)}
            if not es & used:
                used |= es
                classes.append(tuple(cyc))
        G = build_colored_graph(n, classes)
        o = oracles.census(n, classes)
        c = triangle_census(G)
        assert (c.multicolored_count, c.one, c.two) == (o["multicolored"], o["one"], o["two"])
        checked += o["multicolored"] > 0
        # the double count holds with or without the triangle condition
        assert double_count_check(G)[2]
    assert checked
