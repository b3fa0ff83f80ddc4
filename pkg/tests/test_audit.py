from __future__ import annotations

import random

from k24minor.audit import (
    check_counting,
    check_edge_bounds,
    check_subdividable_bruteforce,
    class_membership_mismatches,
    compare_corpus,
    converse_failure,
    dense_witness,
    random_expansion,
    random_strip,
    rooted_split_holds,
    run_suites,
    subdividable_bruteforce,
)
from k24minor.catalog import FamilySpec, build_family, named_graph
from k24minor.core_graph import complete_bipartite, complete_graph, is_k_connected, norm_edge
from k24minor.minor_oracle import find_k2t_minor
from k24minor.outerplanar import is_xy_outerplanar


def test_w6_two_spokes_not_subdividable():
    w6 = build_family(FamilySpec(6, 1, 3, True))
    assert find_k2t_minor(w6.subdivide_edges([(0, 5)]), 4) is None
    assert find_k2t_minor(w6.subdivide_edges([(0, 5), (2, 5)]), 4) is not None


def test_converse_fails_on_family_member():
    # v1 v_{n-1} and v_{n-2} v_{n-1} are each subdividable but not together
    n = 7
    g = build_family(FamilySpec(n, 2, 3))
    a, b = norm_edge(0, n - 2), norm_edge(n - 3, n - 2)
    sets, _ = subdividable_bruteforce(g)
    assert any(a in f for f in sets) and any(b in f for f in sets)
    assert not any({a, b} <= f for f in sets)
    assert converse_failure(g, sets) is not None


def test_bruteforce_on_small_graphs():
    assert subdividable_bruteforce(complete_bipartite(2, 4))[0] == []
    sets, calls = subdividable_bruteforce(complete_graph(4))
    assert calls > 0 and len(sets) >= 1
    assert check_subdividable_bruteforce("K5").ok


def test_dense_witness():
    for n in range(6, 12):
        w = dense_witness(n)
        assert w.n == n and w.m == 2 * n - 1
        assert is_k_connected(w, 2)
        if n <= 9:
            assert find_k2t_minor(w, 4) is None


def test_counting_rows():
    r = check_counting(10)
    assert r.ok and r.actual == 12 and r.pairwise_nonisomorphic


def test_edge_rows_small():
    rows = check_edge_bounds(range(5, 9), seed=1, samples=10)
    assert all(r.ok_2conn for r in rows)
    # the 3-connected maximum is 2n - 1, one more than the bound under audit
    assert [r.max_3conn for r in rows if r.n >= 7] == [2 * r.n - 1 for r in rows if r.n >= 7]


def test_class_membership_small():
    checked, bad = class_membership_mismatches(range(5, 8))
    assert checked > 0 and bad == []


def test_random_strip_is_xy_outerplanar():
    rng = random.Random(0)
    for _ in range(100):
        h, x, y = random_strip(rng)
        assert is_xy_outerplanar(h, x, y) is not None


def test_random_expansion_is_deterministic():
    a = [random_expansion(random.Random(5))[1].edges() for _ in range(3)]
    assert a[0] == a[1] == a[2]


def test_compare_corpus_small(corpus):
    small = [g for g in corpus if g.n <= 6]
    rep = compare_corpus(small)
    assert rep.ok and rep.checked == len(small)


def test_rooted_split_on_small_minors():
    assert rooted_split_holds(complete_bipartite(2, 4))
    assert rooted_split_holds(complete_bipartite(2, 4).subdivide_edges([(0, 2)]))


def test_run_suites_reports():
    rep = run_suites(["hasse", "counting"], seed=0)
    assert rep["ok"] and set(rep["suites"]) == {"hasse", "counting"}
    assert rep == run_suites(["hasse", "counting"], seed=0)


def test_named_graphs_in_bruteforce_agree():
    for cid in ("K33", "A", "A+", "D"):
        assert check_subdividable_bruteforce(cid).ok, cid
    assert named_graph("D").n == 7
