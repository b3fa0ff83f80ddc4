from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from k24minor.audit import rooted_split_holds
from k24minor.catalog import FamilySpec, build_family, named_graph
from k24minor.core_graph import complete_bipartite, complete_graph, cycle_graph, path_graph
from k24minor.minor_oracle import (
    OracleBudgetExceeded,
    StandardMinorModel,
    find_k2t_minor,
    find_rooted_k2t_minor,
    has_minor,
    verify_model,
)

from conftest import graphs


def test_k24_contains_itself():
    g = complete_bipartite(2, 4)
    m = find_k2t_minor(g, 4)
    assert m is not None and verify_model(g, m)
    assert {min(m.r1), min(m.r2)} == {0, 1} and len(m.r1) == len(m.r2) == 1


def test_cplus_is_free():
    assert find_k2t_minor(named_graph("C+"), 4) is None


@pytest.mark.parametrize("name", ["Q3/e", "Q3", "V8", "Oct-e"])
def test_known_minors(name):
    g = named_graph(name)
    m = find_k2t_minor(g, 4)
    assert m is not None and verify_model(g, m)


@pytest.mark.parametrize("n,r,s", [(7, 3, 4), (8, 4, 4), (8, 3, 5), (9, 4, 5)])
def test_family_with_r_plus_s_at_least_n(n, r, s):
    g = build_family(FamilySpec(n, r, s))
    m = find_k2t_minor(g, 4)
    assert m is not None and verify_model(g, m)
    # explicit model: v_1 and v_n share two consecutive neighbours v_i, v_{i+1} with 3 <= i <= n-3
    i = next(i for i in range(2, n - 3) if all(g.has_edge(0, w) and g.has_edge(n - 1, w) for w in (i, i + 1)))
    explicit = StandardMinorModel(frozenset([0]), frozenset([n - 1]), frozenset([1, i, i + 1, n - 2]), 4)
    assert verify_model(g, explicit)


def test_rooted_c4():
    c4 = cycle_graph(4)
    m = find_rooted_k2t_minor(c4, 0, 2, 2)
    assert m is not None and verify_model(c4, m, (0, 2))
    assert m.s == {1, 3}


def test_rooted_path_has_none():
    for n in range(2, 7):
        assert find_rooted_k2t_minor(path_graph(n), 0, n - 1, 2) is None


def test_rooted_k23():
    g = complete_bipartite(2, 3)
    m = find_rooted_k2t_minor(g, 0, 1, 3)
    assert m is not None and verify_model(g, m, (0, 1))


def test_rooted_requires_distinct_roots():
    with pytest.raises(ValueError):
        find_rooted_k2t_minor(cycle_graph(4), 1, 1, 2)


def test_verify_model_rejects_bad_models():
    g = complete_bipartite(2, 4)
    good = find_k2t_minor(g, 4)
    assert verify_model(g, good)
    # disconnected R1: two nonadjacent vertices
    bad = StandardMinorModel(frozenset([0, 1]), frozenset([2]), frozenset([3, 4, 5]), 3)
    assert not verify_model(g, bad)
    short = StandardMinorModel(good.r1, good.r2, frozenset(sorted(good.s)[:3]), 4)
    assert not verify_model(g, short)
    assert not verify_model(g, good, roots=(5, 4))


def test_budget_exceeded_is_distinct():
    with pytest.raises(OracleBudgetExceeded):
        find_k2t_minor(named_graph("C+"), 4, budget=5)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("K24_BUDGET", "5")
    with pytest.raises(OracleBudgetExceeded):
        find_k2t_minor(named_graph("C+"), 4)


@given(graphs(max_n=8), st.integers(2, 4))
def test_soundness_and_monotonicity(g, t):
    m = find_k2t_minor(g, t)
    if m is not None:
        assert verify_model(g, m)
        assert find_k2t_minor(g, t - 1) is not None if t >= 3 else True


@given(graphs(min_n=2, max_n=8), st.data())
def test_minor_closure(g, data):
    if find_k2t_minor(g, 4) is not None or not g.m:
        return
    e = data.draw(st.sampled_from(g.edges()))
    assert find_k2t_minor(g.delete_edge(e), 4) is None
    assert find_k2t_minor(g.contract_edge(e), 4) is None


@given(graphs(min_n=2, max_n=7, connected=True), st.data())
def test_rooted_models_are_unrooted_models(g, data):
    x, y = data.draw(st.lists(st.sampled_from(range(g.n)), min_size=2, max_size=2, unique=True))
    m = find_rooted_k2t_minor(g, x, y, 2)
    if m is not None:
        assert verify_model(g, m, (x, y))
        assert find_k2t_minor(g, 2) is not None


def test_has_minor_small_graphs():
    assert has_minor(complete_graph(5), complete_graph(4))
    assert has_minor(named_graph("K33"), complete_bipartite(3, 3))
    assert not has_minor(named_graph("D"), complete_bipartite(3, 3))
    assert not has_minor(named_graph("D"), complete_graph(5))


@pytest.mark.slow
def test_rooted_split_property(corpus):
    checked = 0
    for g in corpus:
        if g.n <= 7:
            assert rooted_split_holds(g)
            checked += 1
    assert checked == 1 + 1 + 2 + 6 + 21 + 112 + 853
