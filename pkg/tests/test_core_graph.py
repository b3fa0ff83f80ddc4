from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from k24minor.catalog import FamilySpec, build_family
from k24minor.core_graph import (
    Graph,
    GraphError,
    GraphFormatError,
    all_blocks,
    blocks,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_graph6,
    is_k_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graphs,
    two_separations,
    wheel_graph,
)
from k24minor.iso import are_isomorphic, automorphisms, find_subgraph

from conftest import graphs


# -- graph6 ------------------------------------------------------------------


def test_graph6_small_example_roundtrip():
    g = parse_graph6("D?{")
    assert g.n == 5
    # bits after the header: 000 000 111 1.. -> edges 0-4, 1-4, 2-4, 3-4
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert emit_graph6(g) == "D?{"


def test_graph6_k24_degree_sequence():
    k24 = complete_bipartite(2, 4)
    g = parse_graph6(emit_graph6(k24))
    assert sorted((g.degree(v) for v in g.vertices()), reverse=True) == [4, 4, 2, 2, 2, 2]
    assert g == k24


def test_graph6_corpus_roundtrip(corpus):
    for g in corpus[::7]:
        assert parse_graph6(emit_graph6(g)) == g


def test_graph6_long_form():
    g = cycle_graph(70)
    s = emit_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "D?", "D?{{", "D\x1f{", "D? {"])
def test_graph6_errors_carry_offsets(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_error_offset_reported():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph6("D?\x7f")
    assert exc.value.offset is not None


@given(graphs(max_n=12))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_edge_list_format():
    g = parse_edge_list("# a triangle plus a pendant\n0 1\n1 2\n2 0\n2 3\n")
    assert g.n == 4 and g.m == 4
    assert read_graphs("0 1\n1 2\n", "auto")[0] == path_graph(3)


# -- blocks and connectivity ---------------------------------------------------


def test_blocks_of_path():
    d = blocks(path_graph(3))
    assert sorted(map(sorted, d.blocks)) == [[0, 1], [1, 2]]
    assert d.cutvertices == {1}


def test_blocks_of_2_connected_graph():
    d = blocks(wheel_graph(6))
    assert len(d.blocks) == 1 and not d.cutvertices


def test_blocks_of_bowtie():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    d = blocks(g)
    assert sorted(map(sorted, d.blocks)) == [[0, 1, 2], [2, 3, 4]]
    assert d.cutvertices == {2}
    assert sorted(d.tree) == [(0, 2), (1, 2)]


def test_blocks_rejects_disconnected():
    with pytest.raises(GraphError):
        blocks(Graph(3, [(0, 1)]))


@given(graphs(max_n=9, connected=True))
def test_blocks_partition_edges(g):
    d = blocks(g)
    owners = {e: [i for i, b in enumerate(d.blocks) if e[0] in b and e[1] in b] for e in g.edges()}
    assert all(len(o) == 1 for o in owners.values())
    in_two = {v for v in g.vertices() if len(d.blocks_containing(v)) >= 2}
    assert in_two == set(d.cutvertices)


def test_is_k_connected_examples():
    assert is_k_connected(build_family(FamilySpec(6, 2, 2)), 3)
    assert not is_k_connected(build_family(FamilySpec(7, 2, 2)), 3)
    assert not is_k_connected(complete_graph(2), 2)
    assert is_k_connected(complete_graph(4), 3)


@given(graphs(min_n=2, max_n=8))
def test_is_k_connected_brute_force(g):
    from itertools import combinations

    for k in (1, 2, 3):
        expect = g.n > k and all(
            g.remove_vertices(cut)[0].is_connected() for size in range(k) for cut in combinations(range(g.n), size)
        )
        assert is_k_connected(g, k) == expect


@given(graphs(min_n=4, max_n=8, connected=True))
def test_two_separations_are_valid(g):
    for sep in two_separations(g):
        assert sep.is_valid(g)


# -- isomorphism -----------------------------------------------------------------


def test_family_symmetry_r_s():
    for n, r, s in [(7, 2, 4), (8, 3, 5), (9, 2, 6)]:
        for plus in (False, True):
            assert are_isomorphic(build_family(FamilySpec(n, r, s, plus)), build_family(FamilySpec(n, s, r, plus)))


def test_g622_plus_is_g623():
    assert are_isomorphic(build_family(FamilySpec(6, 2, 2, True)), build_family(FamilySpec(6, 2, 3)))


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_isomorphism_of_relabelings(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    f = are_isomorphic(g, h)
    assert f is not None
    assert all(h.has_edge(f[a], f[b]) for a, b in g.edges())
    assert are_isomorphic(h, g) is not None
    assert are_isomorphic(g, g) is not None


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_respects_degrees(g, h):
    if g.degree_sequence() != h.degree_sequence():
        assert are_isomorphic(g, h) is None
    assert (are_isomorphic(g, h) is None) == (are_isomorphic(h, g) is None)


def test_automorphism_counts():
    assert len(list(automorphisms(complete_graph(4)))) == 24
    assert len(list(automorphisms(cycle_graph(6)))) == 12
    assert len(list(automorphisms(complete_bipartite(3, 3)))) == 72


def test_find_subgraph():
    assert find_subgraph(cycle_graph(4), complete_bipartite(2, 3)) is not None
    assert find_subgraph(complete_graph(3), complete_bipartite(2, 3)) is None


# -- edits --------------------------------------------------------------------------


def test_contract_k4_gives_k3():
    for e in complete_graph(4).edges():
        assert complete_graph(4).contract_edge(e) == complete_graph(3)


def test_contract_wheel_rim_edge():
    for n in range(6, 10):
        w = wheel_graph(n)
        assert are_isomorphic(w.contract_edge((0, 1)), wheel_graph(n - 1))


def test_contract_prism_edge_gives_w5():
    prism = build_family(FamilySpec(6, 2, 2))
    assert are_isomorphic(prism.contract_edge((4, 5)), wheel_graph(5))


def test_contract_keeps_smaller_index():
    g = path_graph(4).contract_edge((1, 2))
    assert g == path_graph(3)


def test_edit_errors():
    with pytest.raises(GraphError):
        path_graph(3).delete_edge((0, 2))
    with pytest.raises(GraphError):
        path_graph(3).contract_edge((0, 2))
    with pytest.raises(GraphError):
        path_graph(3).subdivide_edges([(0, 2)])


@given(graphs(min_n=2, max_n=9), st.data())
def test_edit_counts(g, data):
    if not g.m:
        return
    e = data.draw(st.sampled_from(g.edges()))
    h = g.contract_edge(e)
    assert h.n == g.n - 1
    assert all(a != b for a, b in h.edges())
    f = data.draw(st.sets(st.sampled_from(g.edges())))
    s = g.subdivide_edges(sorted(f))
    assert s.n == g.n + len(f) and s.m == g.m + len(f)
    assert g.delete_edge(e).m == g.m - 1


def test_all_blocks_includes_isolated_vertices():
    g = Graph(4, [(0, 1)])
    assert sorted(map(sorted, all_blocks(g))) == [[0, 1], [2], [3]]
