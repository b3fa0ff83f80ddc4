from __future__ import annotations

import json
import random

from hypothesis import given, settings
import pytest

from conftest import graphs
from k24minor.audit import expand_edges, random_expansion
from k24minor.catalog import FamilySpec, build_family, named_graph
from k24minor.core_graph import Graph, GraphError, complete_bipartite, complete_graph, cycle_graph, norm_edge, path_graph
from k24minor.minor_oracle import find_k2t_minor, verify_model
from k24minor.outerplanar import is_outerplanar
from k24minor.recognizer import (
    SCHEMA,
    CoreExpansion,
    HasK24Minor,
    HasMinor,
    Outerplanar,
    ThreeSheets,
    certificate_from_json,
    find_apex_set,
    find_minor_model,
    is_k24_free,
    is_planar_k24free,
    recognize,
    recognize_block,
    verify_certificate,
)


def fan_strip(k: int) -> tuple[Graph, int, int]:
    """Fan of k triangles between 0 and k+1: path 0..k+1 plus chords from 0."""
    edges = [(i, i + 1) for i in range(k + 1)] + [(0, i) for i in range(2, k + 1)]
    return Graph(k + 2, edges), 0, k + 1


def test_k24_is_detected():
    g = complete_bipartite(2, 4)
    cert = recognize(g)
    assert not cert.free and verify_certificate(g, cert)
    assert cert.blocks[0].model.t == 4


def test_k23_is_three_sheets():
    g = complete_bipartite(2, 3)
    cert = recognize(g)
    assert cert.free and isinstance(cert.blocks[0], ThreeSheets)
    assert verify_certificate(g, cert)


def test_trees_and_cycles_are_outerplanar():
    for g in (path_graph(6), cycle_graph(7)):
        cert = recognize(g)
        assert cert.free and verify_certificate(g, cert)
    assert all(isinstance(b, Outerplanar) for b in recognize(cycle_graph(7)).blocks)


def test_k5_is_a_core():
    cert = recognize(complete_graph(5))
    assert cert.free and isinstance(cert.blocks[0], CoreExpansion) and cert.blocks[0].core == "K5"


def test_g723_with_fan_strip():
    core = build_family(FamilySpec(7, 2, 3))
    g = expand_edges(core, {norm_edge(2, 6): fan_strip(4)})
    assert g.n == 7 + 4
    cert = recognize(g)
    assert cert.free and verify_certificate(g, cert)
    blk = cert.blocks[0]
    assert isinstance(blk, CoreExpansion) and blk.core == "G(7,2,3)"
    assert hamilton_ok(g)


def hamilton_ok(g: Graph) -> bool:
    from k24minor.hamilton import hamilton_path_2conn, verify_hamilton

    return verify_hamilton(g, hamilton_path_2conn(g))


def test_two_spokes_subdivided_in_w6_is_minor():
    w6 = build_family(FamilySpec(6, 1, 3, True))
    g = w6.subdivide_edges([(0, 5), (1, 5)])
    cert = recognize(g)
    assert not cert.free and verify_certificate(g, cert)


def test_non_class_member_is_minor():
    g = build_family(FamilySpec(8, 3, 5))
    assert not is_k24_free(g)
    assert verify_model(g, find_minor_model(g))


def test_disconnected_graph_blocks():
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (4, 5)])
    cert = recognize(g)
    assert cert.free and verify_certificate(g, cert)


def test_json_roundtrip():
    g = expand_edges(build_family(FamilySpec(7, 2, 3)), {norm_edge(2, 6): fan_strip(3)})
    for h in (g, complete_bipartite(2, 4), complete_bipartite(2, 3), cycle_graph(5)):
        d = recognize(h).to_json()
        assert d["schema"] == SCHEMA
        back = certificate_from_json(json.loads(json.dumps(d)))
        assert verify_certificate(h, back)


def test_unknown_schema_rejected():
    with pytest.raises(GraphError):
        certificate_from_json({"schema": "other", "verdict": "free", "blocks": []})


def test_tampered_certificates_rejected():
    g = expand_edges(build_family(FamilySpec(7, 2, 3)), {norm_edge(2, 6): fan_strip(3)})
    d = recognize(g).to_json()
    bad = json.loads(json.dumps(d))
    m = bad["blocks"][0]["map"]
    m[0], m[1] = m[1], m[0]
    assert not verify_certificate(g, certificate_from_json(bad))
    # claim freeness for a graph with an extra edge
    h = g.add_edges([(7, 4)]) if not g.has_edge(7, 4) else g.delete_edge((7, 4))
    assert not verify_certificate(h, certificate_from_json(d))
    # wrong verdict
    k = complete_bipartite(2, 4)
    dk = recognize(k).to_json()
    dk["verdict"] = "free"
    assert not verify_certificate(k, certificate_from_json(dk))


def test_minor_certificate_must_be_model_of_input():
    k = complete_bipartite(2, 4)
    cert = recognize(k)
    assert not verify_certificate(cycle_graph(6), cert)


@given(graphs(1, 9, connected=True))
def test_recognizer_agrees_with_oracle(g):
    cert = recognize(g)
    assert cert.free == (find_k2t_minor(g, 4) is None)
    assert verify_certificate(g, cert)


@given(graphs(2, 9))
def test_certificate_covers_every_block(g):
    cert = recognize(g)
    assert verify_certificate(g, cert)


def test_random_expansions_are_free_and_certified():
    rng = random.Random(7)
    for _ in range(60):
        kind, g = random_expansion(rng, max_core=10, max_strip=5)
        cert = recognize(g)
        assert cert.free, kind
        assert verify_certificate(g, cert)
        if g.n <= 11:
            assert find_k2t_minor(g, 4) is None


def test_large_minor_model_is_lifted():
    g = build_family(FamilySpec(14, 5, 9))
    assert not is_k24_free(g)
    model = find_minor_model(g)
    assert verify_model(g, model) and model.t == 4


# -- apex and planarity ------------------------------------------------------------------


def test_apex_family_member_hub():
    g = build_family(FamilySpec(9, 3, 4))
    assert find_apex_set(g) == frozenset({8})


def test_apex_k33():
    g = complete_bipartite(3, 3)
    u = find_apex_set(g)
    assert len(u) <= 2 and is_outerplanar(g.remove_vertices(u)[0]) is not None
    assert not is_planar_k24free(g)


def test_apex_outerplanar_is_empty():
    assert find_apex_set(cycle_graph(6)) == frozenset()


def test_apex_requires_block_and_freeness():
    with pytest.raises(GraphError):
        find_apex_set(path_graph(4))
    with pytest.raises(HasK24Minor):
        find_apex_set(complete_bipartite(2, 4))


@pytest.mark.parametrize("name", ["K5", "K33", "A", "A+", "B", "B+", "C", "C+", "D"])
def test_apex_on_named(name):
    g = named_graph(name)
    u = find_apex_set(g)
    planar = is_planar_k24free(g)
    assert len(u) <= (1 if planar else 2)
    assert is_outerplanar(g.remove_vertices(u)[0]) is not None


def test_planarity_flags():
    assert is_planar_k24free(named_graph("D"))
    assert not is_planar_k24free(complete_graph(5))
    assert is_planar_k24free(build_family(FamilySpec(10, 2, 6)))
    with pytest.raises(HasK24Minor):
        is_planar_k24free(complete_bipartite(2, 4))


def test_block_certificate_types():
    assert isinstance(recognize_block(complete_bipartite(2, 4)), HasMinor)
    assert isinstance(recognize_block(cycle_graph(4)), Outerplanar)
