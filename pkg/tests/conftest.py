from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from k24minor.core_graph import Graph, read_graphs

CORPUS = Path(__file__).resolve().parents[1] / "corpus" / "connected_le8.g6"

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def corpus_graphs() -> tuple[Graph, ...]:
    return tuple(read_graphs(CORPUS.read_text(), "g6"))


@pytest.fixture(scope="session")
def corpus() -> tuple[Graph, ...]:
    if not CORPUS.exists():
        pytest.skip("corpus/connected_le8.g6 missing; run scripts/make_corpus.py")
    return corpus_graphs()


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, k in zip(pairs, keep) if k]
    if connected:
        # a random spanning tree guarantees connectivity
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.append((u, v))
    return Graph(n, set(tuple(e) for e in edges))
