import networkx as nx
import pytest

from oracles import corpus
from pminor.harness import BUNDLED_ORDERS, KNOWN_COUNTS, CorpusSpec, bundled_path, check_attestation


@pytest.mark.parametrize("n", list(BUNDLED_ORDERS))
def test_counts_match_known_totals(n):
    assert len(corpus(n)) == KNOWN_COUNTS[n]
    assert bundled_path(n).is_file()


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_graph_atlas(n):
    # the atlas lists every graph on at most seven vertices exactly once
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    ours = corpus(n)
    assert len(atlas) == len(ours)
    buckets: dict[str, list] = {}
    for g in ours:
        buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g), []).append(g)
    for a in atlas:
        matches = [g for g in buckets.get(nx.weisfeiler_lehman_graph_hash(a), []) if nx.is_isomorphic(a, g)]
        assert len(matches) == 1


def test_attestation_check():
    assert check_attestation(CorpusSpec.bundled(1, 8)) == []


def test_bundled_range_guard():
    with pytest.raises(ValueError):
        CorpusSpec.bundled(1, 9)
