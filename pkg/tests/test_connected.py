import random

import networkx as nx
import pytest

from helpers import cycle, path, star
from oracles import embedding_ok as _embedding_ok, random_connected, to_nx
from pminor.extraction.connected import connected_step, star_or_path_minor
from pminor.extraction.results import FAMILY, TWO_CONNECTED, Disconnected, Insufficient
from pminor.families import FamilyId, FamilyTag, generate
from pminor.graph import SimpleGraph, quotient_graph
from pminor.iso import is_isomorphic


def _cert_ok(g, cert):
    assert cert.host == g
    q = quotient_graph(g, cert.partition)
    if cert.kind == FAMILY:
        assert is_isomorphic(q, generate(cert.family)) is not None
    return q


def test_path_gives_path():
    emb = star_or_path_minor(path(10), 3, 5)
    _embedding_ok(path(10), emb, generate(FamilyId(FamilyTag.PATH, 5)))


def test_star_gives_star():
    emb = star_or_path_minor(star(9), 4, 4)
    _embedding_ok(star(9), emb, generate(FamilyId(FamilyTag.STAR, 4)))


def test_binary_tree_gives_one_of_the_two():
    g = SimpleGraph(31, list(nx.balanced_tree(2, 4).edges()))
    emb = star_or_path_minor(g, 4, 6)
    assert not isinstance(emb, Insufficient)
    t = emb.target
    assert is_isomorphic(t, generate(FamilyId(FamilyTag.STAR, 4))) or is_isomorphic(t, generate(FamilyId(FamilyTag.PATH, 6)))
    _embedding_ok(g, emb, t)


def test_small_graph_is_insufficient():
    assert isinstance(star_or_path_minor(path(3), 4, 5), Insufficient)


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        star_or_path_minor(SimpleGraph(3, [(0, 1)]), 2, 2)
    with pytest.raises(Disconnected):
        connected_step(SimpleGraph(3, [(0, 1)]), 2, 2)


def test_star_itself():
    cert = connected_step(star(6), 6, 4)
    assert cert.kind == FAMILY and cert.family == FamilyId(FamilyTag.STAR, 6)
    _cert_ok(star(6), cert)


def test_long_path_contracts_to_p5():
    cert = connected_step(path(20), 5, 4)
    assert cert.family == FamilyId(FamilyTag.PATH, 5)
    assert is_isomorphic(_cert_ok(path(20), cert), path(5)) is not None


def test_cycle_is_two_connected_outcome():
    cert = connected_step(cycle(20), 5, 10)
    assert cert.kind in (FAMILY, TWO_CONNECTED)
    q = _cert_ok(cycle(20), cert)
    if cert.kind == TWO_CONNECTED:
        assert q.n >= 10 and nx.node_connectivity(to_nx(q)) >= 2


def test_random_connected_certificates_verify():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(6, 30)
        g = random_connected(rng, n, rng.choice([0.0, 0.05, 0.15, 0.4]))
        k = rng.randint(3, 5)
        res = connected_step(g, k, 2 * k)
        if isinstance(res, Insufficient):
            continue
        q = _cert_ok(g, res)
        if res.kind == TWO_CONNECTED:
            assert q.n >= 2 * k and nx.node_connectivity(to_nx(q)) >= 2
        else:
            assert res.family.k == k
            assert res.family.tag in (FamilyTag.STAR, FamilyTag.PATH, FamilyTag.CLIQUE)


def test_deterministic_trace():
    g = random_connected(random.Random(1), 25, 0.1)
    a, b = connected_step(g, 4, 8), connected_step(g, 4, 8)
    assert a.trace == b.trace
