import random

import networkx as nx
import pytest

from helpers import cycle
from oracles import embedding_ok as _embedding_ok, random_two_connected, to_nx
from pminor.extraction.results import FAMILY, THREE_CONNECTED, Insufficient, NotTwoConnected
from pminor.extraction.twoconn import cycle_or_k2r, two_connected_step
from pminor.families import FamilyId, FamilyTag, family, generate
from pminor.graph import SimpleGraph, quotient_graph
from pminor.iso import is_isomorphic


def test_cycle_gives_c7():
    emb = cycle_or_k2r(cycle(10), 7)
    assert is_isomorphic(emb.target, cycle(7)) is not None
    _embedding_ok(cycle(10), emb, emb.target)


def test_k29_gives_k26():
    g = family("complete-bipartite", 9, a=2)
    emb = cycle_or_k2r(g, 6)
    assert is_isomorphic(emb.target, family("complete-bipartite", 6, a=2)) is not None
    _embedding_ok(g, emb, emb.target)


def test_prism_gives_c6():
    prism = SimpleGraph(6, list(nx.circular_ladder_graph(3).edges()))
    emb = cycle_or_k2r(prism, 6)
    assert is_isomorphic(emb.target, cycle(6)) is not None
    _embedding_ok(prism, emb, emb.target)


def test_guards():
    with pytest.raises(NotTwoConnected):
        cycle_or_k2r(family("path", 5), 3)
    with pytest.raises(ValueError):
        cycle_or_k2r(cycle(5), 2)
    with pytest.raises(NotTwoConnected):
        two_connected_step(family("star", 4), 3, 5)


def _check(g, cert):
    q = quotient_graph(g, cert.partition)
    if cert.kind == FAMILY:
        assert is_isomorphic(q, generate(cert.family)) is not None
    return q


def test_fan_itself():
    g = family("fan", 6)
    cert = two_connected_step(g, 6, 50)
    assert cert.family == FamilyId(FamilyTag.FAN, 6)
    _check(g, cert)


def test_k2_20_with_edge():
    g = family("k2k-prime", 20)
    cert = two_connected_step(g, 5, 10**6)
    assert cert.family == FamilyId(FamilyTag.K2K_PRIME, 5)
    _check(g, cert)


def test_long_cycle():
    cert = two_connected_step(cycle(30), 6, 10)
    assert cert.family == FamilyId(FamilyTag.CYCLE, 6)
    _check(cycle(30), cert)


def test_random_two_connected_certificates_verify():
    rng = random.Random(7)
    for _ in range(100):
        g = random_two_connected(rng, rng.randint(8, 28))
        k = rng.randint(3, 5)
        res = two_connected_step(g, k, k + 3)
        if isinstance(res, Insufficient):
            continue
        q = _check(g, res)
        if res.kind == THREE_CONNECTED:
            assert q.n >= k + 3 and nx.node_connectivity(to_nx(q)) >= 3
        else:
            assert res.family.k == k
