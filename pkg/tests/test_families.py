import networkx as nx
import pytest

from helpers import complete, cycle
from oracles import to_nx
from pminor.families import (
    THEOREM_FAMILIES,
    FamilyId,
    FamilyTag,
    NotALadder,
    ParameterOutOfRange,
    family,
    generate,
    identify,
    identify_all,
    rung_contraction,
)
from pminor.graph import SimpleGraph
from pminor.iso import is_isomorphic


def test_wheel_5_counts():
    w = family("wheel", 5)
    assert (w.n, w.size(), w.degree(0)) == (6, 10, 5)


def test_small_ladders():
    octa = SimpleGraph(6, list(nx.octahedral_graph().edges()))
    assert is_isomorphic(family("zigzag", 3), octa) is not None
    assert set(family("zigzag", 3).degrees()) == {4}
    assert is_isomorphic(family("moebius-zigzag", 2), complete(5)) is not None


@pytest.mark.parametrize("k", range(3, 9))
def test_closed_forms(k):
    assert family("wheel", k).n == k + 1
    assert family("double-wheel", k).n == k + 2
    assert family("zigzag", k).n == 2 * k
    assert family("moebius-zigzag", k).n == 2 * k + 1
    assert family("triple-fan", k).n == k + 3
    assert family("zigzag", k).size() == 4 * k
    assert family("moebius-zigzag", k).size() == 2 * (2 * k + 1)


@pytest.mark.parametrize("k", range(3, 9))
def test_constructions_against_networkx(k):
    iso = nx.is_isomorphic
    assert iso(to_nx(family("wheel", k)), nx.wheel_graph(k + 1))
    assert iso(to_nx(family("fan", k)), nx.compose(nx.path_graph(range(1, k + 1)), nx.star_graph(k)))
    assert iso(to_nx(family("star", k)), nx.star_graph(k))
    sq = nx.power(nx.cycle_graph(2 * k), 2)
    assert iso(to_nx(family("zigzag", k)), sq)
    assert iso(to_nx(family("moebius-zigzag", k)), nx.power(nx.cycle_graph(2 * k + 1), 2))
    kab = nx.complete_bipartite_graph(3, k)
    kab.add_edges_from([(0, 1), (0, 2), (1, 2)])
    assert iso(to_nx(family("k3k-prime", k)), kab)
    assert iso(to_nx(family("complete-bipartite", k, a=2)), nx.complete_bipartite_graph(2, k))


def test_zigzag_u_v_description():
    # u-cycle, v-cycle, rungs u_i v_i and v_i u_{i+1}
    k = 5
    z = family("zigzag", k)
    u = [z.labels.index(f"u{i + 1}") for i in range(k)]
    v = [z.labels.index(f"v{i + 1}") for i in range(k)]
    for i in range(k):
        j = (i + 1) % k
        assert z.has_edge(u[i], u[j]) and z.has_edge(v[i], v[j])
        assert z.has_edge(u[i], v[i]) and z.has_edge(v[i], u[j])


def test_hub_adjacency_conventions():
    df = family("double-fan", 5)
    assert df.has_edge(0, 1)
    tf = family("triple-fan", 5)
    assert tf.has_edge(0, 1) and tf.has_edge(1, 2) and tf.has_edge(0, 2)
    assert not family("double-wheel", 5).has_edge(0, 1)
    assert family("double-wheel-axle", 5).has_edge(0, 1)


@pytest.mark.parametrize("tag,k", [("cycle", 2), ("wheel", 2), ("zigzag", 2), ("moebius-zigzag", 1), ("star", 0)])
def test_parameter_guard(tag, k):
    with pytest.raises(ParameterOutOfRange):
        family(tag, k)


def test_bipartite_needs_side():
    with pytest.raises(ParameterOutOfRange):
        FamilyId(FamilyTag.COMPLETE_BIPARTITE, 3)
    with pytest.raises(ParameterOutOfRange):
        FamilyId(FamilyTag.WHEEL, 4, 2)


def test_identify_ties_and_misses(petersen_graph):
    assert identify(complete(3)) == FamilyId(FamilyTag.CYCLE, 3)
    tied = identify_all(complete(3))
    assert FamilyId(FamilyTag.CLIQUE, 3) in tied
    assert identify(family("double-wheel", 6)) == FamilyId(FamilyTag.DOUBLE_WHEEL, 6)
    assert identify(petersen_graph) is None


def test_identify_round_trip():
    for tag in FamilyTag:
        for k in range(1, 8):
            try:
                fid = FamilyId(tag, k, 2 if tag is FamilyTag.COMPLETE_BIPARTITE else None)
            except ParameterOutOfRange:
                continue
            g = generate(fid)
            hits = identify_all(g)
            if tag is FamilyTag.COMPLETE_BIPARTITE and k < 2:
                fid = FamilyId(tag, 2, k)  # K_{2,1} is listed as K_{1,2}
            assert fid in hits
            assert identify(g) == hits[0]
            relabelled = g.relabel(list(reversed(range(g.n))))
            assert identify(relabelled) == hits[0]


def test_identify_restricted_to_tags():
    assert identify(complete(3), (FamilyTag.CLIQUE,)) == FamilyId(FamilyTag.CLIQUE, 3)
    assert identify(cycle(5), THEOREM_FAMILIES[3]) is None


@pytest.mark.parametrize("k", range(3, 9))
def test_rung_contraction_gives_cycle(k):
    q, prov, cyc = rung_contraction(family("zigzag", k))
    assert is_isomorphic(q, cycle(k)) is not None
    for i in range(k):
        assert q.has_edge(cyc[i], cyc[(i + 1) % k])
        assert prov.parallel_class(cyc[i], cyc[(i + 1) % k])


def test_rung_contraction_z3_z4_and_moebius():
    q, prov, _ = rung_contraction(family("zigzag", 4))
    assert q == cycle(4) or is_isomorphic(q, cycle(4))
    assert all(len(prov.parallel_class(a, b)) >= 1 for a, b in q.edges())
    q3, _, _ = rung_contraction(family("zigzag", 3))
    assert is_isomorphic(q3, complete(3)) is not None
    qm, _, _ = rung_contraction(family("moebius-zigzag", 5))
    assert is_isomorphic(qm, cycle(5)) is not None
    shuffled = family("zigzag", 6).relabel([5, 3, 1, 0, 2, 4, 11, 9, 7, 6, 8, 10])
    assert is_isomorphic(rung_contraction(shuffled)[0], cycle(6)) is not None


def test_rung_contraction_guards():
    with pytest.raises(ParameterOutOfRange):
        rung_contraction(family("moebius-zigzag", 2))
    with pytest.raises(NotALadder):
        rung_contraction(cycle(8))
