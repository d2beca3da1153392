import networkx as nx
import pytest

from oracles import naive_internally_4_connected, naive_quotients, to_nx
from pminor.extraction.necessity import necessity_check
from pminor.families import FamilyTag, family
from pminor.graph import SimpleGraph
from pminor.iso import is_isomorphic


def test_fan_closed_under_two_connected_minors():
    rep = necessity_check("fan", 2, 9)
    assert rep.ok and rep.minors_checked > 0
    assert [m.k for m in rep.members] == [4, 5, 6, 7, 8]


def test_cycle_closed():
    rep = necessity_check(FamilyTag.CYCLE, 2, 10)
    assert rep.ok and rep.distinct_minors > 0


def test_wheel_closed_under_three_connected_minors():
    assert necessity_check("wheel", 3, 9).ok


def test_fan_small_member_cross_checked():
    # independent enumeration on F_6: every 2-connected quotient of order >= 5 is a fan
    h = to_nx(family("fan", 6))
    for _, q in naive_quotients(h):
        if q.number_of_nodes() >= 5 and nx.node_connectivity(q) >= 2:
            m = q.number_of_nodes() - 1
            assert nx.is_isomorphic(q, to_nx(family("fan", m)))


def test_zigzag_report_lists_genuine_counterexamples():
    rep = necessity_check("zigzag", 4, 10)
    assert not rep.ok
    doc = rep.to_json()
    assert doc["family"] == "zigzag" and doc["counterexamples"]
    for x in rep.counterexamples[:50]:
        g = family("zigzag", x.member.k)
        q = SimpleGraph(len(x.partition), x.minor_edges)
        assert naive_internally_4_connected(to_nx(q))
        assert not any(is_isomorphic(q, family("zigzag", j)) for j in range(3, 6))
        parts = x.partition
        assert sorted(v for p in parts for v in p) == list(range(g.n))


def test_bad_class():
    with pytest.raises(ValueError):
        necessity_check("fan", 5, 9)
