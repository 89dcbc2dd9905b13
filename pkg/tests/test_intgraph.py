import pytest

from conftest import group
from solgraph.catalog import build
from solgraph.errors import CapacityError, SolubleGroupError
from solgraph.intgraph import dual_pair_check, enumerate_subgroups, soluble_intersection_graph


def test_subgroup_counts():
    assert len(enumerate_subgroups(build("A(5)")).subgroups) == 59
    assert len(enumerate_subgroups(group(6, "(1,2,3,4,5,6)")).subgroups) == 4
    assert len(enumerate_subgroups(build("S(4)")).subgroups) == 30


def test_subgroup_table_is_canonical_and_closed():
    g = build("S(4)")
    table = enumerate_subgroups(g)
    orders = [s.order for s in table.subgroups]
    assert orders[0] == 1 and orders[-1] == 24
    assert orders == sorted(orders)
    assert all(g.order() % o == 0 for o in orders)
    for i in range(len(table.subgroups)):
        assert table.group(i).order() == table.subgroups[i].order
    again = enumerate_subgroups(g)
    assert [s.members for s in again.subgroups] == [s.members for s in table.subgroups]


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_subgroups(build("M11"))


def test_intersection_graph_of_a5():
    ig = soluble_intersection_graph(build("A(5)"))
    assert ig.vertex_count == 57
    assert len(ig.components()) == 1
    assert ig.diameter() <= 6
    adj = ig.adjacency
    assert (adj == adj.T).all() and not adj.diagonal().any()


def test_soluble_ambient_rejected():
    with pytest.raises(SolubleGroupError):
        soluble_intersection_graph(build("S(4)"))


def test_dual_pairs():
    for spec in ("A(5)", "PSL2(7)"):
        rep = dual_pair_check(build(spec))
        assert rep.holds
