import numpy as np
import pytest

from conftest import perm
from solgraph.catalog import build
from solgraph.errors import CapacityError, NotAVertexError, SolubleGroupError
from solgraph.graph import INF, GraphView, PredicateKind, dense_diameter, find_induced_p4
from solgraph.permcore import Group, direct_product, is_soluble, wreath_s2


def test_vertex_counts(view):
    assert view("A(5)").vertex_count == 59
    assert GraphView(build("SL2(3)"), "metabelian").vertex_count == 22
    # the centre of SL(2,5) is the radical
    assert view("SL2(5)").vertex_count == 118


def test_soluble_input_rejected():
    with pytest.raises(SolubleGroupError, match="soluble"):
        GraphView(build("S(4)"))


def test_capacity():
    with pytest.raises(CapacityError):
        GraphView(build("M11"), cap=1000)


def test_adjacency_examples(view):
    v = view("A(5)")
    assert v.adjacent(perm("(1,2)(3,4)", 5), perm("(1,3)(2,5)", 5))
    x = perm("(1,2,3,4,5)", 5)
    assert v.adjacent(x, x ** 2)
    assert not v.adjacent(x, perm("(1,2,3,5,4)", 5))
    with pytest.raises(ValueError):
        v.adjacent(x, x)


def test_non_vertex_rejected(view):
    with pytest.raises(NotAVertexError):
        view("A(5)").adjacent(perm("()", 5), perm("(1,2,3)", 5))


def test_balls(view):
    x = perm("(1,2,3,4,5,6,7)", 7)
    b = view("S(7)").ball(x, 1)
    assert len(b) == 41
    nx = Group([x, perm("(2,4,3,7,5,6)", 7)])
    assert nx.order() == 42
    assert set(b.members()) == {p for p in nx.elements() if not p.is_identity()}
    assert view("A(6)").ball(perm("(1,2,3)", 6), 0).members() == [perm("(1,2,3)", 6)]


def test_balls_are_nested(view):
    v = view("A(6)")
    x = perm("(1,2,3,4,5)", 6)
    sizes = [len(v.ball(x, r)) for r in range(4)]
    assert sizes == sorted(sizes)
    assert sizes[-1] == v.vertex_count


def test_distances(view):
    v = view("A(5)")
    x = perm("(1,2,3)", 5)
    assert v.distance(x, x) == 0
    assert v.distance(x, ~x) == 1
    nil = GraphView(build("A(4)"), "nilpotent")
    assert nil.distance(perm("(1,2)(3,4)", 4), perm("(1,2,3)", 4)) == INF


def test_diameters(view):
    assert view("A(5)").diameter() == 2
    assert view("A(6)").diameter() == 3
    assert view("PSL2(8)").diameter() == 2


def test_components():
    nil = GraphView(build("A(4)"), "nilpotent")
    assert nil.component_sizes() == [3, 2, 2, 2, 2]
    met = GraphView(build("SL2(3)"), "metabelian")
    assert len(met.components()) == 5
    assert len(GraphView(build("A(5)")).components()) == 1


def test_cograph_detection(view):
    res = view("A(5)").is_cograph()
    assert not res.is_cograph
    a, b, c, d = res.witness
    v = view("A(5)")
    assert v.adjacent(a, b) and v.adjacent(b, c) and v.adjacent(c, d)
    assert not (v.adjacent(a, c) or v.adjacent(a, d) or v.adjacent(b, d))


def test_synthetic_cographs():
    k4 = np.ones((4, 4), dtype=bool)
    np.fill_diagonal(k4, False)
    assert find_induced_p4(k4) is None
    p4 = np.zeros((4, 4), dtype=bool)
    for i in range(3):
        p4[i, i + 1] = p4[i + 1, i] = True
    w = find_induced_p4(p4)
    assert w is not None and sorted(w) == [0, 1, 2, 3]
    assert dense_diameter(p4) == 3
    assert dense_diameter(np.zeros((2, 2), dtype=bool)) == INF


def test_complement_diameter(view):
    for spec in ("A(5)", "A(6)", "S(5)"):
        assert view(spec).complement_diameter() == 2


def test_adjacency_matrix_is_symmetric_and_irreflexive(view):
    adj = view("PSL2(7)").adjacency_matrix()
    assert (adj == adj.T).all()
    assert not adj.diagonal().any()


def test_involutions_form_a_clique(view):
    v = view("A(6)")
    t = v.table
    inv = [v.vertex_index(t.perm(int(i))) for i in v.vertices if t.orders[i] == 2]
    adj = v.adjacency_matrix()
    sub = adj[np.ix_(inv, inv)]
    assert sub.sum() == len(inv) * (len(inv) - 1)


def test_powers_are_adjacent(view):
    v = view("M10")
    for x in v.class_representatives():
        for k in range(2, x.order()):
            y = x ** k
            if not y.is_identity() and y != x:
                assert v.distance(x, y) <= 1


def test_insoluble_diameter_at_least_two(view):
    for spec in ("A(5)", "PSL2(7)", "S(5)", "PGL2(7)", "SL2(5)"):
        assert view(spec).diameter() >= 2


def test_radical_quotient_preserves_diameter(view):
    assert view("SL2(5)").diameter() == view("radquot(SL2(5))").diameter() == 2


def test_workers_do_not_change_results():
    g = build("PSL2(11)")
    one = GraphView(g, workers=1)
    many = GraphView(g, workers=3)
    assert one.eccentricities() == many.eccentricities()
    assert one.components() == many.components()


def test_predicate_kind_parse():
    assert PredicateKind.parse("Nilpotent") is PredicateKind.NILPOTENT
    with pytest.raises(ValueError):
        PredicateKind.parse("cyclic")


def test_direct_product_of_diameter_two_factors(view):
    assert view("A(5) x A(5)").diameter() == 2


def test_wreath_product_is_connected_within_three():
    v = GraphView(wreath_s2(build("A(5)")))
    d = v.diameter()
    assert d != INF and 2 <= d <= 3


def test_product_bound_beyond_enumeration_cap():
    """L2(8) x L2(8) has order 254016, too large to enumerate.  For sampled
    pairs x, y a common neighbour is built from a factor's common neighbour,
    and both edges are checked by stabilizer-chain solubility tests."""
    h = build("PSL2(8)")
    prod = direct_product(h, h)
    g = prod.group
    assert g.order() == 254016
    hv = GraphView(h)
    ht = hv.table
    rng = np.random.default_rng(5)

    def common_neighbour(a, b):
        na = {int(z) for z in hv.ball(a, 1).vertex_ids}
        nb = {int(z) for z in hv.ball(b, 1).vertex_ids}
        return hv.vertex(min(na & nb))

    for _ in range(12):
        h1, k1, h2, k2 = (ht.perm(int(i)) for i in rng.integers(1, ht.order, 4))
        x, y = prod.left(h1) * prod.right(k1), prod.left(h2) * prod.right(k2)
        mid = prod.left(common_neighbour(h1, h2))
        assert is_soluble(Group([x, mid])) and is_soluble(Group([mid, y]))
