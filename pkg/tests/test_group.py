import pytest

from conftest import dihedral, group, perm, quaternion
from solgraph.catalog import build
from solgraph.errors import CapacityError, DegreeMismatchError, NotNormalError
from solgraph.permcore import (
    Group, Permutation, StabilizerChain, centralizer_of, conjugacy_classes, derived_series,
    derived_subgroup, direct_product, elements, group_from_generators, is_abelian,
    is_metabelian, is_metacyclic, is_nilpotent, is_soluble, lower_central_series,
    normal_closure, normalizer_of_cyclic, quotient_by, soluble_radical, trivial_group,
    wreath_s2,
)


def test_trivial_group_from_identity():
    g = group_from_generators([Permutation.identity(5)])
    assert g.order() == 1
    assert [p.is_identity() for p in elements(g)] == [True]


def test_a5_from_zero_based_generators():
    g = Group([Permutation.from_cycles([(0, 1, 2, 3, 4)], 5),
               Permutation.from_cycles([(0, 1, 2)], 5)])
    assert g.order() == 60
    assert len(elements(g)) == 60


def test_mixed_degree_generators_rejected():
    with pytest.raises(DegreeMismatchError):
        Group([perm("(1,2)", 2), perm("(1,2,3)", 3)])


def test_membership(a5):
    assert a5.contains(perm("(1,2,3)", 5))
    assert not a5.contains(perm("(1,2)", 5))
    c5 = group(5, "(1,2,3,4,5)")
    assert perm("(1,3,5,2,4)", 5) in c5


def test_mathieu_orders_and_capacity():
    assert build("M11").order() == 7920
    m12 = build("M12")
    assert m12.order() == 95040
    with pytest.raises(CapacityError, match="95040"):
        m12.elements(cap=10_000)


def test_chain_order_is_product_of_orbit_sizes():
    ch = StabilizerChain(11, [p.images for p in build("M11").generators])
    prod = 1
    for s in ch.orbit_sizes():
        prod *= s
    assert prod == ch.order() == 7920


def test_chain_agrees_with_table_membership():
    g = build("PSL2(7)")
    t = g.element_table()
    assert len(t.perms) == g.order()
    for i in range(t.order):
        assert g.chain.contains(t.perm(i).images)


def test_derived_subgroups(a5):
    assert derived_subgroup(group(6, "(1,2,3,4,5,6)")).order() == 1
    assert derived_subgroup(build("S(5)")).order() == 60
    assert derived_subgroup(a5).order() == 60


def test_soluble_with_series_report(a5):
    rep = derived_series(build("S(4)"))
    assert rep.orders == (24, 12, 4, 1)
    assert is_soluble(build("S(4)"))
    assert derived_series(a5).orders == (60, 60)
    assert not is_soluble(a5)
    assert is_soluble(trivial_group(3))


def test_nilpotent():
    assert is_nilpotent(dihedral(4))
    assert not is_nilpotent(build("S(3)"))
    assert not is_nilpotent(build("A(4)"))
    assert lower_central_series(build("A(4)")).orders == (12, 4, 4)


def test_metabelian():
    assert not is_metabelian(build("S(4)"))
    assert is_metabelian(build("S(3)"))
    assert is_metabelian(quaternion())


def test_metacyclic():
    assert is_metacyclic(dihedral(5))
    assert not is_metacyclic(group(6, "(1,2)", "(3,4)", "(5,6)"))
    assert is_metacyclic(quaternion())
    assert not is_metacyclic(build("A(4)"))


def test_abelian():
    assert is_abelian(group(6, "(1,2,3)", "(4,5)"))
    assert not is_abelian(build("S(3)"))


def test_soluble_radical(a5):
    assert soluble_radical(a5).order() == 1
    r = soluble_radical(build("SL2(5)"))
    assert r.order() == 2
    assert is_abelian(r)
    assert soluble_radical(build("S(4)")).order() == 24


def test_radical_is_maximal_by_definition():
    g = build("SL2(5)")
    t = g.element_table()
    r = {t.index_of(p) for p in soluble_radical(g).elements()}
    for x in range(t.order):
        if x in r:
            continue
        assert any(not is_soluble(Group([t.perm(x), t.perm(y)])) for y in range(t.order))


def test_quotients():
    s4 = build("S(4)")
    v4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    q, cmap = quotient_by(s4, v4)
    assert q.order() == 6
    assert not is_abelian(q)
    c = cmap(perm("(1,2)", 4))
    assert q.contains(c)
    same, _ = quotient_by(s4, trivial_group(4))
    assert same.order() == 24


def test_quotient_by_radical_has_trivial_radical():
    g = build("SL2(5)")
    q, _ = quotient_by(g, soluble_radical(g))
    assert q.order() == 60
    assert soluble_radical(q).order() == 1


def test_quotient_requires_normal_subgroup():
    with pytest.raises(NotNormalError):
        quotient_by(build("S(4)"), group(4, "(1,2)"))


def test_normal_closure(a5):
    assert normal_closure(a5, [perm("(1,2,3)", 5)]).order() == 60
    s4 = build("S(4)")
    assert normal_closure(s4, [perm("(1,2)(3,4)", 4)]).order() == 4


def test_products():
    a5 = build("A(5)")
    assert direct_product(a5, a5).group.order() == 3600
    k = build("S(3)")
    assert direct_product(trivial_group(1), k).group.order() == 6
    l28 = build("PSL2(8)")
    assert direct_product(l28, l28).group.order() == 254016
    assert wreath_s2(trivial_group(1)).order() == 2
    assert wreath_s2(build("S(3)")).order() == 72
    assert wreath_s2(a5).order() == 7200


def test_conjugacy_classes(a5):
    sizes = sorted(c.size for c in conjugacy_classes(a5))
    assert sizes == [1, 12, 12, 15, 20]
    assert len(conjugacy_classes(build("S(5)"))) == 7
    ab = group(6, "(1,2,3)", "(4,5)")
    assert all(c.size == 1 for c in conjugacy_classes(ab))


def test_class_representatives_are_least():
    for c in conjugacy_classes(build("S(4)")):
        assert c.representative == min(c.members)


def test_normalizers(a5):
    assert normalizer_of_cyclic(a5, perm("(1,2,3,4,5)", 5)).order() == 10
    ab = group(6, "(1,2,3)", "(4,5)")
    assert normalizer_of_cyclic(ab, perm("(1,2,3)", 6)).order() == 6
    assert normalizer_of_cyclic(build("S(7)"), perm("(1,2,3,4,5,6,7)", 7)).order() == 42
    assert centralizer_of(a5, perm("(1,2,3,4,5)", 5)).order() == 5
