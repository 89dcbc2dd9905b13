import pytest

from solgraph.catalog import build
from solgraph.graph import GraphView
from solgraph.oracles import brute_force_is_soluble, naive_adjacency, naive_diameter
from solgraph.permcore import is_soluble


def test_naive_adjacency_matches_class_reduced(view):
    for spec in ("A(5)", "PSL2(7)", "S(5)"):
        v = view(spec)
        assert (naive_adjacency(v) == v.adjacency_matrix()).all()


@pytest.mark.parametrize("spec,kind", [("A(5)", "soluble"), ("A(4)", "nilpotent"),
                                       ("SL2(3)", "metabelian"), ("A(5)", "abelian")])
def test_naive_diameter(spec, kind):
    v = GraphView(build(spec), kind)
    assert naive_diameter(v) == v.diameter()


def test_naive_diameter_capacity(view):
    with pytest.raises(ValueError):
        naive_diameter(view("M11"))


@pytest.mark.parametrize("spec", ["S(3)", "S(4)", "SL2(3)", "A(5)", "SL2(5)", "S(3)wr2",
                                  "A(4)xA(4)", "PGL2(7)"])
def test_brute_force_solubility(spec):
    g = build(spec)
    assert brute_force_is_soluble(g) == is_soluble(g)
