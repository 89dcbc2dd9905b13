"""Property tests for the algebraic invariants the fast paths rely on."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from solgraph.catalog import build
from solgraph.certs import Certificate
from solgraph.permcore import Group, Permutation, conjugacy_classes, is_soluble, wreath_s2
from solgraph.suite import view_of

SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.function_scoped_fixture])


def permutations(n):
    return st.permutations(range(n)).map(Permutation)


@SETTINGS
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(permutations(n), permutations(n),
                                                     permutations(n))))
def test_group_axioms(ps):
    a, b, c = ps
    assert (a * b) * c == a * (b * c)
    assert (a * ~a).is_identity()
    assert ~(a * b) == ~b * ~a
    assert a.conj(b * c) == a.conj(b).conj(c)
    assert Permutation.parse(a.cycle_string(), a.degree) == a


@SETTINGS
@given(st.integers(1, 9).flatmap(permutations))
def test_order_is_lcm_of_cycle_lengths(p):
    assert (p ** p.order()).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order()))


@SETTINGS
@given(st.integers(3, 7).flatmap(lambda n: st.lists(permutations(n), min_size=1, max_size=3)))
def test_chain_order_matches_closure(gens):
    g = Group(gens)
    # closure by breadth-first multiplication
    seen = {Permutation.identity(gens[0].degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    assert g.order() == len(seen)
    assert all(g.contains(x) for x in seen)


@SETTINGS
@given(st.integers(3, 6).flatmap(lambda n: st.lists(permutations(n), min_size=1, max_size=2)))
def test_class_sizes_divide_order(gens):
    g = Group(gens)
    classes = conjugacy_classes(g)
    assert sum(c.size for c in classes) == g.order()
    assert all(g.order() % c.size == 0 for c in classes)


SPECS = ["A(5)", "A(6)", "PSL2(7)", "S(5)", "M10"]


@SETTINGS
@given(st.sampled_from(SPECS), st.data())
def test_adjacency_invariant_under_inversion_and_conjugation(spec, data):
    v = view_of(spec)
    t = v.table
    i = data.draw(st.sampled_from(v.vertices.tolist()))
    j = data.draw(st.sampled_from(v.vertices.tolist()))
    g = data.draw(st.integers(0, t.order - 1))
    if i == j:
        return
    a = v.adjacent(i, j)
    assert a == v.adjacent(int(t.inv[i]), int(t.inv[j]))
    assert a == v.adjacent(t.conj(i, g), t.conj(j, g))
    assert a == v.adjacent(j, i)
    assert a == is_soluble(Group([t.perm(i), t.perm(j)]))


@SETTINGS
@given(st.sampled_from(SPECS), st.data())
def test_eccentricity_is_a_class_function(spec, data):
    v = view_of(spec)
    t = v.table
    i = data.draw(st.sampled_from(v.vertices.tolist()))
    g = data.draw(st.integers(0, t.order - 1))
    assert v.eccentricity(i) == v.eccentricity(t.conj(i, g))
    j = data.draw(st.sampled_from(v.vertices.tolist()))
    assert v.distance(i, j) == v.distance(t.conj(i, g), t.conj(j, g)) == v.distance(j, i)


@SETTINGS
@given(st.sampled_from(SPECS), st.data())
def test_balls_grow_and_are_closed(spec, data):
    v = view_of(spec)
    i = data.draw(st.sampled_from(v.vertices.tolist()))
    b1 = set(v.ball(i, 1).vertex_ids.tolist())
    b2 = set(v.ball(i, 2).vertex_ids.tolist())
    assert b1 <= b2
    for k in b1:
        x = v.vertex(k)
        assert x == v.vertex(v.vertex_index(x))
        assert set(v.ball(x, 1).vertex_ids.tolist()) <= b2


@SETTINGS
@given(st.dictionaries(st.text(min_size=1, max_size=5),
                       st.one_of(st.integers(-10**20, 10**20), st.text(max_size=8),
                                 st.lists(st.integers(0, 1000), max_size=5)), max_size=4),
       st.integers(0, 2**64 - 1), st.booleans())
def test_certificate_serialisation_round_trips(witness, seed, flag):
    c = Certificate("LB4", "M12", witness, seed, flag)
    text = c.to_json()
    assert Certificate.from_json(text) == c
    assert Certificate.from_json(text).to_json() == text


def test_wreath_and_product_orders():
    for spec in ("S(3)", "A(4)", "S(4)"):
        h = build(spec)
        assert wreath_s2(h).order() == 2 * h.order() ** 2
        assert build(f"{spec} x {spec}").order() == h.order() ** 2


def test_element_table_is_sorted_with_identity_first():
    t = build("PSL2(8)").element_table()
    imgs = np.array([t.perm(i).images for i in range(t.order)])
    assert t.perm(0).is_identity()
    keys = [tuple(r) for r in imgs]
    assert keys == sorted(keys)
