import pytest

from solgraph.errors import DegreeMismatchError
from solgraph.permcore import Permutation, parse_cycle_string


def test_parse_and_print_round_trip():
    p = Permutation.parse("(1,2,3)(4,5)")
    assert p.degree == 5
    assert p.cycle_string() == "(1,2,3)(4,5)"
    assert Permutation.parse(p.cycle_string(), 5) == p


def test_identity_prints_as_empty_cycle():
    e = Permutation.identity(4)
    assert e.cycle_string() == "()"
    assert e.is_identity()
    assert Permutation.parse("()", 4) == e


def test_right_action_product():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(2,3)", 3)
    # apply a first, then b
    assert (a * b)(0) == 2
    assert a * b == Permutation.parse("(1,3,2)", 3)


def test_inverse_order_and_power():
    p = Permutation.parse("(1,2,3,4)(5,6)")
    assert p.order() == 4
    assert (p * ~p).is_identity()
    assert p ** 4 == Permutation.identity(6)
    assert p ** -1 == p.inverse()


def test_conjugation_and_commutator():
    x = Permutation.parse("(1,2,3)", 4)
    g = Permutation.parse("(3,4)", 4)
    assert x.conj(g) == ~g * x * g
    assert x.conj(g) == Permutation.parse("(1,2,4)", 4)
    assert x.commutator(g) == ~x * ~g * x * g


def test_degree_mismatch_is_an_error():
    with pytest.raises(DegreeMismatchError):
        Permutation.parse("(1,2)", 2) * Permutation.parse("(1,2)", 3)


def test_cycles_start_at_least_point():
    p = Permutation.parse("(3,1,2)(5,4)")
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.support() == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("text", ["(1,2,2)", "(1,2", "(1,2)(2,3)", "(0,1)", "(a,b)"])
def test_bad_cycle_strings(text):
    with pytest.raises(ValueError):
        Permutation.parse(text, 5)


def test_parse_cycle_string_is_zero_based():
    assert parse_cycle_string("(1,3)(2,4,5)") == [[0, 2], [1, 3, 4]]


def test_ordering_is_lexicographic_on_images():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(2,3)", 3)
    assert sorted([a, b, Permutation.identity(3)])[0].is_identity()
    assert b < a
