import pytest

from solgraph.catalog import (
    GF, Alt, PSL2, Product, QuotientByRadical, Sym, WreathS2, build, data_path,
    irreducible_poly, load_generator_file, parse_generator_text, parse_spec, prime_power,
)
from solgraph.errors import GeneratorFileError, SpecSyntaxError, UnsupportedParameterError
from solgraph.permcore import Permutation, is_soluble, normal_closure, soluble_radical


def test_parse_simple_and_product():
    assert parse_spec("A(7)") == Alt(7)
    assert parse_spec("PSL2(8) x PSL2(8)") == Product(PSL2(8), PSL2(8))
    assert parse_spec("psl2(8)xPSL2(8)") == Product(PSL2(8), PSL2(8))


def test_products_are_left_associative():
    assert parse_spec("A(5) x A(5) x S(3)") == Product(Product(Alt(5), Alt(5)), Sym(3))


def test_wreath_and_radical_quotient():
    assert parse_spec("S(3) wr2") == WreathS2(Sym(3))
    assert parse_spec("radquot(SL2(5))").text() == "radquot(SL2(5))"
    assert isinstance(parse_spec("radquot(SL2(5))"), QuotientByRadical)


def test_syntax_error_reports_offset():
    with pytest.raises(SpecSyntaxError) as exc:
        parse_spec("A(5")
    assert exc.value.offset == 3
    assert "offset 3" in str(exc.value)


@pytest.mark.parametrize("text", ["", "B(5)", "A()", "A(5) x", "A(5))", "PSL2(x)"])
def test_malformed_specs(text):
    with pytest.raises(SpecSyntaxError):
        parse_spec(text)


@pytest.mark.parametrize("spec,order,degree", [
    ("PSL2(7)", 168, 8), ("PGL2(9)", 720, 10), ("M11", 7920, 11), ("M12", 95040, 12),
    ("A(7)", 2520, 7), ("S(6)", 720, 6), ("SL2(5)", 120, 24), ("PSL2(8)", 504, 9),
    ("PGammaL2_9", 1440, 10), ("M10", 720, 10), ("PSL2(27)", 9828, 28),
])
def test_build_orders(spec, order, degree):
    g = build(spec)
    assert g.order() == order
    assert g.degree == degree


def test_build_is_deterministic():
    a = build(parse_spec("PSL2(9)"))
    b = build("PSL2(9)")
    assert [p.images for p in a.generators] == [p.images for p in b.generators]


def test_pgl2_contains_psl2_with_gcd_index():
    for q in (5, 7, 8, 9, 11):
        small, big = build(f"PSL2({q})"), build(f"PGL2({q})")
        assert all(big.contains(p) for p in small.generators)
        assert big.order() // small.order() == (1 if q % 2 == 0 else 2)


def test_psl2_is_simple_at_desk_scale():
    for q in (4, 5, 7, 8, 9, 11, 13, 16):
        g = build(f"PSL2({q})")
        assert soluble_radical(g).order() == 1
        x = next(p for p in g.generators if not p.is_identity())
        assert normal_closure(g, [x]).order() == g.order()


def test_small_psl2_are_soluble():
    assert is_soluble(build("PSL2(2)"))
    assert is_soluble(build("PSL2(3)"))


def test_unsupported_parameters():
    with pytest.raises(UnsupportedParameterError):
        build("PSL2(6)")


def test_degree_ten_groups_contain_a6_with_index_two():
    a6 = build("PSL2(9)")
    for spec in ("M10", "PGL2(9)", "S(6)"):
        g = build(spec)
        assert g.order() == 720
        if g.degree == 10:
            assert all(g.contains(p) for p in a6.generators)
    assert build("PGammaL2_9").order() == 1440


def test_irreducible_polynomials():
    assert irreducible_poly(2, 3) == (1, 1, 0, 1)
    assert irreducible_poly(3, 3) == (1, 2, 0, 1)
    assert irreducible_poly(2, 2) == (1, 1, 1)


def test_field_axioms_spot_check():
    for q in (4, 8, 9, 25, 27):
        f = GF(q)
        w = f.primitive
        assert f.mult_order(w) == q - 1
        for a in range(1, q):
            assert f.mul(a, f.inv(a)) == 1
            assert f.pow(a, q - 1) == 1
        assert f.add(3 % q, f.neg(3 % q)) == 0
    assert prime_power(27) == (3, 3)
    assert prime_power(12) is None


def test_generator_text():
    (t,) = parse_generator_text("(1,2)")
    assert t == Permutation.parse("(1,2)", 2)
    gens = parse_generator_text("(1,2,3)(4,5)\n(1,4)(2,5)")
    assert [g.degree for g in gens] == [5, 5]


def test_generator_text_errors_name_the_line():
    with pytest.raises(GeneratorFileError, match="line 1"):
        parse_generator_text("(1,2,2)")
    with pytest.raises(GeneratorFileError, match="line 3"):
        parse_generator_text("# comment\n(1,2)\n(3,4")


def test_shipped_generator_files():
    assert build("file:" + data_path("l3_3_2.gens")).order() == 11232
    gens = load_generator_file(data_path("m11.gens"))
    assert len(gens) == 2 and gens[0].degree == 11


def test_user_generator_file(tmp_path):
    path = tmp_path / "s4.gens"
    path.write_text("# S4\n(1,2,3,4)\n(1,2)\n")
    g = build(f"file:{path}")
    assert g.order() == 24


def test_m10_is_the_third_index_two_overgroup_of_a6():
    top = build("PGammaL2_9")
    m10, pgl = build("M10"), build("PGL2(9)")
    a6 = build("PSL2(9)")
    for g in (m10, pgl):
        assert all(top.contains(p) for p in g.generators)
        assert all(g.contains(p) for p in a6.generators)
    assert not all(pgl.contains(p) for p in m10.generators)
    orders = {p.order() for p in m10.elements()}
    assert 6 not in orders and 10 not in orders
    assert {6, 10} & {p.order() for p in build("S(6)").elements()} == {6}
    assert 10 in {p.order() for p in pgl.elements()}
