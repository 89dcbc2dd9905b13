import json

import pytest

from conftest import perm
from solgraph.catalog import build
from solgraph.certs import (
    Certificate, NotFound, SplitMix64, base_two_search, check, find_lb3, find_lb4,
    involution_distance, involution_distance_certificate, largest_prime_normalizer,
    normalizer_parity_report, sophie_bound, sophie_certificate, sweep_upper_bound, verify,
)
from solgraph.certs.verify import _Direct
from solgraph.errors import NoInvolutionError, NotSophieGermainError
from solgraph.graph import GraphView
from solgraph.permcore import Group, trivial_group


def test_splitmix_reference_values():
    # first outputs for seed 0 of the published SplitMix64 generator
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_prng_below_is_in_range_and_seeded():
    a = [SplitMix64(7).below(10) for _ in range(3)]
    assert a == [SplitMix64(7).below(10)] * 3
    rng = SplitMix64(3)
    assert all(0 <= rng.below(13) < 13 for _ in range(200))


def test_certificate_json_round_trip():
    c = Certificate("LB3", "A(7)", {"x": "(1,2,3)", "ball_x": [3, 1]}, 2 ** 64 - 1)
    text = c.to_json()
    assert Certificate.from_json(text) == c
    assert Certificate.from_json(text).to_json() == text
    assert list(json.loads(text)) == sorted(json.loads(text))


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        Certificate("LB5", "A(5)")


def test_lb3_found_for_a7_and_verified(view):
    c = find_lb3(view("A(7)"), seed=1, spec="A(7)")
    assert c
    assert perm(c.witness["x"], 7).order() == 7
    assert verify(c)


def test_lb3_for_m11(view):
    c = find_lb3(view("M11"), seed=1, spec="M11")
    assert c and verify(c)


def test_lb3_not_found_for_a5_exhaustively(view):
    c = find_lb3(view("A(5)"), spec="A(5)")
    assert isinstance(c, NotFound)
    assert not c


def test_tampered_lb3_fails(view):
    c = find_lb3(view("A(7)"), seed=1, spec="A(7)")
    bad = Certificate("LB3", "A(7)", {**c.witness, "g": "()", "y": c.witness["x"]}, 1)
    assert not verify(bad)
    bad = Certificate("LB3", "A(7)", {**c.witness, "g": "(1,2,3)"}, 1)
    res = check(bad)
    assert not res and res.reason


def test_lb4_not_found_below_diameter_four(view):
    for spec in ("A(5)", "A(6)"):
        assert not find_lb4(view(spec), spec=spec)
    assert not find_lb4(view("A(7)"), budget=300, spec="A(7)")


def test_search_is_deterministic(view):
    a = find_lb3(view("PSL2(11)"), seed=9, spec="PSL2(11)", exhaustive=False)
    b = find_lb3(view("PSL2(11)"), seed=9, spec="PSL2(11)", exhaustive=False)
    assert a.to_json() == b.to_json()


def test_exhaustive_lb3_agrees_with_diameter(view):
    for spec in ("A(5)", "S(5)", "A(6)", "PSL2(7)", "PSL2(8)", "PSL2(11)", "S(6)", "PGL2(9)"):
        found = bool(find_lb3(view(spec), spec=spec, exhaustive=True))
        assert found == (view(spec).diameter() >= 3)


def test_base_two_for_s7_agl17():
    s7 = build("S(7)")
    agl = Group([perm("(1,2,3,4,5,6,7)", 7), perm("(2,4,3,7,5,6)", 7)])
    c = base_two_search(s7, agl, seed=1, spec="S(7)")
    assert c and verify(c)
    assert largest_prime_normalizer(s7).order() == 42


def test_base_two_trivial_subgroup_uses_identity():
    c = base_two_search(build("A(5)"), trivial_group(5), spec="A(5)")
    assert c.witness["c"] == "()"


def test_base_two_normal_subgroup_never_found():
    c = base_two_search(build("S(4)"), build("A(4)"), budget=500, spec="S(4)")
    assert not c and c.attempts == 501


def test_involution_distance(view):
    v = view("A(7)")
    assert involution_distance(v, perm("(1,2)(3,4)", 7)) == 0
    assert involution_distance(v, perm("(1,2,3,4,5,6,7)", 7)) <= 2
    c = involution_distance_certificate(v, spec="A(7)")
    assert c.witness["max_distance"] <= 2
    assert verify(c)


def test_no_involutions_is_an_error():
    g = build("A(4)")
    v = GraphView(g, "abelian")
    f21 = Group([perm("(1,2,3,4,5,6,7)", 7), perm("(2,3,5)(4,7,6)", 7)])
    assert f21.order() == 21
    with pytest.raises(NoInvolutionError):
        involution_distance(GraphView(f21, "abelian"), perm("(1,2,3,4,5,6,7)", 7))
    assert involution_distance(v, perm("(1,2)(3,4)", 4)) == 0


def test_parity_reports():
    s7 = normalizer_parity_report(build("S(7)"))
    assert s7.all_real and s7.bound == 3
    # elements of order 11 in M11 have normalizer 11:5 of odd order
    m11 = normalizer_parity_report(build("M11"))
    odd = [r for r in m11.rows if not r.even]
    assert {(r.element_order, r.normalizer_order) for r in odd} == {(11, 55)}
    assert m11.bound is None
    a6 = normalizer_parity_report(build("A(6)"))
    assert a6.all_even


def test_sophie_bound_exact_values():
    r = sophie_bound(5)
    assert r.holds
    assert r.beta == 304
    assert r.total_bound == 671010
    assert r.target == 3628800
    assert sophie_bound(11).holds
    assert sophie_bound(191).target > 10 ** 700


@pytest.mark.parametrize("p", [7, 13, 2, 9])
def test_sophie_rejects_non_sophie_germain(p):
    with pytest.raises(NotSophieGermainError):
        sophie_bound(p)


def test_sophie_certificate_verifies():
    c = sophie_certificate(23)
    assert verify(c)
    bad = Certificate("SophieBound", c.spec, {**c.witness, "beta": "1"}, 0)
    assert not verify(bad)


def test_sweep_upper_bound(view):
    v = view("A(6)")
    x = perm("(1,2,3,4,5)", 6)
    assert v.eccentricity(x) == 3
    assert not sweep_upper_bound(v, x, 2).holds
    assert sweep_upper_bound(v, x, 4).holds
    with pytest.raises(ValueError):
        sweep_upper_bound(v, x, 3)


def test_wrong_format_version_rejected(view):
    c = find_lb3(view("A(7)"), seed=1, spec="A(7)")
    d = c.to_dict()
    d["format_version"] = 99
    assert not verify(Certificate.from_dict(d))


@pytest.mark.parametrize("spec", ["A(7)", "PSL2(11)", "S(6)"])
def test_sweep_agrees_with_eccentricity(view, spec):
    v = view(spec)
    for rep, ecc in v.eccentricities().items():
        for bound in (2, 4):
            assert sweep_upper_bound(v, rep, bound).holds == (ecc <= bound)


@pytest.mark.parametrize("spec", ["A(5)", "S(6)", "PSL2(11)", "SL2(5)", "A(7)"])
def test_direct_neighbourhood_matches_plain_scan(spec):
    d = _Direct(build(spec))
    for x in range(1, d.t.order, max(1, d.t.order // 13)):
        plain = {z for z in range(1, d.t.order) if d.soluble_pair(x, z)}
        assert d.neighbourhood(x) == plain
