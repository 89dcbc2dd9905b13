"""Tiered acceptance checks, shared by the `suite` command and the test suite.

Each check returns (passed, detail).  Tiers are cumulative: medium runs the
fast checks too, slow runs everything.  Numba kernels are compiled (or loaded
from the on-disk cache) by `warm_up` before any timed check starts, so time
limits measure computation rather than compilation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .catalog import build, data_path
from .certs import (
    Certificate, NotFound, base_two_search, find_lb3, find_lb4, involution_distances,
    largest_prime_normalizer, normalizer_parity_report, sophie_bound, sweep_upper_bound, verify,
)
from .errors import NotSophieGermainError
from .graph import GraphView
from .intgraph import dual_pair_check, soluble_intersection_graph
from .oracles import brute_force_is_soluble, naive_diameter
from .permcore import Permutation, is_soluble, quotient_by, soluble_radical

TIERS = ("fast", "medium", "slow")
TIER_CAPS = {"fast": 2520, "medium": 11232, "slow": 100_000}

SOPHIE_PRIMES = (5, 11, 23, 29, 41, 53, 83, 89, 113, 131, 173, 179, 191)

# Orders of the L2(27) metacyclic census as stated in the literature remark:
# 28 components of 3 elements plus 743 further elements.
REMARK_COMPONENTS = (28, 3, 743)


@dataclass(frozen=True)
class Check:
    key: str
    criterion: int
    title: str
    tier: str
    run: Callable[[], tuple[bool, str]]
    seconds: float | None = None


@dataclass(frozen=True)
class CheckResult:
    key: str
    criterion: int
    title: str
    tier: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  [{self.key:>3}] {self.title}: {self.detail} ({self.elapsed:.1f}s)"


@lru_cache(maxsize=32)
def view_of(spec: str, kind: str = "soluble") -> GraphView:
    return GraphView(build(spec), kind, cap=TIER_CAPS["slow"])


def expected_psl2_diameter(q: int, full: bool) -> int:
    """2 when PGL2(q) <= G or q in {5, 7}, else 3.  For even q, PSL2 = PGL2."""
    return 2 if full or q in (5, 7) or q % 2 == 0 else 3


def warm_up() -> None:
    """Compile every kernel on a tiny group."""
    v = GraphView(build("A(5)"))
    v.diameter()
    v.components()
    v.is_cograph()
    naive_diameter(v)
    brute_force_is_soluble(build("A(5)"))
    involution_distances(v)
    find_lb3(v, spec="A(5)")
    for kind in ("abelian", "nilpotent", "metabelian", "metacyclic"):
        GraphView(build("A(5)"), kind).diameter()


# -- individual checks -------------------------------------------------------

def _diameters(expect: dict[str, int]) -> tuple[bool, str]:
    got = {s: view_of(s).diameter() for s in expect}
    bad = {s: v for s, v in got.items() if v != expect[s]}
    detail = ", ".join(f"{s}={v}" for s, v in got.items())
    if bad:
        detail += f"; mismatched {sorted(bad)}"
    return not bad, detail


def check_socle_a5_a6() -> tuple[bool, str]:
    return _diameters({"A(5)": 2, "S(5)": 2, "PGL2(9)": 2, "PGammaL2_9": 2,
                       "A(6)": 3, "S(6)": 3, "M10": 3})


def check_psl2_family() -> tuple[bool, str]:
    expect = {}
    for q in (5, 7, 8, 9, 11, 13):
        expect[f"PSL2({q})"] = expected_psl2_diameter(q, False)
        expect[f"PGL2({q})"] = expected_psl2_diameter(q, True)
    return _diameters(expect)


def check_small_groups() -> tuple[bool, str]:
    expect = {"A(7)": 3}
    for q in (5, 7, 8, 9, 11, 13):
        expect[f"PSL2({q})"] = expected_psl2_diameter(q, False)
    ok, detail = _diameters(expect)
    spec = "file:" + data_path("l3_3_2.gens")
    g = build(spec)
    d = GraphView(g).diameter()
    ok = ok and g.order() == 11232 and d == 2
    return ok, f"{detail}, L3(3).2 (order {g.order()}, from generator file)={d}"


def check_m11() -> tuple[bool, str]:
    return _diameters({"M11": 3})


def check_m12() -> tuple[bool, str]:
    """Lower bound by an LB4 certificate, upper bound by normalizer parity
    plus sweeps from the classes with odd normalizer order, cross-checked
    against the exact diameter."""
    v = view_of("M12")
    cert = find_lb4(v, seed=1, spec="M12")
    lower = bool(cert) and verify(cert)
    report = normalizer_parity_report(v.group)
    odd = [row for row in report.rows if not row.even]
    sweeps = [sweep_upper_bound(v, Permutation.parse(row.representative, 12), 4)
              for row in odd]
    upper = all(s.holds for s in sweeps)
    exact = v.diameter()
    ok = lower and upper and exact == 4
    detail = (f"LB4 {'verified' if lower else 'missing'}, "
              f"{len(odd)} odd-normalizer classes swept at bound 4: "
              f"{'all within' if upper else 'FAILED'}, exact diameter {exact}")
    return ok, detail


def check_radical_quotient() -> tuple[bool, str]:
    g = build("SL2(5)")
    r = soluble_radical(g)
    q, _ = quotient_by(g, r)
    dq = GraphView(q).diameter()
    dg = view_of("SL2(5)").diameter()
    da = view_of("A(5)").diameter()
    ok = r.order() == 2 and q.order() == 60 and dq == dg == da == 2
    return ok, f"|R|={r.order()}, |G/R|={q.order()}, diam G/R={dq}, diam G={dg}, diam A5={da}"


def check_involution_distance(specs) -> tuple[bool, str]:
    worst = {}
    ok = True
    for s in specs:
        v = view_of(s)
        d = involution_distances(v, max_depth=3)
        nontrivial = d[1:]
        all_vertices = len(v.isolated_ids) == 1
        m = int(nontrivial.max()) if (nontrivial >= 0).all() else -1
        worst[s] = m
        ok = ok and all_vertices and 0 <= m <= 2
    return ok, "max " + ", ".join(f"{s}={m}" for s, m in worst.items())


def check_variant_components() -> tuple[bool, str]:
    a4 = GraphView(build("A(4)"), "nilpotent")
    sizes = a4.component_sizes()
    sl = GraphView(build("SL2(3)"), "metabelian")
    ok = sorted(sizes) == [2, 2, 2, 2, 3] and sl.vertex_count == 22 and len(sl.components()) == 5
    return ok, (f"A4 nilpotent components {sizes}; SL(2,3) metabelian "
                f"{sl.vertex_count} vertices, {len(sl.components())} components")


def check_metacyclic_connected(specs) -> tuple[bool, str]:
    counts = {s: len(view_of(s, "metacyclic").components()) for s in specs}
    return all(c == 1 for c in counts.values()), ", ".join(f"{s}: {c} component(s)"
                                                          for s, c in counts.items())


def l2_27_census() -> dict:
    v = view_of("PSL2(27)", "metacyclic")
    sizes = v.component_sizes()
    census: dict[int, int] = {}
    for s in sizes:
        census[s] = census.get(s, 0) + 1
    n, k, rest = REMARK_COMPONENTS
    return {
        "vertices": v.vertex_count,
        "components": len(sizes),
        "census": dict(sorted(census.items(), reverse=True)),
        "remark_total": n * k + rest,
        "nonidentity_elements": v.table.order - 1,
    }


def check_metacyclic_l2_27() -> tuple[bool, str]:
    c = l2_27_census()
    census = ", ".join(f"{cnt}x{size}" for size, cnt in c["census"].items())
    flag = ("remark arithmetic consistent" if c["remark_total"] == c["nonidentity_elements"]
            else f"remark counts sum to {c['remark_total']}, not {c['nonidentity_elements']} (flagged)")
    return c["components"] > 1, f"{c['components']} components [{census}]; {flag}"


def check_cograph(specs) -> tuple[bool, str]:
    ok = True
    parts = []
    for s in specs:
        v = view_of(s)
        res = v.is_cograph()
        w = res.witness
        induced = False
        if w is not None:
            a, b, c, d = w
            adj = v.adjacent
            induced = (adj(a, b) and adj(b, c) and adj(c, d)
                       and not adj(a, c) and not adj(a, d) and not adj(b, d))
        cd = v.complement_diameter()
        ok = ok and not res.is_cograph and induced and cd == 2
        parts.append(f"{s}: P4 {'found' if induced else 'missing'}, complement diameter {cd}")
    return ok, "; ".join(parts)


def check_intersection_a5() -> tuple[bool, str]:
    ig = soluble_intersection_graph(build("A(5)"))
    comps = ig.components()
    d = ig.diameter()
    rep = dual_pair_check(build("A(5)"), view_of("A(5)"))
    ok = ig.vertex_count == 57 and len(comps) == 1 and d <= 6 and rep.holds
    return ok, (f"Int_S(A5): {ig.vertex_count} vertices, {len(comps)} component(s), "
                f"diameter {d}; soluble graph diameter {rep.soluble_graph_diameter}")


def check_dual_pairs(specs) -> tuple[bool, str]:
    parts = []
    ok = True
    for s in specs:
        rep = dual_pair_check(build(s), view_of(s))
        ok = ok and rep.holds
        parts.append(f"{s}: {rep.soluble_graph_diameter} vs {rep.intersection_graph_diameter}")
    return ok, "; ".join(parts)


def check_sophie() -> tuple[bool, str]:
    reports = [sophie_bound(p) for p in SOPHIE_PRIMES]
    ok = all(r.holds for r in reports)
    errors = 0
    for p in (7, 13):
        try:
            sophie_bound(p)
        except NotSophieGermainError:
            errors += 1
    return ok and errors == 2, (f"bound holds for {sum(r.holds for r in reports)}/"
                                f"{len(reports)} primes, p=7 and p=13 rejected: {errors == 2}")


# -- certificate soundness -----------------------------------------------------

def _tamper_lower_bound(cert: Certificate) -> list[Certificate]:
    w = cert.witness
    out = []
    # g replaced by the identity: y = x, so the balls meet
    out.append(Certificate(cert.kind, cert.spec, {**w, "g": "()", "y": w["x"]}, cert.prng_seed))
    # y no longer x^g
    out.append(Certificate(cert.kind, cert.spec, {**w, "y": w["x"]}, cert.prng_seed))
    # a ball with a member dropped
    out.append(Certificate(cert.kind, cert.spec, {**w, "ball_x": w["ball_x"][1:]}, cert.prng_seed))
    return out


def _tamper_base2(cert: Certificate) -> list[Certificate]:
    w = cert.witness
    return [Certificate("Base2", cert.spec, {**w, "c": w["subgroup"][0]}, cert.prng_seed),
            Certificate("Base2", cert.spec, {**w, "c": "()"}, cert.prng_seed)]


def certificate_runs(tier: str) -> list[tuple[str, str, int]]:
    """The 100 (operation, spec, seed) runs of the soundness check."""
    if tier == "fast":
        lb3 = ["A(6)", "S(6)", "M10", "A(7)", "PSL2(11)", "PSL2(13)"]
        lb4 = ["A(6)", "A(7)", "PSL2(11)"]
        b2 = ["S(7)", "A(7)", "PSL2(11)", "PSL2(13)", "S(6)"]
    else:
        lb3 = ["A(6)", "S(6)", "M10", "A(7)", "PSL2(11)", "M11"]
        lb4 = ["A(6)", "A(7)", "M11"]
        b2 = ["S(7)", "A(7)", "PSL2(11)", "M11", "S(6)"]
    runs = [("lb3", s, seed) for s in lb3 for seed in range(1, 9)]
    runs += [("lb4", s, seed) for s in lb4 for seed in range(1, 5)]
    runs += [("base2", s, seed) for s in b2 for seed in range(1, 9)]
    return runs


LB4_BUDGET = 200


def run_certificate(op: str, spec: str, seed: int):
    if op == "base2":
        g = build(spec)
        return base_two_search(g, largest_prime_normalizer(g), seed, spec=spec)
    v = view_of(spec)
    if op == "lb3":
        return find_lb3(v, seed, spec=spec, exhaustive=False)
    return find_lb4(v, seed, LB4_BUDGET, spec=spec)


def check_certificate_soundness(tier: str) -> tuple[bool, str]:
    runs = certificate_runs(tier)
    found = sound = tampered = rejected = 0
    for op, spec, seed in runs:
        cert = run_certificate(op, spec, seed)
        if isinstance(cert, NotFound):
            continue
        found += 1
        sound += verify(cert)
        bad = _tamper_base2(cert) if op == "base2" else _tamper_lower_bound(cert)
        tampered += len(bad)
        rejected += sum(not verify(b) for b in bad)
    # determinism: the same inputs give byte-identical certificates
    op, spec, seed = runs[0]
    same = run_certificate(op, spec, seed).to_json() == run_certificate(op, spec, seed).to_json()
    ok = len(runs) == 100 and found > 0 and sound == found and rejected == tampered and same
    return ok, (f"{len(runs)} runs, {found} certificates, {sound} verified, "
                f"{rejected}/{tampered} tampered rejected, deterministic: {same}")


# -- oracle equivalence ----------------------------------------------------------

ORACLE_FAST = [("A(5)", "soluble"), ("S(5)", "soluble"), ("A(6)", "soluble"),
               ("S(6)", "soluble"), ("M10", "soluble"), ("PGL2(9)", "soluble"),
               ("SL2(5)", "soluble"), ("PSL2(7)", "soluble"), ("PSL2(8)", "soluble"),
               ("PGL2(7)", "soluble"), ("radquot(SL2(5))", "soluble"),
               ("A(4)", "nilpotent"), ("SL2(3)", "metabelian"), ("S(4)", "nilpotent"),
               ("A(5)", "abelian"), ("A(5)", "nilpotent"), ("PSL2(7)", "metacyclic"),
               ("A(6)", "metabelian")]
ORACLE_MEDIUM = [("PGammaL2_9", "soluble"), ("PSL2(11)", "soluble"), ("PSL2(13)", "soluble"),
                 ("PGL2(11)", "soluble"), ("PGL2(13)", "soluble"), ("A(7)", "soluble")]
SOLUBILITY_CORPUS = ["S(3)", "A(4)", "S(4)", "SL2(3)", "PGL2(3)", "A(5)", "S(5)", "SL2(5)",
                     "A(6)", "S(6)", "M10", "PGL2(9)", "PGammaL2_9", "PSL2(7)", "SL2(7)",
                     "PSL2(8)", "PGL2(7)", "PSL2(11)", "PGL2(11)", "PSL2(13)", "SL2(4)",
                     "A(4)xA(4)", "S(3)wr2", "S(4)wr2", "A(5)xS(3)", "radquot(SL2(5))"]


def check_oracles(tier: str) -> tuple[bool, str]:
    cases = ORACLE_FAST + (ORACLE_MEDIUM if tier != "fast" else [])
    bad = []
    for spec, kind in cases:
        v = view_of(spec, kind)
        if v.diameter() != naive_diameter(v):
            bad.append(f"{spec}/{kind}")
    sol_bad = []
    for spec in SOLUBILITY_CORPUS:
        g = build(spec)
        if g.order() <= 2000 and is_soluble(g) != brute_force_is_soluble(g):
            sol_bad.append(spec)
    ok = not bad and not sol_bad
    detail = (f"{len(cases) - len(bad)}/{len(cases)} diameters agree, "
              f"{len(SOLUBILITY_CORPUS) - len(sol_bad)}/{len(SOLUBILITY_CORPUS)} solubility tests agree")
    if not ok:
        detail += f"; disagreements {bad + sol_bad}"
    return ok, detail


# -- registry ----------------------------------------------------------------------

INVOLUTION_GROUPS = ["A(5)", "A(6)", "A(7)", "S(5)", "S(6)", "S(7)", "PSL2(7)",
                     "PSL2(8)", "PSL2(11)", "M11"]


def _registry() -> list[Check]:
    return [
        Check("1", 1, "A5/A6 socle diameters", "fast", check_socle_a5_a6, 60),
        Check("2", 2, "PSL2/PGL2 diameters, q <= 13", "medium", check_psl2_family, 600),
        Check("3", 3, "A7, PSL2(q), L3(3).2 diameters", "medium", check_small_groups),
        Check("4a", 4, "M11 diameter", "medium", check_m11),
        Check("4b", 4, "M12 diameter 4 by certificate and sweep", "slow", check_m12),
        Check("5", 5, "radical quotient of SL(2,5)", "fast", check_radical_quotient, 30),
        Check("6", 6, "involution distance <= 2", "medium",
              lambda: check_involution_distance(INVOLUTION_GROUPS)),
        Check("7", 7, "nilpotent A4 and metabelian SL(2,3) components", "fast",
              check_variant_components, 10),
        Check("8a", 8, "metacyclic graphs connected", "medium",
              lambda: check_metacyclic_connected(["A(5)", "A(6)", "PSL2(7)", "PSL2(8)"])),
        Check("8b", 8, "metacyclic graph of L2(27) disconnected", "medium",
              check_metacyclic_l2_27),
        Check("9", 9, "induced P4 and complement diameter", "fast",
              lambda: check_cograph(["A(5)", "A(6)", "PSL2(7)"])),
        Check("10a", 10, "soluble intersection graph of A5", "fast", check_intersection_a5),
        Check("10b", 10, "dual pairs for A6 and L2(7)", "medium",
              lambda: check_dual_pairs(["A(6)", "PSL2(7)"])),
        Check("11", 11, "counting bound for Sophie Germain primes", "fast", check_sophie, 1),
        Check("12", 12, "certificate soundness", "fast",
              lambda: check_certificate_soundness("fast")),
        Check("12m", 12, "certificate soundness including M11", "medium",
              lambda: check_certificate_soundness("medium")),
        Check("13", 13, "oracle equivalence, order <= 720", "fast",
              lambda: check_oracles("fast")),
        Check("13m", 13, "oracle equivalence, order <= 2520", "medium",
              lambda: check_oracles("medium")),
    ]


CHECKS = _registry()


def checks_for(tier: str) -> list[Check]:
    if tier not in TIERS:
        raise ValueError(f"unknown suite {tier!r}; expected one of {', '.join(TIERS)}")
    level = TIERS.index(tier)
    chosen = [c for c in CHECKS if TIERS.index(c.tier) <= level]
    keys = {c.key for c in chosen}
    # a medium variant ("12m") replaces its fast counterpart ("12")
    return [c for c in chosen if c.key + "m" not in keys]


def run_check(check: Check) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = check.run()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if ok and check.seconds is not None and elapsed > check.seconds:
        ok, detail = False, f"{detail}; exceeded {check.seconds}s"
    return CheckResult(check.key, check.criterion, check.title, check.tier, ok, detail, elapsed)


def run_suite(tier: str, report: Callable[[str], None] | None = print) -> list[CheckResult]:
    checks = checks_for(tier)
    warm_up()
    results = []
    for c in checks:
        r = run_check(c)
        if report is not None:
            report(r.line())
        results.append(r)
    return results
