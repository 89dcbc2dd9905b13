"""Command-line interface.

    solgraph diameter SPEC [--kind K] [--tier T]
    solgraph ball SPEC ELEMENT RADIUS [--members]
    solgraph certify SPEC {lb3,lb4,base2} [--seed N] [--budget N] [--subgroup GENS]
    solgraph verify CERT.json
    solgraph suite {fast,medium,slow}

Every command prints one canonical JSON document (a run result) on stdout
and optionally writes it to --json PATH.  Results of diameter, ball and
certify are cached under $SOLGRAPH_CACHE_DIR (default ~/.cache/solgraph).

Exit codes: 0 success, 2 usage error (including soluble input and bad
specs), 3 capacity exceeded, 4 verification failure, 5 not found.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import build, parse_spec
from .certs import (
    DEFAULT_BUDGET, FORMAT_VERSION, Certificate, NotFound, base_two_search, check,
    find_lb3, find_lb4, largest_prime_normalizer,
)
from .errors import CapacityError, SolgraphError
from .graph import GraphView, PredicateKind, fmt_value
from .permcore import Group, Permutation
from .suite import TIER_CAPS, TIERS, run_suite

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_VERIFY, EXIT_NOT_FOUND = 0, 2, 3, 4, 5
CACHE_ENV = "SOLGRAPH_CACHE_DIR"
DEFAULT_CACHE = Path.home() / ".cache" / "solgraph"


class UsageError(Exception):
    pass


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def cache_key(spec: str, kind: str, op: str, params: dict) -> str:
    blob = json.dumps([spec, kind, op, params, FORMAT_VERSION], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_load(key: str) -> dict | None:
    path = cache_dir() / f"{key}.json"
    try:
        return json.loads(path.read_text())
    except (OSError, ValueError):
        return None


def _cache_store(key: str, data: dict) -> None:
    d = cache_dir()
    try:
        d.mkdir(parents=True, exist_ok=True)
        tmp = d / f"{key}.json.tmp"
        tmp.write_text(json.dumps(data, sort_keys=True))
        tmp.replace(d / f"{key}.json")
    except OSError:
        pass  # caching is best effort


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run_result(command: list[str], spec: str | None, results: dict, certificates: list,
               seconds: float, seed: int | None) -> dict:
    return {
        "command": command,
        "spec": spec,
        "results": results,
        "certificates": certificates,
        "timing": {"seconds": round(seconds, 6)},
        "seed": seed,
        "format_version": FORMAT_VERSION,
    }


def _load_group(spec: str, tier: str) -> Group:
    try:
        parse_spec(spec)
    except SolgraphError as exc:
        raise UsageError(str(exc)) from exc
    g = build(spec)
    cap = TIER_CAPS[tier]
    if g.order() > cap:
        raise CapacityError(f"group order for tier {tier!r}", g.order(), cap)
    return g


def _view(spec: str, kind: str, tier: str, workers: int) -> GraphView:
    return GraphView(_load_group(spec, tier), kind, TIER_CAPS[tier], workers=workers)


def _cached(args, op: str, params: dict, compute) -> tuple[dict, list, bool]:
    key = cache_key(args.spec, args.kind, op, params)
    hit = None if args.no_cache else _cache_load(key)
    if hit is not None:
        return hit["results"], hit["certificates"], True
    results, certs = compute()
    _cache_store(key, {"results": results, "certificates": certs})
    return results, certs, False


# -- commands ------------------------------------------------------------------

def cmd_diameter(args) -> tuple[dict, int]:
    def compute():
        v = _view(args.spec, args.kind, args.tier, args.workers)
        return {"kind": args.kind, "order": v.table.order, "diameter": fmt_value(v.diameter()),
                "vertices": v.vertex_count, "components": len(v.components()),
                "isolated": len(v.isolated_ids)}, []

    results, certs, _ = _cached(args, "diameter", {"tier": args.tier}, compute)
    return run_result(args.argv, args.spec, results, certs, 0.0, None), EXIT_OK


def cmd_ball(args) -> tuple[dict, int]:
    if args.radius < 0:
        raise UsageError("radius must be nonnegative")

    def compute():
        g = _load_group(args.spec, args.tier)
        try:
            x = Permutation.parse(args.element, g.degree)
        except ValueError as exc:
            raise UsageError(f"bad element: {exc}") from exc
        if not g.contains(x):
            raise UsageError(f"element {args.element} is not in {args.spec}")
        v = GraphView(g, args.kind, TIER_CAPS[args.tier], workers=args.workers)
        b = v.ball(x, args.radius)
        res = {"kind": args.kind, "center": x.cycle_string(), "radius": args.radius,
               "size": len(b)}
        if args.members:
            res["members"] = [p.cycle_string() for p in b.members()]
        return res, []

    params = {"element": args.element, "radius": args.radius, "members": args.members,
              "tier": args.tier}
    results, certs, _ = _cached(args, "ball", params, compute)
    return run_result(args.argv, args.spec, results, certs, 0.0, None), EXIT_OK


def _subgroup(g: Group, text: str | None) -> Group:
    if text is None:
        return largest_prime_normalizer(g)
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            try:
                gens.append(Permutation.parse(part, g.degree))
            except ValueError as exc:
                raise UsageError(f"bad subgroup generator {part!r}: {exc}") from exc
    h = Group(gens or [Permutation.identity(g.degree)])
    if not h.is_subgroup_of(g):
        raise UsageError("subgroup generators do not lie in the group")
    return h


def cmd_certify(args) -> tuple[dict, int]:
    if args.kind != "soluble":
        raise UsageError("certificates are defined for the soluble graph only")

    def compute():
        g = _load_group(args.spec, args.tier)
        if args.target == "base2":
            h = _subgroup(g, args.subgroup)
            cert = base_two_search(g, h, args.seed, args.budget, spec=args.spec,
                                   cap=TIER_CAPS[args.tier])
        else:
            v = GraphView(g, "soluble", TIER_CAPS[args.tier], workers=args.workers)
            find = find_lb3 if args.target == "lb3" else find_lb4
            cert = find(v, args.seed, args.budget, spec=args.spec)
        if isinstance(cert, NotFound):
            return {"target": args.target, "found": False, "attempts": cert.attempts,
                    "budget": args.budget}, []
        res = check(cert)
        cert = cert.with_verified(res.ok)
        out = {"target": args.target, "found": True, "verified": res.ok}
        if not res.ok:
            out["reason"] = res.reason
        return out, [cert.to_dict()]

    params = {"target": args.target, "seed": args.seed, "budget": args.budget,
              "subgroup": args.subgroup, "tier": args.tier}
    results, certs, _ = _cached(args, "certify", params, compute)
    for c in certs:
        path = cache_dir() / "certificates" / f"{cache_key(args.spec, args.kind, 'certify', params)}.json"
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(Certificate.from_dict(c).to_json())
            results["certificate_path"] = str(path)
        except OSError:
            pass
    code = EXIT_OK
    if not results["found"]:
        code = EXIT_NOT_FOUND
    elif not results["verified"]:
        code = EXIT_VERIFY
    return run_result(args.argv, args.spec, results, certs, 0.0, args.seed), code


def cmd_verify(args) -> tuple[dict, int]:
    try:
        cert = Certificate.from_json(Path(args.certificate).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.certificate}: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"not a certificate: {exc}") from exc
    res = check(cert)
    results = {"kind": cert.kind, "verified": res.ok}
    if not res.ok:
        results["reason"] = res.reason
    out = run_result(args.argv, cert.spec, results, [cert.with_verified(res.ok).to_dict()],
                     0.0, cert.prng_seed)
    return out, EXIT_OK if res.ok else EXIT_VERIFY


def cmd_suite(args) -> tuple[dict, int]:
    rows = run_suite(args.name, report=lambda line: print(line, file=sys.stderr))
    results = {"suite": args.name,
               "checks": [{"key": r.key, "criterion": r.criterion, "title": r.title,
                           "passed": r.passed, "detail": r.detail} for r in rows],
               "passed": all(r.passed for r in rows)}
    return (run_result(args.argv, None, results, [], 0.0, None),
            EXIT_OK if results["passed"] else EXIT_VERIFY)


# -- argument parsing ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", default="soluble",
                        choices=[k.value for k in PredicateKind])
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--json", metavar="PATH", help="also write the result here")
    common.add_argument("--tier", choices=TIERS, default="medium",
                        help="order ceiling: fast 2520, medium 11232, slow 100000")
    common.add_argument("--no-cache", action="store_true", help="ignore cached results")

    p = _Parser(prog="solgraph", description="Soluble generation graphs of finite groups.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("diameter", parents=[common], help="diameter of the graph")
    d.add_argument("spec")
    d.set_defaults(func=cmd_diameter)

    b = sub.add_parser("ball", parents=[common], help="ball around an element")
    b.add_argument("spec")
    b.add_argument("element", help="1-based cycle notation, e.g. (1,2,3)")
    b.add_argument("radius", type=int)
    b.add_argument("--members", action="store_true", help="list the ball's members")
    b.set_defaults(func=cmd_ball)

    c = sub.add_parser("certify", parents=[common], help="search for a certificate")
    c.add_argument("spec")
    c.add_argument("target", choices=["lb3", "lb4", "base2"])
    c.add_argument("--subgroup", help="base2 subgroup generators separated by ';' "
                                      "(default: normalizer of a largest-prime-order element)")
    c.set_defaults(func=cmd_certify)

    v = sub.add_parser("verify", parents=[common], help="re-check a certificate file")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance checks of a tier")
    s.add_argument("name", choices=TIERS)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"solgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args.argv = ["solgraph", *argv]
    t0 = time.perf_counter()
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"solgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"solgraph: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SolgraphError, ValueError, OSError) as exc:
        print(f"solgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out["timing"]["seconds"] = round(time.perf_counter() - t0, 6)
    text = dumps(out)
    print(text)
    if args.json:
        Path(args.json).write_text(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
