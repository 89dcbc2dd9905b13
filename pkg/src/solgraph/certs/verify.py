"""Independent re-checking of certificates.

Verification rebuilds the group from its spec string and recomputes every
claim by direct scans (no conjugacy-class reduction and no search), so it
shares no shortcuts with the code that found the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..catalog import build
from ..errors import SolgraphError
from ..permcore import Group, Permutation, is_soluble, soluble_radical
from ..permcore import kernels as K
from .certificate import FORMAT_VERSION, Certificate
from .search import sophie_bound

PAIR_CEILING = 10_000_000


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class _Direct:
    """Direct soluble-pair scans over a group's element table."""

    def __init__(self, g: Group):
        self.g = g
        self.t = g.element_table()
        self.W = K.Workspace(self.t.order).as_tuple()
        self._radical = None
        self.calls = 0

    def soluble_pair(self, a: int, b: int) -> bool:
        self.calls += 1
        ok, _ = K.pair_predicate(self.t.T, self.W, self.t.orders, K.SOLUBLE, a, b, False)
        return bool(ok)

    def neighbourhood(self, x: int) -> set[int]:
        """{z != 1 : <x, z> soluble}; includes x and the nontrivial radical.

        <x, z> = <x, x^i z x^j>, so one evaluation settles a double coset.
        """
        t = self.t
        powers = [0]
        p = x
        while p != 0:
            powers.append(p)
            p = t.mul(p, x)
        seen = np.zeros(t.order, dtype=bool)
        seen[0] = True
        out = set()
        for z in range(1, t.order):
            if seen[z]:
                continue
            ok = self.soluble_pair(x, z)
            for a in powers:
                az = t.mul(a, z)
                for b in powers:
                    w = t.mul(az, b)
                    if not seen[w]:
                        seen[w] = True
                        if ok and w != 0:
                            out.add(w)
        return out

    def radical(self) -> set[int]:
        if self._radical is None:
            r = soluble_radical(self.g)
            self._radical = {self.t.index_of(e) for e in r.elements()}
        return self._radical

    def element(self, text: str) -> int:
        p = Permutation.parse(text, self.g.degree)
        i = self.t.index_of(p)
        if i < 0:
            raise ValueError(f"{text} is not in the group")
        return i

    def vertex_ids(self, elems: set[int]) -> list[int]:
        """Positions of elements among all non-radical elements, sorted."""
        rad = self.radical() if elems else set()
        verts = [i for i in range(self.t.order) if i not in rad]
        pos = {v: k for k, v in enumerate(verts)}
        return sorted(pos[e] for e in elems)


def _balls(d: _Direct, x: int, y: int) -> tuple[set[int], set[int]]:
    sx, sy = d.neighbourhood(x), d.neighbourhood(y)
    if sx & sy:
        rad = d.radical()
        sx, sy = sx - rad, sy - rad
    else:
        # every nontrivial radical element lies in both neighbourhoods
        d._radical = {0}
    return sx, sy


def _check_lower_bound(cert: Certificate, g: Group, pairs: bool) -> VerifyResult:
    w = cert.witness
    d = _Direct(g)
    x, c, y = d.element(w["x"]), d.element(w["g"]), d.element(w["y"])
    if d.t.conj(x, c) != y:
        return VerifyResult(False, "y is not x conjugated by g")
    bx, by = _balls(d, x, y)
    if not bx or not by:
        return VerifyResult(False, "x or y is not a vertex")
    if bx & by:
        return VerifyResult(False, "balls B1(x) and B1(y) intersect")
    if pairs:
        if len(bx) * len(by) > PAIR_CEILING:
            return VerifyResult(False, f"pair count exceeds ceiling {PAIR_CEILING}")
        for a in sorted(bx):
            for b in sorted(by):
                if d.soluble_pair(a, b):
                    return VerifyResult(False, "found a soluble pair across the balls")
    if "ball_x" in w or "ball_y" in w:
        if w.get("ball_x") != d.vertex_ids(bx) or w.get("ball_y") != d.vertex_ids(by):
            return VerifyResult(False, "listed balls differ from recomputed balls")
    return VerifyResult(True)


def _check_base2(cert: Certificate, g: Group) -> VerifyResult:
    w = cert.witness
    gens = [Permutation.parse(s, g.degree) for s in w["subgroup"]]
    h = Group(gens)
    if not h.is_subgroup_of(g):
        return VerifyResult(False, "subgroup is not contained in the group")
    c = Permutation.parse(w["c"], g.degree)
    if not g.contains(c):
        return VerifyResult(False, "conjugator is not in the group")
    hs = set(h.elements())
    for e in hs:
        if not e.is_identity() and e.conj(c) in hs:
            return VerifyResult(False, "h and h^c intersect nontrivially")
    return VerifyResult(True)


def _check_involution_dist(cert: Certificate, g: Group) -> VerifyResult:
    w = cert.witness
    d = _Direct(g)
    cls, _, reps = d.t.classes()
    rad = d.radical()
    covered = set()
    worst = 0
    for row in w["classes"]:
        path = [d.element(s) for s in row["path"]]
        if not path:
            return VerifyResult(False, "missing path")
        r = path[0]
        if d.element(row["rep"]) != r or r in rad:
            return VerifyResult(False, "path does not start at a vertex representative")
        if d.t.orders[path[-1]] != 2 or path[-1] in rad:
            return VerifyResult(False, "path does not end at an involution vertex")
        for a, b in zip(path, path[1:]):
            if a == b or b in rad or not d.soluble_pair(a, b):
                return VerifyResult(False, "path step is not an edge")
        if row["distance"] != len(path) - 1:
            return VerifyResult(False, "distance differs from path length")
        covered.add(int(cls[r]))
        worst = max(worst, len(path) - 1)
    # each path is an upper bound for its whole class (conjugate the path)
    needed = {int(cls[v]) for v in range(1, d.t.order) if v not in rad}
    if covered != needed:
        return VerifyResult(False, "representatives do not cover every vertex class")
    if w["max_distance"] != worst:
        return VerifyResult(False, "max_distance is wrong")
    return VerifyResult(True)


def _check_sophie(cert: Certificate) -> VerifyResult:
    p = int(cert.witness["p"])
    if sophie_bound(p).to_dict() != cert.witness:
        return VerifyResult(False, "recomputed numbers differ")
    return VerifyResult(True)


def _check_parity(cert: Certificate, g: Group) -> VerifyResult:
    from .search import normalizer_parity_report
    if normalizer_parity_report(g).to_dict() != cert.witness:
        return VerifyResult(False, "recomputed report differs")
    return VerifyResult(True)


def check(cert: Certificate) -> VerifyResult:
    """Re-derive every claim of the certificate; reports the first failure."""
    if cert.format_version != FORMAT_VERSION:
        return VerifyResult(False, f"unsupported format_version {cert.format_version}")
    try:
        if cert.kind == "SophieBound":
            return _check_sophie(cert)
        g = build(cert.spec)
        if cert.kind == "Base2":
            return _check_base2(cert, g)
        if cert.kind == "NormalizerParity":
            return _check_parity(cert, g)
        if is_soluble(g):
            return VerifyResult(False, "group is soluble")
        if cert.kind in ("LB3", "LB4"):
            return _check_lower_bound(cert, g, pairs=cert.kind == "LB4")
        if cert.kind == "InvolutionDist":
            return _check_involution_dist(cert, g)
    except (SolgraphError, ValueError, KeyError, TypeError) as exc:
        return VerifyResult(False, f"malformed certificate: {exc}")
    return VerifyResult(False, f"unknown kind {cert.kind}")


def verify(cert: Certificate) -> bool:
    return check(cert).ok
