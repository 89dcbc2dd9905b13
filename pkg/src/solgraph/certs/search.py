"""Searches producing lower-bound and structural certificates."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from ..catalog import is_prime
from ..errors import NoInvolutionError, NotSophieGermainError
from ..graph import INF, GraphView, fmt_value
from ..permcore import DEFAULT_CAP, Group, normalizer_of_cyclic
from .certificate import Certificate, NotFound
from .prng import SplitMix64

DEFAULT_BUDGET = 10_000
EXHAUSTIVE_LIMIT = 720


def _spec_text(view: GraphView, spec: str | None) -> str:
    if spec is not None:
        return spec
    s = getattr(view.group, "spec_text", None)
    if s is None:
        raise ValueError("a group spec is required to make a re-checkable certificate")
    return s


def _reps_by_order(view: GraphView) -> list[int]:
    """Vertex-class representatives (element ids), largest element order first."""
    reps = [int(view.reps[c]) for c in view.vertex_classes]
    return sorted(reps, key=lambda r: (-int(view.table.orders[r]), r))


def _ball_mask(view: GraphView, x: int, radius: int) -> np.ndarray:
    d, g = view._distances_from(x)
    inside = (d >= 0) & (d <= radius)
    if g == 0:
        return inside
    mask = np.zeros_like(inside)
    t = view.table
    for z in np.flatnonzero(inside):
        mask[t.conj(int(z), g)] = True
    return mask


def _lb_witness(view: GraphView, x: int, g: int) -> dict:
    t = view.table
    y = t.conj(x, g)
    bx = view.ball(x, 1).vertex_ids
    by = view.ball(y, 1).vertex_ids
    return {
        "x": t.perm(x).cycle_string(),
        "g": t.perm(g).cycle_string(),
        "y": t.perm(y).cycle_string(),
        "ball_x": [int(i) for i in bx],
        "ball_y": [int(i) for i in by],
    }


def _disjoint_under(view: GraphView, members: np.ndarray, avoid: np.ndarray, g: int) -> bool:
    """Is members^g disjoint from the element mask `avoid`?"""
    t = view.table
    for z in members:
        if avoid[t.conj(int(z), g)]:
            return False
    return True


def _lower_bound_search(view: GraphView, seed: int, budget: int, depth: int,
                        exhaustive: bool):
    """Find (x, g) with B_depth(x) and B1(x^g) disjoint.

    depth=1 certifies distance >= 3, depth=2 certifies distance >= 4.
    Returns (x, g, attempts) or (None, None, attempts).
    """
    t = view.table
    root = SplitMix64(seed)
    attempts = 0
    for rank, x in enumerate(_reps_by_order(view)):
        near = _ball_mask(view, x, depth)
        b1 = np.flatnonzero(_ball_mask(view, x, 1))
        if exhaustive:
            conjugators = range(t.order)
        else:
            rng = root.fork(rank)
            conjugators = (rng.below(t.order) for _ in range(budget))
        for g in conjugators:
            attempts += 1
            if _disjoint_under(view, b1, near, int(g)):
                return x, int(g), attempts
    return None, None, attempts


def find_lb3(view: GraphView, seed: int = 1, budget: int = DEFAULT_BUDGET, *,
             spec: str | None = None, exhaustive: bool | None = None):
    """Search for x, g with B1(x) and B1(x^g) disjoint, so distance(x, x^g) >= 3.

    Conjugators are drawn from a seeded SplitMix64 stream per representative.
    With exhaustive=True (default for groups of order <= 720) every
    conjugator is tried, so not-found then proves the diameter is at most 2.
    """
    spec = _spec_text(view, spec)
    if exhaustive is None:
        exhaustive = view.table.order <= EXHAUSTIVE_LIMIT
    x, g, attempts = _lower_bound_search(view, seed, budget, 1, exhaustive)
    if x is None:
        return NotFound("LB3", spec, attempts, seed)
    w = _lb_witness(view, x, g)
    w["attempts"] = attempts
    return Certificate("LB3", spec, w, seed)


def find_lb4(view: GraphView, seed: int = 1, budget: int = DEFAULT_BUDGET, *,
             spec: str | None = None, exhaustive: bool | None = None):
    """Search for x, g such that <a, b> is insoluble for all a in B1(x),
    b in B1(x^g); equivalently B2(x) and B1(x^g) are disjoint."""
    spec = _spec_text(view, spec)
    if exhaustive is None:
        exhaustive = view.table.order <= EXHAUSTIVE_LIMIT
    x, g, attempts = _lower_bound_search(view, seed, budget, 2, exhaustive)
    if x is None:
        return NotFound("LB4", spec, attempts, seed)
    w = _lb_witness(view, x, g)
    w["attempts"] = attempts
    return Certificate("LB4", spec, w, seed)


def base_two_search(g: Group, h: Group, seed: int = 1, budget: int = DEFAULT_BUDGET, *,
                    spec: str, cap: int = DEFAULT_CAP):
    """Search for c in g with h and h^c intersecting trivially.

    The identity is tried first (it works exactly when h is trivial), then
    `budget` seeded random elements of g.
    """
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")
    t = g.element_table(cap)
    hmask = np.zeros(t.order, dtype=bool)
    hids = np.array([t.index_of(e) for e in h.elements(cap)], dtype=np.int64)
    hmask[hids] = True
    rng = SplitMix64(seed)
    candidates = [0] + [rng.below(t.order) for _ in range(budget)]
    for attempts, c in enumerate(candidates, start=1):
        if not any(hmask[t.conj(int(z), c)] for z in hids[1:]):
            w = {"subgroup": [p.cycle_string() for p in h.generators],
                 "c": t.perm(c).cycle_string(), "attempts": attempts}
            return Certificate("Base2", spec, w, seed)
    return NotFound("Base2", spec, len(candidates), seed)


def largest_prime_normalizer(g: Group, cap: int = DEFAULT_CAP) -> Group:
    """N_G(<x>) for the least class representative x of the largest prime
    order dividing |G|; the default subgroup for base-size searches."""
    t = g.element_table(cap)
    _, _, reps = t.classes()
    prime = [int(r) for r in reps if is_prime(int(t.orders[r]))]
    x = min(prime, key=lambda r: (-int(t.orders[r]), r))
    return normalizer_of_cyclic(g, t.perm(x), cap)


def involution_distances(view: GraphView, max_depth: int = 3) -> np.ndarray:
    """For every element, the distance to the nearest involution (BFS truncated
    at max_depth; -1 beyond it or for non-vertices)."""
    t = view.table
    invols = [int(i) for i in view.vertices if t.orders[i] == 2]
    if not invols:
        raise NoInvolutionError("group has no involutions outside the isolated set")
    return view.distances_from_set(invols, max_depth)


def involution_distance(view: GraphView, x, max_depth: int = 3):
    """min over involutions y of distance(x, y), or infinity beyond max_depth."""
    i = view._vertex_id(x)
    d = involution_distances(view, max_depth)[i]
    return INF if d < 0 else int(d)


def _path_to_involution(view: GraphView, x: int, dist: np.ndarray) -> list[int]:
    """A shortest path from x down to an involution using a distance field."""
    t = view.table
    path = [x]
    while dist[path[-1]] > 0:
        cur = path[-1]
        for nb in view.neighbours(cur):
            j = t.index_of(nb)
            if dist[j] == dist[cur] - 1:
                path.append(j)
                break
        else:
            raise AssertionError("distance field has no descending neighbour")
    return path


def involution_distance_certificate(view: GraphView, *, spec: str | None = None) -> Certificate:
    """Per vertex class: distance to the nearest involution, with an explicit path."""
    spec = _spec_text(view, spec)
    t = view.table
    dist = involution_distances(view, max_depth=-1)
    rows = []
    for c in view.vertex_classes:
        r = int(view.reps[c])
        path = _path_to_involution(view, r, dist) if dist[r] >= 0 else []
        rows.append({"rep": t.perm(r).cycle_string(),
                     "distance": fmt_value(INF if dist[r] < 0 else int(dist[r])),
                     "path": [t.perm(p).cycle_string() for p in path]})
    vd = dist[view.vertices]
    worst = INF if (vd < 0).any() else int(vd.max())
    return Certificate("InvolutionDist", spec,
                       {"classes": rows, "max_distance": fmt_value(worst),
                        "vertex_count": view.vertex_count}, 0)


@dataclass(frozen=True)
class ParityRow:
    representative: str
    element_order: int
    class_size: int
    normalizer_order: int
    even: bool
    real: bool


@dataclass(frozen=True)
class ParityReport:
    rows: tuple[ParityRow, ...]
    all_even: bool
    all_real: bool

    @property
    def bound(self) -> int | None:
        """3 when every normalizer has even order (valid when R(G) = 1)."""
        return 3 if self.all_even else None

    def to_dict(self) -> dict:
        return {"rows": [r.__dict__ for r in self.rows], "all_even": self.all_even,
                "all_real": self.all_real, "bound": self.bound}


def normalizer_parity_report(g: Group, cap: int = DEFAULT_CAP) -> ParityReport:
    """For each nonidentity class: |N_G(<x>)|, its parity, and whether x is real."""
    t = g.element_table(cap)
    cls, _, reps = t.classes()
    sizes = np.bincount(cls)
    rows = []
    for c, r in enumerate(reps.tolist()):
        if r == 0:
            continue
        x = t.perm(r)
        n = normalizer_of_cyclic(g, x, cap).order()
        rows.append(ParityRow(x.cycle_string(), int(t.orders[r]), int(sizes[c]), n,
                              n % 2 == 0, bool(cls[t.inv[r]] == c)))
    rows.sort(key=lambda row: (row.element_order, row.representative))
    return ParityReport(tuple(rows), all(r.even for r in rows), all(r.real for r in rows))


@dataclass(frozen=True)
class SophieReport:
    p: int
    q: int
    alpha1: int
    alpha2_bound: int
    alpha3_bound: int
    beta: int
    total_bound: int
    target: int
    holds: bool

    def to_dict(self) -> dict:
        # big integers go out as decimal strings so JSON readers keep them exact
        return {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                for k, v in self.__dict__.items()}


def sophie_bound(p: int) -> SophieReport:
    """Counting bound for A_q, q = 2p + 1, in exact integer arithmetic.

    alpha1 = q - 2, alpha2 <= pq(p-1)(q-1), beta = pq(p-1) + 2^(p-1) p + p - 1,
    alpha3 <= pq(p-1)(q-1) beta; the bound holds when
    q - 1 + pq(p-1)(q-1)(beta + 1) < (q-1)!.
    """
    q = 2 * p + 1
    if p < 5 or not is_prime(p) or not is_prime(q):
        raise NotSophieGermainError(
            f"p = {p} is not a Sophie Germain prime >= 5 (2p+1 = {q})")
    alpha1 = q - 2
    alpha2 = p * q * (p - 1) * (q - 1)
    beta = p * q * (p - 1) + 2 ** (p - 1) * p + p - 1
    alpha3 = alpha2 * beta
    total = q - 1 + alpha2 * (beta + 1)
    if total != 1 + alpha1 + alpha2 + alpha3:
        raise AssertionError("Sophie bound terms do not add up")
    target = factorial(q - 1)
    return SophieReport(p, q, alpha1, alpha2, alpha3, beta, total, target, total < target)


def sophie_certificate(p: int) -> Certificate:
    return Certificate("SophieBound", f"A({2 * p + 1})", sophie_bound(p).to_dict(), 0)


@dataclass(frozen=True)
class SweepReport:
    center: str
    bound: int
    holds: bool
    probes: int
    uncovered: str | None


def sweep_upper_bound(view: GraphView, x, bound: int = 4) -> SweepReport:
    """Show every vertex lies within `bound` (even) of x without a BFS from x.

    distance(x, y) <= 2k iff B_k(x) and B_k(y) meet, which happens iff y or
    one of its neighbours lies in B_{2k-1}(x).  Probing y also settles every
    conjugate of every power y^m under C_G(x): conjugation by C_G(x) fixes x,
    and B1(y) is contained in B1(y^m).
    """
    if bound % 2:
        raise ValueError("bound must be even")
    t = view.table
    xi = view._vertex_id(x)
    near = _ball_mask(view, xi, bound - 1)
    cent = [int(c) for c in np.flatnonzero(
        [t.mul(xi, g) == t.mul(g, xi) for g in range(t.order)])]
    pending = np.zeros(t.order, dtype=bool)
    pending[view.vertices] = True
    probes = 0
    for y in view.vertices:
        y = int(y)
        if not pending[y]:
            continue
        probes += 1
        if not near[y] and not near[_ball_mask(view, y, 1)].any():
            return SweepReport(t.perm(xi).cycle_string(), bound, False, probes,
                               t.perm(y).cycle_string())
        p = y
        while p != 0:
            for c in cent:
                pending[t.conj(p, c)] = False
            p = t.mul(p, y)
    return SweepReport(t.perm(xi).cycle_string(), bound, True, probes, None)
