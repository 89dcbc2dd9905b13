"""Permutation groups and structural operations on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import CapacityError, DegreeMismatchError, NotNormalError
from .chain import StabilizerChain
from .perm import Permutation

DEFAULT_CAP = 200_000


class Group:
    """A permutation group given by generators, with a stabilizer chain.

    Instances are treated as immutable; derived data (element table, classes)
    is cached on first use.
    """

    def __init__(self, generators: Sequence[Permutation], *, chain: StabilizerChain | None = None):
        gens = list(generators)
        if not gens:
            raise ValueError("need at least one generator (the identity is allowed)")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generators have degrees {degree} and {g.degree}")
        self._degree = degree
        self._gens = tuple(gens)
        if chain is None:
            chain = StabilizerChain(degree, (g.images for g in gens))
        self._chain = chain
        self._order = chain.order()
        self._table = None

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._gens

    @property
    def chain(self) -> StabilizerChain:
        return self._chain

    @property
    def base(self) -> list[int]:
        return self._chain.base

    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            raise DegreeMismatchError(f"degree {p.degree} vs group degree {self._degree}")
        return self._chain.contains(p.images)

    __contains__ = contains

    def is_trivial(self) -> bool:
        return self._order == 1

    def element_table(self, cap: int = DEFAULT_CAP):
        from .table import ElementTable
        if self._order > cap:
            raise CapacityError("element enumeration", self._order, cap)
        if self._table is None:
            self._table = ElementTable(self)
        return self._table

    def elements(self, cap: int = DEFAULT_CAP) -> list[Permutation]:
        t = self.element_table(cap)
        return [t.perm(i) for i in range(t.order)]

    def is_subgroup_of(self, other: "Group") -> bool:
        return all(other.contains(g) for g in self._gens)

    def is_normal_in(self, other: "Group") -> bool:
        return all(self.contains(g.conj(s)) for g in self._gens for s in other.generators)

    def __repr__(self) -> str:
        return f"<Group degree={self._degree} order={self._order}>"


def group_from_generators(gens: Sequence[Permutation]) -> Group:
    return Group(gens)


def order(g: Group) -> int:
    return g.order()


def contains(g: Group, p: Permutation) -> bool:
    return g.contains(p)


def elements(g: Group, cap: int = DEFAULT_CAP) -> list[Permutation]:
    return g.elements(cap)


def trivial_group(degree: int) -> Group:
    return Group([Permutation.identity(degree)])


def subgroup_from_elements(degree: int, elems) -> Group:
    """Greedy generating set for the subgroup generated by elems."""
    chain = StabilizerChain(degree)
    gens = []
    for e in elems:
        if chain.add_generator(e.images):
            gens.append(e)
    return Group(gens or [Permutation.identity(degree)], chain=chain)


def normal_closure(g: Group, seeds: Sequence[Permutation]) -> Group:
    """Smallest subgroup containing seeds and normalized by g's generators."""
    chain = StabilizerChain(g.degree)
    gens: list[Permutation] = []
    queue: deque[Permutation] = deque()
    for s in seeds:
        if chain.add_generator(s.images):
            gens.append(s)
            queue.append(s)
    while queue:
        x = queue.popleft()
        for s in g.generators:
            c = x.conj(s)
            if chain.add_generator(c.images):
                gens.append(c)
                queue.append(c)
    return Group(gens or [g.identity()], chain=chain)


def derived_subgroup(g: Group) -> Group:
    gens = g.generators
    comms = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    d = normal_closure(g, comms)
    if not d.is_normal_in(g):
        raise AssertionError("derived subgroup failed normality check")
    return d


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    orders: tuple[int, ...]
    terminated: bool


def _series(g: Group, step: Callable[[Group], Group], kind: str) -> tuple[list[Group], SeriesReport]:
    groups = [g]
    orders = [g.order()]
    while orders[-1] > 1:
        nxt = step(groups[-1])
        groups.append(nxt)
        orders.append(nxt.order())
        if orders[-1] == orders[-2]:
            break
    return groups, SeriesReport(kind, tuple(orders), orders[-1] == 1)


def derived_series(g: Group) -> SeriesReport:
    return _series(g, derived_subgroup, "derived")[1]


def lower_central_series(g: Group) -> SeriesReport:
    def step(h: Group) -> Group:
        seeds = [a.commutator(s) for a in h.generators for s in g.generators]
        return normal_closure(g, seeds)
    return _series(g, step, "lower_central")[1]


def is_soluble(g: Group) -> bool:
    return derived_series(g).terminated


def is_nilpotent(g: Group) -> bool:
    return lower_central_series(g).terminated


def is_abelian(g: Group) -> bool:
    gens = g.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def is_metabelian(g: Group) -> bool:
    return is_abelian(derived_subgroup(g))


def _is_cyclic(g: Group) -> bool:
    if not is_abelian(g):
        return False
    from math import lcm
    return lcm(*(x.order() for x in g.generators)) == g.order()


def is_metacyclic(g: Group, cap: int = DEFAULT_CAP) -> bool:
    if g.order() > cap:
        raise CapacityError("metacyclic test", g.order(), cap)
    if _is_cyclic(g):
        return True
    t = g.element_table(cap)
    seen: set[frozenset] = set()
    for i in range(1, t.order):
        x = t.perm(i)
        members = frozenset(_powers(x))
        if members in seen:
            continue
        seen.add(members)
        n = Group([x])
        if not all(x.conj(s) in members for s in g.generators):
            continue
        q, _ = quotient_by(g, n, cap)
        if _is_cyclic(q):
            return True
    return False


def _powers(x: Permutation) -> list[Permutation]:
    out = [Permutation.identity(x.degree)]
    p = x
    while not p.is_identity():
        out.append(p)
        p = p * x
    return out


class CosetMap:
    """Sends an element of the ambient group to its permutation of right cosets."""

    def __init__(self, reps: list[tuple], normal: list[tuple], index: dict):
        self._reps = reps
        self._normal = normal
        self._index = index

    def canonical(self, x: tuple) -> tuple:
        return min(tuple([x[i] for i in m]) for m in self._normal)

    def __call__(self, h: Permutation) -> Permutation:
        img = h.images
        return Permutation._trusted(tuple(
            self._index[self.canonical(tuple([img[i] for i in r]))] for r in self._reps))


def quotient_by(g: Group, n: Group, cap: int = DEFAULT_CAP) -> tuple[Group, CosetMap]:
    """Action of g on the right cosets of the normal subgroup n."""
    if not (n.is_subgroup_of(g) and n.is_normal_in(g)):
        raise NotNormalError("subgroup is not normal in the group")
    index = g.order() // n.order()
    if index > cap:
        raise CapacityError("quotient index", index, cap)
    normal = [e.images for e in n.elements(cap)]
    cmap = CosetMap([], normal, {})
    start = cmap.canonical(g.identity().images)
    reps = [start]
    seen = {start}
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in g.generators:
            img = s.images
            c = cmap.canonical(tuple([img[x] for x in r]))
            if c not in seen:
                seen.add(c)
                reps.append(c)
    reps.sort()
    cmap = CosetMap(reps, normal, {r: k for k, r in enumerate(reps)})
    q = Group([cmap(s) for s in g.generators])
    for x in n.generators:
        if not cmap(x).is_identity():
            raise AssertionError("coset map kernel does not contain the subgroup")
    if q.order() != index:
        raise AssertionError("quotient order mismatch")
    return q, cmap


def soluble_radical(g: Group, cap: int = DEFAULT_CAP) -> Group:
    """R(G) as the set of x with <x,y> soluble for every y."""
    from .kernels import SOLUBLE, Workspace, centralizer, neighbor_status
    t = g.element_table(cap)
    if is_soluble(g):
        return g
    cls, _, reps = t.classes()
    W = Workspace(t.order).as_tuple()
    status = np.zeros(t.order, dtype=np.int8)
    radical_classes = []
    for c, r in enumerate(reps):
        neighbor_status(t.T, W, t.orders, SOLUBLE, int(r), centralizer(t.T, int(r)), False, status)
        if not (status == 2).any():
            radical_classes.append(c)
    return radical_from_members(g, t, np.flatnonzero(np.isin(cls, radical_classes)))


def radical_from_members(g: Group, t, members) -> Group:
    """Subgroup on the given indices of table t, checked to be normal and soluble."""
    rad = subgroup_from_elements(g.degree, (t.perm(int(i)) for i in members))
    if rad.order() != len(members):
        raise AssertionError("isolated elements do not form a subgroup")
    if not rad.is_normal_in(g) or not is_soluble(rad):
        raise AssertionError("radical failed normality/solubility check")
    return rad


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    members: list[Permutation] = field(repr=False)


def conjugacy_classes(g: Group, cap: int = DEFAULT_CAP) -> list[ConjugacyClass]:
    """Classes with lexicographically least representatives, sorted by
    (element order, representative)."""
    t = g.element_table(cap)
    cls, _, reps = t.classes()
    buckets: dict[int, list[int]] = {}
    for i, c in enumerate(cls.tolist()):
        buckets.setdefault(c, []).append(i)
    out = []
    for c, r in enumerate(reps.tolist()):
        out.append((int(t.orders[r]), r, ConjugacyClass(
            t.perm(r), len(buckets[c]), [t.perm(i) for i in buckets[c]])))
    out.sort(key=lambda e: (e[0], e[1]))
    return [e[2] for e in out]


def centralizer_of(g: Group, x: Permutation, cap: int = DEFAULT_CAP) -> Group:
    from .kernels import centralizer
    t = g.element_table(cap)
    xi = t.index_of(x)
    if xi < 0:
        raise ValueError("element not in group")
    return subgroup_from_elements(g.degree, (t.perm(int(i)) for i in centralizer(t.T, xi)))


def normalizer_of_cyclic(g: Group, x: Permutation, cap: int = DEFAULT_CAP) -> Group:
    t = g.element_table(cap)
    xi = t.index_of(x)
    if xi < 0:
        raise ValueError("element not in group")
    powers = {t.index_of(p) for p in _powers(x)}
    members = [h for h in range(t.order) if t.conj(xi, h) in powers]
    norm = subgroup_from_elements(g.degree, (t.perm(h) for h in members))
    if norm.order() != len(members):
        raise AssertionError("normalizer filter is not a subgroup")
    cent = centralizer_of(g, x, cap)
    if not cent.is_subgroup_of(norm):
        raise AssertionError("normalizer does not contain the centralizer")
    return norm


def _shift(p: Permutation, offset: int, degree: int) -> Permutation:
    img = list(range(degree))
    for i, x in enumerate(p.images):
        img[i + offset] = x + offset
    return Permutation._trusted(tuple(img))


@dataclass(frozen=True)
class DirectProduct:
    group: Group
    left: Callable[[Permutation], Permutation]
    right: Callable[[Permutation], Permutation]


def direct_product(h: Group, k: Group) -> DirectProduct:
    """H x K on deg(H)+deg(K) points with the factor embeddings."""
    n = h.degree + k.degree
    left = lambda p: _shift(p, 0, n)  # noqa: E731
    right = lambda p: _shift(p, h.degree, n)  # noqa: E731
    gens = [left(p) for p in h.generators] + [right(p) for p in k.generators]
    gens = [p for p in gens if not p.is_identity()] or [Permutation.identity(n)]
    grp = Group(gens)
    if grp.order() != h.order() * k.order():
        raise AssertionError("direct product order mismatch")
    return DirectProduct(grp, left, right)


def wreath_s2(h: Group) -> Group:
    """H wr S2 acting imprimitively on two copies of H's domain."""
    d = h.degree
    base = direct_product(h, h).group
    swap = Permutation._trusted(tuple(list(range(d, 2 * d)) + list(range(d))))
    gens = [p for p in base.generators if not p.is_identity()] + [swap]
    w = Group(gens)
    if w.order() != 2 * h.order() ** 2 or not base.is_subgroup_of(w):
        raise AssertionError("wreath product check failed")
    return w
