"""Subgroup enumeration and the soluble intersection graph Int_S(G).

Int_S(G) has the nontrivial soluble subgroups as vertices, two being adjacent
when they intersect nontrivially.  With the soluble graph it forms a dual pair
(both are halves of the element/subgroup incidence graph), so for R(G) = 1
the two graphs have the same number of components and diameters differing by
at most one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, SolubleGroupError
from .graph import GraphView, dense_diameter
from .permcore import Group, is_soluble, subgroup_from_elements
from .permcore import kernels as K

SUBGROUP_CAP = 1000


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]       # element indices into the ambient table, sorted
    generators: tuple[int, ...]    # greedy generating set (element indices)

    @property
    def order(self) -> int:
        return len(self.members)


class SubgroupTable:
    """All subgroups of a small group, sorted by (order, member list)."""

    def __init__(self, ambient: Group, subgroups: list[Subgroup]):
        self.ambient = ambient
        self.table = ambient.element_table()
        self.subgroups = subgroups
        self._soluble = None

    def __len__(self) -> int:
        return len(self.subgroups)

    def group(self, i: int) -> Group:
        s = self.subgroups[i]
        return subgroup_from_elements(self.ambient.degree,
                                      (self.table.perm(j) for j in s.generators))

    def soluble_flags(self) -> list[bool]:
        if self._soluble is None:
            self._soluble = [is_soluble(self.group(i)) for i in range(len(self))]
        return self._soluble

    def membership(self) -> np.ndarray:
        m = np.zeros((len(self), self.table.order), dtype=bool)
        for i, s in enumerate(self.subgroups):
            m[i, list(s.members)] = True
        return m


def enumerate_subgroups(g: Group, cap: int = SUBGROUP_CAP) -> SubgroupTable:
    """Join closure: start from the cyclic subgroups and adjoin <H, x> for
    cyclic generators x outside H until nothing new appears."""
    if g.order() > cap:
        raise CapacityError("subgroup enumeration", g.order(), cap)
    t = g.element_table()
    N = t.order
    mark = np.zeros(N, dtype=np.int64)
    st = np.zeros(1, dtype=np.int64)
    buf = np.empty(N, dtype=np.int32)

    def close(gens: list[int]) -> tuple[int, ...]:
        n = K.closure(t.T, np.array(gens or [0], dtype=np.int32), len(gens), mark, st, buf)
        return tuple(sorted(buf[:n].tolist()))

    found: dict[tuple[int, ...], Subgroup] = {}
    cyclic_gens = []
    for x in range(N):
        members = close([x])
        if members not in found:
            found[members] = Subgroup(members, (x,) if x else ())
            if x:
                cyclic_gens.append(x)
    queue = list(found.values())
    i = 0
    while i < len(queue):
        h = queue[i]
        i += 1
        inside = set(h.members)
        for x in cyclic_gens:
            if x in inside:
                continue
            gens = h.generators + (x,)
            members = close(list(gens))
            if members not in found:
                sub = Subgroup(members, gens)
                found[members] = sub
                queue.append(sub)
    subs = sorted(found.values(), key=lambda s: (s.order, s.members))
    for s in subs:
        if N % s.order:
            raise AssertionError("subgroup order does not divide the group order")
    return SubgroupTable(g, subs)


@dataclass
class IntersectionGraph:
    table: SubgroupTable
    vertices: list[int]           # indices into table.subgroups
    adjacency: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def diameter(self):
        return dense_diameter(self.adjacency)

    def components(self) -> list[list[int]]:
        V = self.vertex_count
        seen = np.zeros(V, dtype=bool)
        comps = []
        for s in range(V):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in np.flatnonzero(self.adjacency[v] & ~seen):
                    seen[w] = True
                    stack.append(int(w))
            comps.append(sorted(comp))
        comps.sort(key=lambda c: (-len(c), c[0]))
        return comps


def soluble_intersection_graph(g: Group, table: SubgroupTable | None = None) -> IntersectionGraph:
    if is_soluble(g):
        raise SolubleGroupError("group is soluble: R(G) = G would be a universal vertex")
    table = table or enumerate_subgroups(g)
    flags = table.soluble_flags()
    verts = [i for i, s in enumerate(table.subgroups) if s.order > 1 and flags[i]]
    m = table.membership()[verts][:, 1:].astype(np.int32)
    adj = (m @ m.T) > 0
    np.fill_diagonal(adj, False)
    return IntersectionGraph(table, verts, adj)


@dataclass(frozen=True)
class DualPairReport:
    soluble_graph_diameter: int | float
    intersection_graph_diameter: int | float
    soluble_graph_components: int
    intersection_graph_components: int

    @property
    def holds(self) -> bool:
        a, b = self.soluble_graph_diameter, self.intersection_graph_diameter
        close = a == b or abs(a - b) <= 1
        return close and self.soluble_graph_components == self.intersection_graph_components


def dual_pair_check(g: Group, view: GraphView | None = None) -> DualPairReport:
    view = view or GraphView(g)
    if len(view.isolated_ids) != 1:
        raise ValueError("dual-pair check needs a trivial soluble radical")
    ig = soluble_intersection_graph(g)
    return DualPairReport(view.diameter(), ig.diameter(),
                          len(view.components()), len(ig.components()))
