"""Generation graphs of a finite group for a subgroup-closed family F.

Two elements are adjacent when the subgroup they generate lies in F; the
vertices are the elements outside I_F(G), the set of elements adjacent to
everything.  All heavy lifting is done on conjugacy-class representatives:
if x = rep^g then the neighbours of x are the neighbours of rep conjugated
by g, so every eccentricity is the eccentricity of some representative.
"""

from __future__ import annotations

import math
import threading
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import CapacityError, NotAVertexError, SolubleGroupError
from ..permcore import (
    DEFAULT_CAP, Group, Permutation, is_abelian, is_metabelian, is_metacyclic,
    is_nilpotent, is_soluble, radical_from_members,
)
from ..permcore import kernels as K

INF = math.inf
DENSE_CAP = 6000


class PredicateKind(Enum):
    SOLUBLE = "soluble"
    ABELIAN = "abelian"
    NILPOTENT = "nilpotent"
    METABELIAN = "metabelian"
    METACYCLIC = "metacyclic"

    @property
    def code(self) -> int:
        return _CODES[self]

    def holds_for(self, g: Group, cap: int = DEFAULT_CAP) -> bool:
        if self is PredicateKind.METACYCLIC:
            return is_metacyclic(g, cap)
        return _PREDICATES[self](g)

    @classmethod
    def parse(cls, name) -> "PredicateKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown predicate kind {name!r}") from None


_CODES = {
    PredicateKind.SOLUBLE: K.SOLUBLE, PredicateKind.ABELIAN: K.ABELIAN,
    PredicateKind.NILPOTENT: K.NILPOTENT, PredicateKind.METABELIAN: K.METABELIAN,
    PredicateKind.METACYCLIC: K.METACYCLIC,
}
_PREDICATES = {
    PredicateKind.SOLUBLE: is_soluble, PredicateKind.ABELIAN: is_abelian,
    PredicateKind.NILPOTENT: is_nilpotent, PredicateKind.METABELIAN: is_metabelian,
}


def fmt_value(v) -> int | str:
    """Distances for JSON: integers, or the string 'infinity'."""
    return "infinity" if v == INF else int(v)


@dataclass(frozen=True)
class Ball:
    center: Permutation
    radius: int
    vertex_ids: np.ndarray = field(repr=False)
    view: "GraphView" = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.vertex_ids)

    @property
    def size(self) -> int:
        return len(self.vertex_ids)

    def members(self) -> list[Permutation]:
        return [self.view.vertex(int(i)) for i in self.vertex_ids]

    def __contains__(self, x: Permutation) -> bool:
        i = self.view.vertex_index(x, strict=False)
        if i < 0:
            return False
        k = np.searchsorted(self.vertex_ids, i)
        return k < len(self.vertex_ids) and self.vertex_ids[k] == i


@dataclass(frozen=True)
class CographResult:
    is_cograph: bool
    witness: tuple[Permutation, ...] | None


class _LRU:
    """Thread-safe bounded memo; eviction only affects speed."""

    def __init__(self, size: int):
        self.size = size
        self._d: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            if key in self._d:
                self._d.move_to_end(key)
                return self._d[key]
        return None

    def put(self, key, value) -> None:
        with self._lock:
            self._d[key] = value
            self._d.move_to_end(key)
            while len(self._d) > self.size:
                self._d.popitem(last=False)


class GraphView:
    """The graph Gamma_F(G) for F given by `kind`."""

    def __init__(self, group: Group, kind: PredicateKind | str = PredicateKind.SOLUBLE,
                 cap: int = DEFAULT_CAP, *, workers: int = 1, memo_size: int = 1 << 18,
                 bfs_cache: int = 64):
        kind = PredicateKind.parse(kind)
        if group.order() > cap:
            raise CapacityError("graph view", group.order(), cap)
        self.group = group
        self.kind = kind
        self.cap = cap
        self.workers = max(1, int(workers))
        self.group_flag = kind.holds_for(group, cap)
        if kind is PredicateKind.SOLUBLE and self.group_flag:
            raise SolubleGroupError()
        t = group.element_table(cap)
        self.table = t
        self._T = t.T
        self.cls, self.conjugator, self.reps = t.classes()
        self._local = threading.local()
        self._memo = _LRU(memo_size)
        self._bfs = _LRU(bfs_cache)
        self._status = self._map(self._rep_status, range(len(self.reps)))
        isolated = [c for c, st in enumerate(self._status) if not (st == 2).any()]
        self.isolated_classes = isolated
        iso_mask = np.isin(self.cls, isolated)
        self.isolated_ids = np.flatnonzero(iso_mask)
        if kind is PredicateKind.SOLUBLE:
            radical_from_members(group, t, self.isolated_ids)
        self.is_vertex = ~iso_mask
        self.vertices = np.flatnonzero(self.is_vertex).astype(np.int32)
        self._pos = np.full(t.order, -1, dtype=np.int64)
        self._pos[self.vertices] = np.arange(len(self.vertices))
        ptr = [0]
        idx = []
        for c, st in enumerate(self._status):
            if c in isolated:
                nb = np.empty(0, dtype=np.int32)
            else:
                nb = np.flatnonzero((st == 1) & self.is_vertex).astype(np.int32)
                nb = nb[nb != self.reps[c]]
            idx.append(nb)
            ptr.append(ptr[-1] + len(nb))
        self.nbr_ptr = np.array(ptr, dtype=np.int64)
        self.nbr_idx = np.concatenate(idx) if idx else np.empty(0, dtype=np.int32)
        self.vertex_classes = [c for c in range(len(self.reps)) if c not in isolated]

    # -- internals ---------------------------------------------------------

    def _workspace(self):
        w = getattr(self._local, "w", None)
        if w is None:
            w = self._local.w = K.Workspace(self.table.order).as_tuple()
        return w

    def _map(self, fn, items):
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            return [fn(i) for i in items]
        with ThreadPoolExecutor(self.workers) as ex:
            return list(ex.map(fn, items))

    def _rep_status(self, c: int) -> np.ndarray:
        r = int(self.reps[c])
        status = np.zeros(self.table.order, dtype=np.int8)
        cent = K.centralizer(self._T, r)
        K.neighbor_status(self._T, self._workspace(), self.table.orders,
                          self.kind.code, r, cent, self.group_flag, status)
        return status

    def _element_id(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            return int(x)
        if isinstance(x, str):
            x = Permutation.parse(x, self.group.degree)
        i = self.table.index_of(x)
        if i < 0:
            raise NotAVertexError(f"{x} is not an element of the group")
        return i

    def _vertex_id(self, x) -> int:
        i = self._element_id(x)
        if not self.is_vertex[i]:
            raise NotAVertexError(f"{self.table.perm(i)} is not a vertex")
        return i

    def _rep_distances(self, c: int) -> np.ndarray:
        d = self._bfs.get(c)
        if d is None:
            d = np.full(self.table.order, -1, dtype=np.int32)
            K.bfs(self._T, np.array([self.reps[c]], dtype=np.int32), self.nbr_ptr, self.nbr_idx, self.cls,
                  self.conjugator, self.vertices, -1, d)
            self._bfs.put(c, d)
        return d

    # -- vertices ----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Permutation:
        """The i-th vertex in lexicographic order."""
        return self.table.perm(int(self.vertices[i]))

    def vertex_index(self, x, strict: bool = True) -> int:
        i = self.table.index_of(x) if isinstance(x, Permutation) else self._element_id(x)
        if i < 0 or self._pos[i] < 0:
            if strict:
                raise NotAVertexError(f"{x} is not a vertex")
            return -1
        return int(self._pos[i])

    def is_vertex_element(self, x: Permutation) -> bool:
        i = self.table.index_of(x)
        return i >= 0 and bool(self.is_vertex[i])

    def isolated_set(self) -> list[Permutation]:
        return [self.table.perm(int(i)) for i in self.isolated_ids]

    def class_representatives(self) -> list[Permutation]:
        """Representatives of the conjugacy classes contained in the vertex set."""
        return [self.table.perm(int(self.reps[c])) for c in self.vertex_classes]

    def class_size(self, x) -> int:
        c = self.cls[self._element_id(x)]
        return int((self.cls == c).sum())

    # -- queries -----------------------------------------------------------

    def adjacent(self, x, y) -> bool:
        i, j = self._vertex_id(x), self._vertex_id(y)
        if i == j:
            raise ValueError("adjacency is only defined for distinct vertices")
        key = (i, j) if i < j else (j, i)
        hit = self._memo.get(key)
        if hit is None:
            hit, _ = K.pair_predicate(self._T, self._workspace(), self.table.orders,
                                      self.kind.code, i, j, self.group_flag)
            hit = bool(hit)
            self._memo.put(key, hit)
        return hit

    def neighbours(self, x) -> list[Permutation]:
        i = self._vertex_id(x)
        c = self.cls[i]
        g = int(self.conjugator[i])
        nb = self.nbr_idx[self.nbr_ptr[c]:self.nbr_ptr[c + 1]]
        ids = sorted(self.table.conj(int(z), g) for z in nb)
        return [self.table.perm(z) for z in ids]

    def degree(self, x) -> int:
        c = self.cls[self._vertex_id(x)]
        return int(self.nbr_ptr[c + 1] - self.nbr_ptr[c])

    def _distances_from(self, i: int) -> tuple[np.ndarray, int]:
        """Distances from the representative of i's class, and g with rep^g = i."""
        return self._rep_distances(int(self.cls[i])), int(self.conjugator[i])

    def ball(self, x, radius: int) -> Ball:
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        i = self._vertex_id(x)
        d, g = self._distances_from(i)
        inside = np.flatnonzero((d >= 0) & (d <= radius))
        if g != 0:
            inside = np.array([self.table.conj(int(z), g) for z in inside], dtype=np.int64)
        ids = np.sort(self._pos[inside])
        return Ball(self.table.perm(i), radius, ids, self)

    def distance(self, x, y):
        i, j = self._vertex_id(x), self._vertex_id(y)
        d, g = self._distances_from(i)
        if g != 0:
            j = self.table.conj(j, int(self.table.inv[g]))
        return INF if d[j] < 0 else int(d[j])

    def _rep_ecc(self, c: int):
        d = self._rep_distances(c)
        dv = d[self.vertices]
        return INF if (dv < 0).any() else int(dv.max())

    def eccentricity(self, x):
        return self._rep_ecc(int(self.cls[self._vertex_id(x)]))

    def eccentricities(self) -> dict[Permutation, int | float]:
        """Eccentricity of each vertex class, keyed by its representative."""
        vals = self._map(self._rep_ecc, self.vertex_classes)
        return {self.table.perm(int(self.reps[c])): v
                for c, v in zip(self.vertex_classes, vals)}

    def diameter(self):
        if self.vertex_count == 0:
            return 0
        return max(self._map(self._rep_ecc, self.vertex_classes))

    def components(self) -> list[list[int]]:
        """Components as sorted lists of vertex indices, largest first, ties
        broken by least vertex."""
        dist = np.full(self.table.order, -1, dtype=np.int32)
        comps = []
        for v in self.vertices:
            if dist[v] >= 0:
                continue
            reached = K.bfs(self._T, np.array([v], dtype=np.int32), self.nbr_ptr, self.nbr_idx, self.cls,
                            self.conjugator, self.vertices, -1, dist)
            comps.append(sorted(self._pos[reached].tolist()))
        comps.sort(key=lambda c: (-len(c), c[0]))
        return comps

    def component_sizes(self) -> list[int]:
        return [len(c) for c in self.components()]

    def distances_from_set(self, sources, max_depth: int = -1) -> np.ndarray:
        """Distance from the nearest source for every element (-1 when
        unreachable or not a vertex), by one multi-source BFS."""
        ids = np.array(sorted({self._vertex_id(x) for x in sources}), dtype=np.int32)
        dist = np.full(self.table.order, -1, dtype=np.int32)
        if len(ids):
            K.bfs(self._T, ids, self.nbr_ptr, self.nbr_idx, self.cls, self.conjugator,
                  self.vertices, max_depth, dist)
        return dist

    # -- dense views -------------------------------------------------------

    def adjacency_matrix(self, cap: int = DENSE_CAP) -> np.ndarray:
        if self.vertex_count > cap:
            raise CapacityError("dense adjacency matrix", self.vertex_count, cap)
        return K.dense_adjacency(self._T, self.vertices, self._pos, self.nbr_ptr,
                                 self.nbr_idx, self.cls, self.conjugator)

    def is_cograph(self, cap: int = DENSE_CAP) -> CographResult:
        w = find_induced_p4(self.adjacency_matrix(cap))
        if w is None:
            return CographResult(True, None)
        return CographResult(False, tuple(self.vertex(i) for i in w))

    def complement_diameter(self, cap: int = DENSE_CAP):
        if self.kind is not PredicateKind.SOLUBLE:
            raise ValueError("complement diameter is defined for the soluble graph")
        adj = self.adjacency_matrix(cap)
        comp = ~adj
        np.fill_diagonal(comp, False)
        return dense_diameter(comp)


def graph_view(group: Group, kind: PredicateKind | str = PredicateKind.SOLUBLE,
               cap: int = DEFAULT_CAP, **kw) -> GraphView:
    return GraphView(group, kind, cap, **kw)


def find_induced_p4(adj: np.ndarray) -> tuple[int, int, int, int] | None:
    """Vertices a, b, c, d inducing the path a-b-c-d, or None if there is none."""
    w = K.find_induced_p4(np.ascontiguousarray(adj, dtype=np.bool_))
    return None if len(w) == 0 else tuple(int(v) for v in w)


def dense_diameter(adj: np.ndarray):
    if adj.shape[0] == 0:
        return 0
    ecc = K.dense_eccentricities(np.ascontiguousarray(adj, dtype=np.bool_))
    return INF if (ecc < 0).any() else int(ecc.max())
