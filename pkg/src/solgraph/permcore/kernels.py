"""Compiled kernels over an indexed element table.

A table ``T`` is the tuple ``(P, base, mult, lut, skeys, sidx, inv, cay)``:

* ``P`` -- (N, n) int32, all elements sorted lexicographically (identity is 0)
* ``base``/``mult`` -- base points and radix weights; the images of the base
  determine an element, and ``sum(img[base[j]] * mult[j])`` is its code
* ``lut`` -- code -> index, or empty when too large (then ``skeys``/``sidx``
  give a sorted code list for binary search)
* ``inv`` -- index of the inverse
* ``cay`` -- full multiplication table, or a (0, 0) array when not built

Subgroup closures use "stamped" mark arrays: ``mark[i] == st[0]`` means i is a
member of the most recent closure, so resetting costs O(1).
"""

from __future__ import annotations

import numpy as np
from numba import njit

SOLUBLE, ABELIAN, NILPOTENT, METABELIAN, METACYCLIC = 0, 1, 2, 3, 4


# The helpers below are inlined at the IR level: as ordinary calls each one
# would pay reference-count updates on every array of T, ten times the cost
# of the multiplication itself.

@njit(cache=True, nogil=True, inline="always")
def lookup(T, code):
    lut = T[3]
    if lut.shape[0] > 0:
        return lut[code]
    skeys = T[4]
    lo = 0
    hi = skeys.shape[0]
    while lo < hi:
        mid = (lo + hi) >> 1
        if skeys[mid] < code:
            lo = mid + 1
        else:
            hi = mid
    if lo < skeys.shape[0] and skeys[lo] == code:
        return T[5][lo]
    return -1


@njit(cache=True, nogil=True, inline="always")
def mul(T, a, b):
    cay = T[7]
    if cay.shape[0] > 0:
        return cay[a, b]
    P = T[0]
    base = T[1]
    mult = T[2]
    code = 0
    for j in range(base.shape[0]):
        code += P[b, P[a, base[j]]] * mult[j]
    return lookup(T, code)


@njit(cache=True, nogil=True, inline="always")
def conj(T, y, g):
    """Index of g^-1 y g."""
    return mul(T, mul(T, T[6][g], y), g)


@njit(cache=True, nogil=True, inline="always")
def comm(T, a, b):
    inv = T[6]
    return mul(T, mul(T, mul(T, inv[a], inv[b]), a), b)


@njit(cache=True, nogil=True)
def cayley_table(T):
    P = T[0]
    base = T[1]
    mult = T[2]
    N = P.shape[0]
    out = np.empty((N, N), dtype=np.int32)
    for a in range(N):
        for b in range(N):
            code = 0
            for j in range(base.shape[0]):
                code += P[b, P[a, base[j]]] * mult[j]
            out[a, b] = lookup(T, code)
    return out


@njit(cache=True, nogil=True)
def element_orders(T):
    N = T[0].shape[0]
    out = np.empty(N, dtype=np.int32)
    for e in range(N):
        p = e
        k = 1
        while p != 0:
            p = mul(T, p, e)
            k += 1
        out[e] = k
    return out


@njit(cache=True, nogil=True)
def conjugacy_classes(T, gens):
    """Class id and a conjugator from the class representative for each element.

    Representatives are the least indices, i.e. lexicographically least.
    """
    N = T[0].shape[0]
    cls = np.full(N, -1, dtype=np.int32)
    conjugator = np.zeros(N, dtype=np.int32)
    reps = np.empty(N, dtype=np.int32)
    queue = np.empty(N, dtype=np.int32)
    nc = 0
    for e in range(N):
        if cls[e] >= 0:
            continue
        cls[e] = nc
        reps[nc] = e
        conjugator[e] = 0
        queue[0] = e
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(gens.shape[0]):
                w = conj(T, v, gens[k])
                if cls[w] < 0:
                    cls[w] = nc
                    conjugator[w] = mul(T, conjugator[v], gens[k])
                    queue[tail] = w
                    tail += 1
        nc += 1
    return cls, conjugator, reps[:nc].copy()


@njit(cache=True, nogil=True)
def _search(skeys, sidx, code):
    lo = 0
    hi = skeys.shape[0]
    while lo < hi:
        mid = (lo + hi) >> 1
        if skeys[mid] < code:
            lo = mid + 1
        else:
            hi = mid
    if lo < skeys.shape[0] and skeys[lo] == code:
        return sidx[lo]
    return -1


@njit(cache=True, nogil=True)
def _closure(T, gens, ngens, mark, st, out, limit):
    """Enumerate <gens[:ngens]> into out, stopping once `limit` is passed.

    Multiplication is written out by hand here: this is the innermost loop of
    every predicate, and hoisting the arrays out of T runs several times
    faster than calling mul().
    """
    P, base, mult, lut, skeys, sidx, cay = T[0], T[1], T[2], T[3], T[4], T[5], T[7]
    use_cay = cay.shape[0] > 0
    use_lut = lut.shape[0] > 0
    nb = base.shape[0]
    st[0] += 1
    s = st[0]
    out[0] = 0
    mark[0] = s
    cnt = 1
    i = 0
    while i < cnt:
        e = out[i]
        i += 1
        for k in range(ngens):
            g = gens[k]
            if use_cay:
                p = cay[e, g]
            else:
                code = 0
                for j in range(nb):
                    code += P[g, P[e, base[j]]] * mult[j]
                p = lut[code] if use_lut else _search(skeys, sidx, code)
            if mark[p] != s:
                mark[p] = s
                out[cnt] = p
                cnt += 1
                if cnt > limit:
                    return cnt
    return cnt


@njit(cache=True, nogil=True)
def closure(T, gens, ngens, mark, st, out):
    """Enumerate <gens[:ngens]> into out; returns its size."""
    return _closure(T, gens, ngens, mark, st, out, T[0].shape[0])


@njit(cache=True, nogil=True)
def closure_or_whole(T, gens, ngens, mark, st, out):
    """Like closure, but returns N (leaving out incomplete) as soon as more
    than half the group is reached, since the subgroup is then everything."""
    N = T[0].shape[0]
    cnt = _closure(T, gens, ngens, mark, st, out, N // 2)
    return N if 2 * cnt > N else cnt


@njit(cache=True, nogil=True)
def normal_closure(T, seeds, nseeds, conj_by, nconj, gens_out, mark, st, buf):
    """Normal closure of seeds under conjugation by conj_by.

    Generators that enlarge the subgroup are written to gens_out; returns
    (number of generators, subgroup order).  Membership afterwards is
    ``mark[i] == st[0]``.
    """
    ng = 0
    size = closure(T, gens_out, 0, mark, st, buf)
    for i in range(nseeds):
        c = seeds[i]
        if mark[c] != st[0]:
            gens_out[ng] = c
            ng += 1
            size = closure(T, gens_out, ng, mark, st, buf)
    q = 0
    while q < ng:
        x = gens_out[q]
        q += 1
        for k in range(nconj):
            c = conj(T, x, conj_by[k])
            if mark[c] != st[0]:
                gens_out[ng] = c
                ng += 1
                size = closure(T, gens_out, ng, mark, st, buf)
    return ng, size


class Workspace:
    """Scratch arrays for one thread of predicate evaluation."""

    def __init__(self, N: int):
        self.markH = np.zeros(N, dtype=np.int64)
        self.stH = np.zeros(1, dtype=np.int64)
        self.bufH = np.empty(N, dtype=np.int32)
        self.markD = np.zeros(N, dtype=np.int64)
        self.stD = np.zeros(1, dtype=np.int64)
        self.bufD = np.empty(N, dtype=np.int32)
        self.markC = np.zeros(N, dtype=np.int64)
        self.stC = np.zeros(1, dtype=np.int64)
        self.g1 = np.empty(256, dtype=np.int32)
        self.g2 = np.empty(256, dtype=np.int32)
        self.seeds = np.empty(4096, dtype=np.int32)

    def as_tuple(self):
        return (self.markH, self.stH, self.bufH, self.markD, self.stD,
                self.bufD, self.markC, self.stC, self.g1, self.g2, self.seeds)


@njit(cache=True, nogil=True)
def _series_trivial(T, W, x, y, size_h, lower):
    """Derived (lower=False) or lower central (lower=True) series of <x,y>
    reaches 1?  size_h is |<x,y>|."""
    markD, stD, bufD, g1, g2, seeds = W[3], W[4], W[5], W[8], W[9], W[10]
    outer = np.empty(2, dtype=np.int32)
    outer[0] = x
    outer[1] = y
    g1[0] = x
    g1[1] = y
    ncur = 2
    cur_size = size_h
    cur = g1
    other = g2
    while True:
        ns = 0
        if lower:
            for i in range(ncur):
                for k in range(2):
                    seeds[ns] = comm(T, cur[i], outer[k])
                    ns += 1
            ng, size = normal_closure(T, seeds, ns, outer, 2, other, markD, stD, bufD)
        else:
            for i in range(ncur):
                for j in range(i + 1, ncur):
                    seeds[ns] = comm(T, cur[i], cur[j])
                    ns += 1
            ng, size = normal_closure(T, seeds, ns, cur, ncur, other, markD, stD, bufD)
        if size == 1:
            return True
        if size == cur_size:
            return False
        tmp = cur
        cur = other
        other = tmp
        ncur = ng
        cur_size = size


@njit(cache=True, nogil=True)
def _metacyclic(T, W, orders, x, y, size_h):
    markH, stH, bufH, markD, stD, markC, stC = W[0], W[1], W[2], W[3], W[4], W[6], W[7]
    for i in range(size_h):
        if orders[bufH[i]] == size_h:
            return True
    # bufH holds <x,y>; markC flags elements whose cyclic subgroup was tried
    stC[0] += 1
    done = stC[0]
    for i in range(size_h):
        c = bufH[i]
        if c == 0 or markC[c] == done:
            continue
        m = orders[c]
        stD[0] += 1
        sN = stD[0]
        p = 0
        for k in range(m):
            markD[p] = sN
            if k > 0:
                a, b = k, m
                while b:
                    a, b = b, a % b
                if a == 1:
                    markC[p] = done
            p = mul(T, p, c)
        if markD[conj(T, c, x)] != sN or markD[conj(T, c, y)] != sN:
            continue
        t = size_h // m
        for j in range(size_h):
            h = bufH[j]
            p = h
            s = 1
            while markD[p] != sN:
                p = mul(T, p, h)
                s += 1
            if s == t:
                return True
    return False


@njit(cache=True, nogil=True)
def pair_predicate(T, W, orders, kind, x, y, group_flag):
    """Does <x,y> lie in the family `kind`?  On return W's H-buffer holds the
    members of <x,y> (the return value's second entry is its order, or 0 when
    the subgroup was not enumerated; when it equals N the buffer may be
    incomplete)."""
    xy = mul(T, x, y)
    yx = mul(T, y, x)
    if xy == yx:
        return True, 0
    if kind == ABELIAN:
        return False, 0
    N = T[0].shape[0]
    gens = np.empty(2, dtype=np.int32)
    gens[0] = x
    gens[1] = y
    size_h = closure_or_whole(T, gens, 2, W[0], W[1], W[2])
    if size_h == N:
        return group_flag, size_h
    if kind == SOLUBLE:
        return _series_trivial(T, W, x, y, size_h, False), size_h
    if kind == NILPOTENT:
        return _series_trivial(T, W, x, y, size_h, True), size_h
    if kind == METABELIAN:
        markD, stD, bufD, g1, seeds = W[3], W[4], W[5], W[8], W[10]
        seeds[0] = comm(T, x, y)
        ng, size = normal_closure(T, seeds, 1, gens, 2, g1, markD, stD, bufD)
        for i in range(ng):
            for j in range(i + 1, ng):
                if mul(T, g1[i], g1[j]) != mul(T, g1[j], g1[i]):
                    return False, size_h
        return True, size_h
    return _metacyclic(T, W, orders, x, y, size_h), size_h


@njit(cache=True, nogil=True)
def neighbor_status(T, W, orders, kind, r, cent, group_flag, status):
    """Fill status[y] = 1 if <r,y> is in the family, else 2.

    Three reductions keep the number of subgroup computations small:
    the elements r^i y^k with k prime to |y| generate the same subgroup
    together with r as y does; the outcome is constant on orbits of the
    centralizer `cent` of r; and when <r,y> is in the family so is every
    <r,m> with m in <r,y>, as the families are subgroup-closed.
    """
    N = T[0].shape[0]
    bufH = W[2]
    status[:] = 0
    status[0] = 1
    status[r] = 1
    ypow = np.empty(orders.max() + 1, dtype=np.int32)
    for y in range(N):
        if status[y] != 0:
            continue
        ok, size_h = pair_predicate(T, W, orders, kind, r, y, group_flag)
        val = 1 if ok else 2
        oy = orders[y]
        p = y
        for k in range(1, oy):
            ypow[k] = p
            p = mul(T, p, y)
        rp = 0
        for i in range(orders[r]):
            for k in range(1, oy):
                a, b = k, oy
                while b:
                    a, b = b, a % b
                if a != 1:
                    continue
                z = mul(T, rp, ypow[k])
                for j in range(cent.shape[0]):
                    status[conj(T, z, cent[j])] = val
            rp = mul(T, rp, r)
        if ok and 0 < size_h < N:
            for i in range(size_h):
                status[bufH[i]] = 1
    return 0


@njit(cache=True, nogil=True)
def centralizer(T, x):
    N = T[0].shape[0]
    out = np.empty(N, dtype=np.int32)
    c = 0
    for g in range(N):
        if mul(T, x, g) == mul(T, g, x):
            out[c] = g
            c += 1
    return out[:c].copy()


@njit(cache=True, nogil=True)
def bfs(T, sources, nbr_ptr, nbr_idx, cls, conjugator, vertices, max_depth, dist):
    """Level-synchronous BFS from a set of sources in a conjugation-invariant graph.

    The neighbourhood of rep^g is (neighbours of rep)^g, where rep is the
    class representative and g = conjugator[v].  Levels switch to bottom-up
    scanning (each unvisited vertex looks for a parent in the frontier) when
    that is estimated to be cheaper.  dist must be -1 on every vertex not yet
    reached; returns the vertices reached, in BFS order.
    """
    P, base, mult, lut, skeys, sidx, inv, cay = T
    use_cay = cay.shape[0] > 0
    use_lut = lut.shape[0] > 0
    nb = base.shape[0]
    gb = np.empty(nb, dtype=np.int64)  # base points pulled back through g^-1
    V = vertices.shape[0]
    order = np.empty(V, dtype=np.int32)
    remaining = 0
    total_deg = 0
    for i in range(V):
        v = vertices[i]
        if dist[v] < 0:
            remaining += 1
        total_deg += nbr_ptr[cls[v] + 1] - nbr_ptr[cls[v]]
    avg_deg = total_deg / max(V, 1)
    hi = 0
    for i in range(sources.shape[0]):
        v = sources[i]
        if dist[v] < 0:
            dist[v] = 0
            order[hi] = v
            hi += 1
    remaining -= hi
    lo = 0
    d = 0
    while lo < hi and remaining > 0:
        if max_depth >= 0 and d >= max_depth:
            break
        top_cost = 0
        for i in range(lo, hi):
            c = cls[order[i]]
            top_cost += nbr_ptr[c + 1] - nbr_ptr[c]
        tail = hi
        if top_cost <= remaining * avg_deg / 2:
            for i in range(lo, hi):
                v = order[i]
                c = cls[v]
                g = conjugator[v]
                if g != 0 and not use_cay:
                    for j in range(nb):
                        gb[j] = P[inv[g], base[j]]
                for k in range(nbr_ptr[c], nbr_ptr[c + 1]):
                    z = nbr_idx[k]
                    if g != 0:
                        if use_cay:
                            z = cay[cay[inv[g], z], g]
                        else:
                            code = 0
                            for j in range(nb):
                                code += P[g, P[z, gb[j]]] * mult[j]
                            z = lut[code] if use_lut else _search(skeys, sidx, code)
                    if dist[z] < 0:
                        dist[z] = d + 1
                        order[tail] = z
                        tail += 1
        else:
            for i in range(V):
                z = vertices[i]
                if dist[z] >= 0:
                    continue
                c = cls[z]
                g = conjugator[z]
                if g != 0 and not use_cay:
                    for j in range(nb):
                        gb[j] = P[inv[g], base[j]]
                for k in range(nbr_ptr[c], nbr_ptr[c + 1]):
                    w = nbr_idx[k]
                    if g != 0:
                        if use_cay:
                            w = cay[cay[inv[g], w], g]
                        else:
                            code = 0
                            for j in range(nb):
                                code += P[g, P[w, gb[j]]] * mult[j]
                            w = lut[code] if use_lut else _search(skeys, sidx, code)
                    if dist[w] == d:
                        dist[z] = d + 1
                        order[tail] = z
                        tail += 1
                        break
        remaining -= tail - hi
        lo = hi
        hi = tail
        d += 1
    return order[:hi].copy()


@njit(cache=True, nogil=True)
def dense_adjacency(T, vertices, pos, nbr_ptr, nbr_idx, cls, conjugator):
    V = vertices.shape[0]
    adj = np.zeros((V, V), dtype=np.bool_)
    for i in range(V):
        v = vertices[i]
        c = cls[v]
        g = conjugator[v]
        for k in range(nbr_ptr[c], nbr_ptr[c + 1]):
            z = nbr_idx[k]
            if g != 0:
                z = conj(T, z, g)
            adj[i, pos[z]] = True
    return adj


@njit(cache=True, nogil=True)
def direct_pair_matrix(T, W, orders, kind, vertices, group_flag):
    """Adjacency by evaluating the predicate on every unordered pair directly."""
    V = vertices.shape[0]
    adj = np.zeros((V, V), dtype=np.bool_)
    for i in range(V):
        for j in range(i + 1, V):
            ok, _ = pair_predicate(T, W, orders, kind, vertices[i], vertices[j], group_flag)
            if ok:
                adj[i, j] = True
                adj[j, i] = True
    return adj


@njit(cache=True, nogil=True)
def dense_eccentricities(adj):
    """Eccentricity of every vertex of a graph given by a dense matrix;
    -1 marks a vertex that cannot reach everything."""
    V = adj.shape[0]
    deg = np.zeros(V + 1, dtype=np.int64)
    for i in range(V):
        for j in range(V):
            if adj[i, j]:
                deg[i + 1] += 1
    for i in range(V):
        deg[i + 1] += deg[i]
    nbr = np.empty(deg[V], dtype=np.int32)
    for i in range(V):
        k = deg[i]
        for j in range(V):
            if adj[i, j]:
                nbr[k] = j
                k += 1
    ecc = np.empty(V, dtype=np.int64)
    dist = np.empty(V, dtype=np.int64)
    queue = np.empty(V, dtype=np.int64)
    for s in range(V):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(deg[v], deg[v + 1]):
                w = nbr[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
        ecc[s] = -1 if tail < V else dist[queue[tail - 1]]
    return ecc


@njit(cache=True, nogil=True)
def find_induced_p4(adj):
    """Return an induced path a-b-c-d as an int array, or an empty array.

    Every induced P4 has a middle edge b-c with a in N(b)\\N[c], d in N(c)\\N[b]
    and a, d non-adjacent; scanning all edges in index order is exhaustive.
    """
    V = adj.shape[0]
    for b in range(V):
        for c in range(V):
            if b == c or not adj[b, c]:
                continue
            for a in range(V):
                if a == b or a == c or not adj[a, b] or adj[a, c]:
                    continue
                for d in range(V):
                    if d == a or d == b or d == c:
                        continue
                    if adj[d, c] and not adj[d, b] and not adj[a, d]:
                        out = np.empty(4, dtype=np.int64)
                        out[0] = a
                        out[1] = b
                        out[2] = c
                        out[3] = d
                        return out
    return np.empty(0, dtype=np.int64)
