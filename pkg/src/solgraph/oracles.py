"""Brute-force reference computations used to cross-check the fast paths.

These deliberately avoid the shortcuts of the main code: the diameter oracle
evaluates the predicate on every unordered pair and runs a BFS from every
vertex, and the solubility oracle forms derived subgroups from the full set
of element commutators.
"""

from __future__ import annotations

import numpy as np

from .graph import GraphView, dense_diameter
from .permcore import Group
from .permcore import kernels as K

NAIVE_CAP = 2520


def naive_adjacency(view: GraphView) -> np.ndarray:
    """Adjacency matrix over the vertices by one predicate call per pair."""
    t = view.table
    W = K.Workspace(t.order).as_tuple()
    return K.direct_pair_matrix(t.T, W, t.orders, view.kind.code, view.vertices,
                                view.group_flag)


def naive_diameter(view: GraphView, cap: int = NAIVE_CAP):
    if view.table.order > cap:
        raise ValueError(f"naive diameter limited to order {cap}")
    return dense_diameter(naive_adjacency(view))


def _generated(t, members: np.ndarray) -> np.ndarray:
    """Boolean mask of the subgroup generated by a set of element indices."""
    cay = t.T[7]
    mask = np.zeros(t.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0])
    gens = np.unique(members)
    while len(frontier):
        prods = cay[np.ix_(frontier, gens)].ravel()
        new = np.unique(prods[~mask[prods]])
        mask[new] = True
        frontier = new
    return mask


def brute_force_is_soluble(g: Group, cap: int = 3000) -> bool:
    """Derived series from all commutators [a, b] of the current term."""
    t = g.element_table(cap)
    cay = t.T[7]
    if cay.shape[0] == 0:
        raise ValueError("brute-force oracle needs a multiplication table")
    inv = t.inv
    cur = np.arange(t.order)
    while len(cur) > 1:
        a = cur[:, None]
        b = cur[None, :]
        comms = cay[cay[cay[inv[a], inv[b]], a], b]
        nxt = np.flatnonzero(_generated(t, comms.ravel()))
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True
