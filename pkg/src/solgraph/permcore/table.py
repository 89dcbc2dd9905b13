"""Indexed listing of all elements of a group, feeding the compiled kernels."""

from __future__ import annotations

import numpy as np

from . import kernels as K
from .perm import Permutation

LUT_LIMIT = 1 << 25
CAYLEY_LIMIT = 3000


class ElementTable:
    """All elements of a group sorted lexicographically, with index lookup.

    Element i is row i of ``perms``; index 0 is the identity.
    """

    def __init__(self, group, *, cayley_limit: int = CAYLEY_LIMIT):
        chain = group.chain
        n = group.degree
        P = chain.element_array()
        order = np.lexsort(P.T[::-1])
        P = np.ascontiguousarray(P[order])
        self.perms = P
        self.degree = n
        self.order = P.shape[0]
        base = np.array(chain.base or [0], dtype=np.int64)
        if n ** len(base) >= 2 ** 62:
            raise OverflowError("element codes do not fit in 64 bits")
        mult = np.array([n ** j for j in range(len(base))], dtype=np.int64)
        codes = (P[:, base].astype(np.int64) * mult).sum(axis=1)
        size = n ** len(base)
        if size <= LUT_LIMIT:
            lut = np.full(size, -1, dtype=np.int32)
            lut[codes] = np.arange(self.order, dtype=np.int32)
            skeys = np.empty(0, dtype=np.int64)
            sidx = np.empty(0, dtype=np.int32)
        else:
            lut = np.empty(0, dtype=np.int32)
            perm = np.argsort(codes)
            skeys = np.ascontiguousarray(codes[perm])
            sidx = perm.astype(np.int32)
        self._base = base
        self._mult = mult
        inv_perms = np.argsort(P, axis=1).astype(np.int32)
        inv_codes = (inv_perms[:, base].astype(np.int64) * mult).sum(axis=1)
        if lut.shape[0]:
            inv = lut[inv_codes]
        else:
            inv = sidx[np.searchsorted(skeys, inv_codes)]
        empty_cay = np.zeros((0, 0), dtype=np.int32)
        T = (P, base, mult, lut, skeys, sidx, inv.astype(np.int32), empty_cay)
        if self.order <= cayley_limit:
            T = T[:7] + (K.cayley_table(T),)
        self.T = T
        self.inv = T[6]
        self.orders = K.element_orders(T)
        self._gens = np.array([self.index_of(g) for g in group.generators
                               if not g.is_identity()] or [0], dtype=np.int32)
        self._classes = None

    def index_of(self, p) -> int:
        img = p.images if isinstance(p, Permutation) else tuple(p)
        if len(img) != self.degree:
            return -1
        code = sum(img[b] * m for b, m in zip(self._base.tolist(), self._mult.tolist()))
        idx = int(K.lookup(self.T, code)) if code >= 0 else -1
        if idx < 0 or tuple(self.perms[idx].tolist()) != tuple(img):
            return -1
        return idx

    def perm(self, i: int) -> Permutation:
        return Permutation._trusted(tuple(self.perms[i].tolist()))

    def mul(self, a: int, b: int) -> int:
        return int(K.mul(self.T, a, b))

    def conj(self, y: int, g: int) -> int:
        return int(K.conj(self.T, y, g))

    @property
    def generator_indices(self) -> np.ndarray:
        return self._gens

    def classes(self):
        """(class id per element, conjugator from rep per element, reps)."""
        if self._classes is None:
            self._classes = K.conjugacy_classes(self.T, self._gens)
        return self._classes
