"""Deterministic Schreier-Sims stabilizer chains on image tuples."""

from __future__ import annotations

import numpy as np


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple([b[x] for x in a])


def _inv(a: tuple) -> tuple:
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


class _Level:
    __slots__ = ("point", "gens", "transversal", "inv_transversal", "checked")

    def __init__(self, point: int, identity: tuple):
        self.point = point
        self.gens: list[tuple] = []
        self.transversal = {point: identity}
        self.inv_transversal = {point: identity}
        self.checked: set[tuple[int, int]] = set()

    def extend_orbit(self) -> None:
        queue = list(self.transversal)
        i = 0
        while i < len(queue):
            p = queue[i]
            i += 1
            u = self.transversal[p]
            for s in self.gens:
                q = s[p]
                if q not in self.transversal:
                    w = _mul(u, s)
                    self.transversal[q] = w
                    self.inv_transversal[q] = _inv(w)
                    queue.append(q)


class StabilizerChain:
    """Stabilizer chain built by Schreier-Sims with the smallest moved point as
    each new base point.  Generators can be added incrementally; transversals
    only ever grow, so previously checked Schreier generators stay valid.
    """

    def __init__(self, degree: int, generators=()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = []
        for g in generators:
            self.add_generator(tuple(g))

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def orbit_sizes(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self.levels]

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            u_inv = lvl.inv_transversal.get(g[lvl.point])
            if u_inv is None:
                return g, i
            g = _mul(g, u_inv)
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        r, _ = self.sift(tuple(g))
        return r == self.identity

    def add_generator(self, g: tuple) -> bool:
        """Add g; return True iff the group grew."""
        r, depth = self.sift(tuple(g))
        if r == self.identity:
            return False
        self._install(r, 0, depth)
        self._close(depth)
        return True

    def _install(self, r: tuple, lo: int, depth: int) -> None:
        if depth == len(self.levels):
            moved = next(i for i, x in enumerate(r) if i != x)
            self.levels.append(_Level(moved, self.identity))
        for lvl in self.levels[lo:depth + 1]:
            lvl.gens.append(r)
            lvl.extend_orbit()

    def _close(self, i: int) -> None:
        while i >= 0:
            lvl = self.levels[i]
            jumped = False
            for p in list(lvl.transversal):
                u = lvl.transversal[p]
                for k, s in enumerate(lvl.gens):
                    if (p, k) in lvl.checked:
                        continue
                    lvl.checked.add((p, k))
                    h = _mul(_mul(u, s), lvl.inv_transversal[s[p]])
                    r, depth = self.sift(h, i + 1)
                    if r == self.identity:
                        continue
                    self._install(r, i + 1, depth)
                    i = depth
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1

    def element_array(self) -> np.ndarray:
        """All group elements as rows of an int32 array (unsorted)."""
        elems = np.arange(self.degree, dtype=np.int32)[None, :]
        for lvl in reversed(self.levels):
            pts = sorted(lvl.transversal)
            U = np.array([lvl.transversal[p] for p in pts], dtype=np.int32)
            # row (a, b) is elems[b] followed by U[a]
            elems = U[:, elems].reshape(-1, self.degree)
        return elems
