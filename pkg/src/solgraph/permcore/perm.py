"""Permutations of {0, ..., n-1} stored as image tuples.

Products act on the right: ``(p * q)(i) == q(p(i))``, so ``x ** g`` style
conjugation is ``g**-1 * x * g``.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

from ..errors import DegreeMismatchError


class Permutation:
    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(i) for i in images)
        n = len(img)
        if n == 0:
            raise ValueError("permutation must have positive degree")
        if sorted(img) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {img}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _trusted(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles; points not mentioned are fixed."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen:
                    raise ValueError(f"point {a} repeated")
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls._trusted(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse 1-based disjoint-cycle notation such as ``"(1,2,3)(4,5)"``."""
        cycles = parse_cycle_string(text)
        top = max((max(c) for c in cycles), default=0) + 1
        if degree is None:
            degree = max(top, 1)
        elif top > degree:
            raise ValueError(f"point {top} exceeds degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        return self._img

    def __call__(self, i: int) -> int:
        return self._img[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._img) != len(self._img):
            raise DegreeMismatchError(
                f"cannot compose degrees {self.degree} and {other.degree}")
        o = other._img
        return Permutation._trusted(tuple([o[i] for i in self._img]))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, in order of that point."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start] or self._img[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self._img[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self._img) if i != x]

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r}, {self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_string(text: str) -> list[list[int]]:
    """Parse 1-based cycle notation into 0-based cycles.

    Raises ValueError on unbalanced parentheses, stray characters or a point
    appearing twice.
    """
    s = "".join(text.split())
    if s in ("", "()"):
        return []
    pos = 0
    cycles: list[list[int]] = []
    seen: set[int] = set()
    while pos < len(s):
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            if "(" not in s[pos:] or s.count("(") != s.count(")"):
                raise ValueError(f"unbalanced parentheses at offset {pos}")
            raise ValueError(f"unexpected character {s[pos]!r} at offset {pos}")
        body = m.group(1)
        if body:
            cyc = []
            for tok in body.split(","):
                if not tok.isdigit() or int(tok) < 1:
                    raise ValueError(f"bad point {tok!r}")
                a = int(tok) - 1
                if a in seen:
                    raise ValueError(f"repeated point {a + 1}")
                seen.add(a)
                cyc.append(a)
            cycles.append(cyc)
        pos = m.end()
    return cycles
