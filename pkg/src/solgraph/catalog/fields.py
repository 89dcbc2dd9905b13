"""Small finite fields GF(p^k).

An element is stored as the integer sum(c_i * p**i) of its coefficient vector
(c_0, ..., c_{k-1}) with respect to the basis 1, x, ..., x^{k-1} modulo a fixed
irreducible polynomial.  Arithmetic goes through precomputed tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import UnsupportedParameterError

MAX_FIELD = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic m (coefficient lists, lowest degree first)."""
    a = a[:]
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return a


def _monic_polys(p: int, d: int):
    for coeffs in product(range(p), repeat=d):
        yield list(reversed(coeffs)) + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_mod(f, g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def irreducible_poly(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of degree k over F_p.

    Coefficients are returned lowest degree first (the leading 1 included).
    "Least" compares the lower coefficients as the integer sum(c_i p^i).
    """
    if k < 1:
        raise ValueError("degree must be positive")
    for code in range(p ** k):
        f = [(code // p ** i) % p for i in range(k)] + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with q = p^k elements."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise UnsupportedParameterError(f"{q} is not a prime power")
        if q > MAX_FIELD:
            raise UnsupportedParameterError(f"field size {q} exceeds {MAX_FIELD}")
        self.q = q
        self.p, self.k = pk
        self.modulus = irreducible_poly(self.p, self.k)
        self._build_tables()

    def _vec(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _int(self, v: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(v))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        vecs = [self._vec(a) for a in range(q)]
        self.add_table = [[self._int([(x + y) % p for x, y in zip(vecs[a], vecs[b])])
                           for b in range(q)] for a in range(q)]
        self.neg_table = [self._int([(-x) % p for x in vecs[a]]) for a in range(q)]
        mod = list(self.modulus)
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod_ = [0] * (2 * self.k - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prod_[i + j] += x * y
                r = _poly_mod([c % p for c in prod_], mod, p) if self.k > 1 else [prod_[0] % p]
                mul[a][b] = mul[b][a] = self._int(r + [0] * (self.k - len(r)))
        self.mul_table = mul
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        self.primitive = next(a for a in range(2 if q > 2 else 1, q) if self.mult_order(a) == q - 1)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def element(self, a: int) -> "FieldElement":
        return FieldElement(self, a)

    def __iter__(self):
        return (FieldElement(self, a) for a in range(self.q))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element code of {field!r}")
        self.value = value

    @property
    def coefficients(self) -> list[int]:
        return self.field._vec(self.value)

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, o): return self._wrap(self.field.add(self.value, o.value))
    def __sub__(self, o): return self._wrap(self.field.sub(self.value, o.value))
    def __mul__(self, o): return self._wrap(self.field.mul(self.value, o.value))
    def __neg__(self): return self._wrap(self.field.neg(self.value))

    def __truediv__(self, o):
        return self._wrap(self.field.mul(self.value, self.field.inv(o.value)))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def __eq__(self, o) -> bool:
        return isinstance(o, FieldElement) and o.field.q == self.field.q and o.value == self.value

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.value}]"
