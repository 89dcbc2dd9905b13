"""Constructions of the named groups."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

from ..errors import GeneratorFileError, UnsupportedParameterError
from ..permcore import (
    Group, Permutation, direct_product, parse_cycle_string,
    quotient_by, soluble_radical, wreath_s2,
)
from .fields import GF, prime_power
from .spec import (
    PGL2, PSL2, SL2, Alt, FromFile, GroupSpec, Named, Product,
    QuotientByRadical, Sym, WreathS2, parse_spec,
)

MAX_DEGREE = 4096


def alternating(n: int) -> Group:
    if n < 1:
        raise UnsupportedParameterError("A(n) needs n >= 1")
    if n < 3:
        return Group([Permutation.identity(n)])
    gens = [Permutation.from_cycles([[0, 1, 2]], n)]
    if n > 3:
        cyc = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Permutation.from_cycles([cyc], n))
    return Group(gens)


def symmetric(n: int) -> Group:
    if n < 1:
        raise UnsupportedParameterError("S(n) needs n >= 1")
    if n == 1:
        return Group([Permutation.identity(1)])
    gens = [Permutation.from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([list(range(n))], n))
    return Group(gens)


class ProjectiveLine:
    """Points of PG(1, q): index 0 is infinity, index 1 + a is the field element a."""

    def __init__(self, field: GF):
        self.F = field
        self.size = field.q + 1

    def point(self, x: int, y: int) -> int:
        """Index of the point with homogeneous coordinates (x, y), i.e. x/y."""
        F = self.F
        if y == 0:
            return 0
        return 1 + F.mul(x, F.inv(y))

    def coords(self, i: int) -> tuple[int, int]:
        return (1, 0) if i == 0 else (i - 1, 1)

    def matrix_perm(self, m) -> Permutation:
        """Permutation induced by the row-vector action (x, y) -> (x, y) m."""
        (a, b), (c, d) = m
        F = self.F
        img = []
        for i in range(self.size):
            x, y = self.coords(i)
            img.append(self.point(F.add(F.mul(x, a), F.mul(y, c)),
                                  F.add(F.mul(x, b), F.mul(y, d))))
        return Permutation(img)

    def frobenius_perm(self) -> Permutation:
        F = self.F
        return Permutation([0] + [1 + F.frobenius(a) for a in range(F.q)])


def _field(q: int) -> GF:
    if prime_power(q) is None:
        raise UnsupportedParameterError(f"q = {q} is not a prime power")
    return GF(q)


def _sl2_matrices(F: GF):
    w = F.primitive
    one, zero = 1, 0
    return [
        ((w, zero), (zero, F.inv(w))),
        ((one, one), (zero, one)),
        ((zero, one), (F.neg(one), zero)),
    ]


def psl2(q: int) -> Group:
    F = _field(q)
    line = ProjectiveLine(F)
    g = Group([line.matrix_perm(m) for m in _sl2_matrices(F)])
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if g.order() != expected:
        raise AssertionError(f"PSL2({q}) order {g.order()} != {expected}")
    return g


def pgl2(q: int) -> Group:
    F = _field(q)
    line = ProjectiveLine(F)
    mats = _sl2_matrices(F) + [((F.primitive, 0), (0, 1))]
    g = Group([line.matrix_perm(m) for m in mats])
    if g.order() != q * (q * q - 1):
        raise AssertionError(f"PGL2({q}) order mismatch")
    return g


def sl2(q: int) -> Group:
    """SL(2, q) on the q^2 - 1 nonzero row vectors, indexed by x*q + y - 1."""
    F = _field(q)
    vecs = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for (a, b), (c, d) in _sl2_matrices(F):
        gens.append(Permutation([
            index[(F.add(F.mul(x, a), F.mul(y, c)), F.add(F.mul(x, b), F.mul(y, d)))]
            for x, y in vecs]))
    g = Group(gens)
    if g.order() != q * (q * q - 1):
        raise AssertionError(f"SL2({q}) order mismatch")
    return g


def pgammal2_9() -> Group:
    F = GF(9)
    line = ProjectiveLine(F)
    g = Group(list(pgl2(9).generators) + [line.frobenius_perm()])
    if g.order() != 1440:
        raise AssertionError("PGammaL2(9) order mismatch")
    return g


def m10() -> Group:
    """M10 = A6.2 (order 720): PSL2(9) extended by diag(w, 1) composed with
    the Frobenius map.  It is the index-2 subgroup of PGammaL2(9) other than
    PGL2(9) and S6.

    Built inside PGammaL2(9) so it shares its A6 = PSL2(9) with PGL2(9) and
    PGammaL2(9).
    """
    F = GF(9)
    line = ProjectiveLine(F)
    delta = line.matrix_perm(((F.primitive, 0), (0, 1)))
    g = Group(list(psl2(9).generators) + [delta * line.frobenius_perm()])
    if g.order() != 720:
        raise AssertionError("M10 order mismatch")
    return g


def _data_file(name: str) -> str:
    return resources.files("solgraph.catalog").joinpath("data", name).read_text()


def mathieu(n: int) -> Group:
    gens = parse_generator_text(_data_file(f"m{n}.gens"))
    g = Group(gens)
    expected = {11: 7920, 12: 95040}[n]
    if g.order() != expected:
        raise AssertionError(f"M{n} order {g.order()} != {expected}")
    return g


def l3_3_2() -> Group:
    """L3(3).2 on the 26 points and lines of PG(2, 3) (shipped generator file)."""
    g = Group(parse_generator_text(_data_file("l3_3_2.gens")))
    if g.order() != 11232:
        raise AssertionError("L3(3).2 order mismatch")
    return g


def data_path(name: str) -> str:
    """Filesystem path of a shipped generator file, usable in a 'file:' spec."""
    return str(resources.files("solgraph.catalog").joinpath("data", name))


def parse_generator_text(text: str) -> list[Permutation]:
    """One permutation per line in 1-based cycle notation; '#' comments;
    optional ``degree N`` header overriding the largest point named."""
    degree = None
    cycles_list: list[list[list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("degree"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise GeneratorFileError("bad degree header", lineno)
            if cycles_list:
                raise GeneratorFileError("degree header must precede permutations", lineno)
            degree = int(parts[1])
            continue
        try:
            cycles_list.append((lineno, parse_cycle_string(line)))
        except ValueError as exc:
            raise GeneratorFileError(str(exc), lineno) from None
    if not cycles_list:
        raise GeneratorFileError("no permutations in file")
    top = max((max(c) + 1 for _, cycles in cycles_list for c in cycles), default=1)
    if degree is None:
        degree = top
    if top > degree:
        raise GeneratorFileError(f"point {top} exceeds declared degree {degree}")
    if degree > MAX_DEGREE:
        raise GeneratorFileError(f"degree {degree} exceeds {MAX_DEGREE}")
    return [Permutation.from_cycles(cycles, degree) for _, cycles in cycles_list]


def load_generator_file(path) -> list[Permutation]:
    p = Path(path)
    try:
        text = p.read_text()
    except FileNotFoundError:
        raise GeneratorFileError(f"file not found: {path}") from None
    except OSError as exc:
        raise GeneratorFileError(f"cannot read {path}: {exc}") from None
    return parse_generator_text(text)


def _build(node: GroupSpec) -> Group:
    if isinstance(node, Alt):
        return alternating(node.n)
    if isinstance(node, Sym):
        return symmetric(node.n)
    if isinstance(node, (PSL2, PGL2, SL2)):
        if node.q < 2:
            raise UnsupportedParameterError(f"q = {node.q} is too small")
        return {PSL2: psl2, PGL2: pgl2, SL2: sl2}[type(node)](node.q)
    if isinstance(node, Named):
        return {"PGammaL2_9": pgammal2_9, "M10": m10,
                "M11": lambda: mathieu(11), "M12": lambda: mathieu(12)}[node.name]()
    if isinstance(node, FromFile):
        return Group(load_generator_file(node.path))
    if isinstance(node, Product):
        return direct_product(_build(node.left), _build(node.right)).group
    if isinstance(node, WreathS2):
        return wreath_s2(_build(node.base))
    if isinstance(node, QuotientByRadical):
        g = _build(node.base)
        return quotient_by(g, soluble_radical(g))[0]
    raise TypeError(f"unknown spec node {node!r}")


@lru_cache(maxsize=64)
def _build_cached(node: GroupSpec) -> Group:
    return _build(node)


def build(spec: GroupSpec | str) -> Group:
    """Build a group from a spec node or spec text (results are cached)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, FromFile):
        return _build(spec)
    return _build_cached(spec)
