"""Group-construction language.

Grammar (whitespace is insignificant, names are case-insensitive)::

    spec    := product
    product := wreath ('x' wreath)*              left-associative
    wreath  := atom ('wr2')*                     postfix H wr S2
    atom    := NAME '(' INT ')'                  A, S, PSL2 (alias L2), PGL2, SL2
             | NAME ['(' ')']                    PGammaL2_9, M10, M11, M12
             | 'radquot' '(' spec ')'            quotient by the soluble radical
             | 'wr2' '(' spec ')'
             | 'file:' PATH                      PATH runs to whitespace or ')'
             | '(' spec ')'
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SpecSyntaxError


class GroupSpec:
    """Base class of spec syntax-tree nodes."""

    def text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Alt(GroupSpec):
    n: int

    def text(self) -> str:
        return f"A({self.n})"


@dataclass(frozen=True)
class Sym(GroupSpec):
    n: int

    def text(self) -> str:
        return f"S({self.n})"


@dataclass(frozen=True)
class PSL2(GroupSpec):
    q: int

    def text(self) -> str:
        return f"PSL2({self.q})"


@dataclass(frozen=True)
class PGL2(GroupSpec):
    q: int

    def text(self) -> str:
        return f"PGL2({self.q})"


@dataclass(frozen=True)
class SL2(GroupSpec):
    q: int

    def text(self) -> str:
        return f"SL2({self.q})"


@dataclass(frozen=True)
class Named(GroupSpec):
    """Parameterless groups: PGammaL2_9, M10, M11, M12."""
    name: str

    def text(self) -> str:
        return self.name


@dataclass(frozen=True)
class FromFile(GroupSpec):
    path: str

    def text(self) -> str:
        return f"file:{self.path}"


@dataclass(frozen=True)
class Product(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    def text(self) -> str:
        r = self.right.text()
        if isinstance(self.right, Product):
            r = f"({r})"
        return f"{self.left.text()} x {r}"


@dataclass(frozen=True)
class WreathS2(GroupSpec):
    base: GroupSpec

    def text(self) -> str:
        return f"wr2({self.base.text()})"


@dataclass(frozen=True)
class QuotientByRadical(GroupSpec):
    base: GroupSpec

    def text(self) -> str:
        return f"radquot({self.base.text()})"


_ONE_ARG = {"a": Alt, "s": Sym, "psl2": PSL2, "l2": PSL2, "pgl2": PGL2, "sl2": SL2}
_NO_ARG = {"pgammal2_9": "PGammaL2_9", "m10": "M10", "m11": "M11", "m12": "M12"}


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def error(self, msg: str, at: int | None = None):
        raise SpecSyntaxError(msg, self.i if at is None else at)

    def skip(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.s[self.i]) if self.i < len(self.s) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.i += 1

    def keyword(self, word: str) -> bool:
        self.skip()
        j = self.i + len(word)
        if self.s[self.i:j].lower() != word:
            return False
        self.i = j
        return True

    def name(self) -> str:
        self.skip()
        j = self.i
        while j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_"):
            j += 1
        if j == self.i:
            found = repr(self.s[self.i]) if self.i < len(self.s) else "end of input"
            self.error(f"expected a group name, found {found}")
        word = self.s[self.i:j]
        self.i = j
        return word

    def integer(self) -> int:
        self.skip()
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            self.error("expected an integer")
        val = int(self.s[self.i:j])
        self.i = j
        return val

    def spec(self) -> GroupSpec:
        node = self.wreath()
        while self.keyword("x"):
            node = Product(node, self.wreath())
        return node

    def wreath(self) -> GroupSpec:
        node = self.atom()
        while self.keyword("wr2"):
            node = WreathS2(node)
        return node

    def atom(self) -> GroupSpec:
        if self.peek() == "(":
            self.i += 1
            node = self.spec()
            self.expect(")")
            return node
        if self.keyword("file:"):
            j = self.i
            while j < len(self.s) and not self.s[j].isspace() and self.s[j] != ")":
                j += 1
            if j == self.i:
                self.error("empty file path")
            path = self.s[self.i:j]
            self.i = j
            return FromFile(path)
        start = self.i
        word = self.name()
        key = word.lower()
        if key in ("radquot", "wr2"):
            self.expect("(")
            inner = self.spec()
            self.expect(")")
            return QuotientByRadical(inner) if key == "radquot" else WreathS2(inner)
        if key in _ONE_ARG:
            self.expect("(")
            if self.peek() == ")":
                self.error(f"{word} takes one integer argument")
            n = self.integer()
            if self.peek() == ",":
                self.error(f"{word} takes one integer argument")
            self.expect(")")
            return _ONE_ARG[key](n)
        if key in _NO_ARG:
            if self.peek() == "(":
                self.i += 1
                if self.peek() != ")":
                    self.error(f"{word} takes no arguments")
                self.i += 1
            return Named(_NO_ARG[key])
        self.error(f"unknown group name {word!r}", start)


def parse_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    node = p.spec()
    p.skip()
    if p.i != len(text):
        p.error(f"unexpected {text[p.i]!r}")
    return node
