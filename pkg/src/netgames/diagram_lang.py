"""A small textual language for string diagrams over the open-graph generators.

Grammar (``;`` binds looser than ``#``, both associate to the left)::

    term  := par (";" par)*
    par   := atom ("#" atom)*
    atom  := "mult" | "unit" | "comult" | "counit" | "cup" | "vertex"
           | "id" "(" INT ")" | "swap" "(" INT "," INT ")" | "(" term ")"

``t1 ; t2`` runs t1 then t2 (diagrammatic order); ``t1 # t2`` places them
side by side. Terms are type checked while parsing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from . import natmat as nm
from .errors import NetGamesError
from .graph_props import bij_vertices, inject_bij, inject_umat, umat
from .natmat import NatMatrix
from .open_graph import (OpenGraph, canonicalize, og_compose, og_equal, og_identity,
                         og_symmetry, og_tensor)


class DiagramSyntaxError(NetGamesError, ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class DiagramTypeError(NetGamesError, TypeError):
    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


# ---------------------------------------------------------------- AST

@dataclass(frozen=True)
class Term:
    @property
    def dom(self) -> int:
        raise NotImplementedError

    @property
    def cod(self) -> int:
        raise NotImplementedError

    def __str__(self):
        return render(self)


_ARITIES = {"mult": (2, 1), "unit": (0, 1), "comult": (1, 2), "counit": (1, 0),
            "cup": (2, 0), "vertex": (0, 1)}


@dataclass(frozen=True)
class Gen(Term):
    name: str

    def __post_init__(self):
        if self.name not in _ARITIES:
            raise ValueError(f"unknown generator {self.name!r}")

    @property
    def dom(self):
        return _ARITIES[self.name][0]

    @property
    def cod(self):
        return _ARITIES[self.name][1]


@dataclass(frozen=True)
class Id(Term):
    n: int

    @property
    def dom(self):
        return self.n

    @property
    def cod(self):
        return self.n


@dataclass(frozen=True)
class Swap(Term):
    m: int
    n: int

    @property
    def dom(self):
        return self.m + self.n

    @property
    def cod(self):
        return self.m + self.n


@dataclass(frozen=True)
class Seq(Term):
    first: Term
    second: Term

    def __post_init__(self):
        if self.first.cod != self.second.dom:
            raise DiagramTypeError(
                f"cannot sequence: left side has codomain {self.first.cod} "
                f"but right side has domain {self.second.dom} "
                f"({self.first.cod} != {self.second.dom})",
                self.first.cod, self.second.dom)

    @property
    def dom(self):
        return self.first.dom

    @property
    def cod(self):
        return self.second.cod


@dataclass(frozen=True)
class Par(Term):
    left: Term
    right: Term

    @property
    def dom(self):
        return self.left.dom + self.right.dom

    @property
    def cod(self):
        return self.left.cod + self.right.cod


Mult, Unit, Comult = Gen("mult"), Gen("unit"), Gen("comult")
Counit, Cup, Vertex = Gen("counit"), Gen("cup"), Gen("vertex")


def render(t: Term) -> str:
    """Print a term so that ``parse(render(t)) == t``."""
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Id):
        return f"id({t.n})"
    if isinstance(t, Swap):
        return f"swap({t.m},{t.n})"
    if isinstance(t, Par):
        right = render(t.right)
        if isinstance(t.right, (Par, Seq)):
            right = f"({right})"
        left = render(t.left)
        if isinstance(t.left, Seq):
            left = f"({left})"
        return f"{left} # {right}"
    if isinstance(t, Seq):
        right = render(t.second)
        if isinstance(t.second, Seq):
            right = f"({right})"
        return f"{render(t.first)} ; {right}"
    raise TypeError(t)


def count_vertices(t: Term) -> int:
    if isinstance(t, Gen):
        return int(t.name == "vertex")
    if isinstance(t, Seq):
        return count_vertices(t.first) + count_vertices(t.second)
    if isinstance(t, Par):
        return count_vertices(t.left) + count_vertices(t.right)
    return 0


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<sym>[;#(),]))")


def _tokenize(src: str):
    pos, out = 0, []
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise DiagramSyntaxError(f"unexpected character {src[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("eof", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None, kind=None):
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise DiagramSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def term(self) -> Term:
        t = self.par()
        while self.peek()[1] == ";":
            self.take(";")
            rhs = self.par()
            t = Seq(t, rhs)
        return t

    def par(self) -> Term:
        t = self.atom()
        while self.peek()[1] == "#":
            self.take("#")
            t = Par(t, self.atom())
        return t

    def number(self) -> int:
        return int(self.take(kind="int")[1])

    def atom(self) -> Term:
        kind, value, pos = self.peek()
        if value == "(":
            self.take("(")
            t = self.term()
            self.take(")")
            return t
        if kind != "name":
            got = repr(value) if kind != "eof" else "end of input"
            raise DiagramSyntaxError(f"expected a generator, found {got}", pos)
        self.take()
        if value in _ARITIES:
            return Gen(value)
        if value == "id":
            self.take("(")
            n = self.number()
            self.take(")")
            return Id(n)
        if value == "swap":
            self.take("(")
            m = self.number()
            self.take(",")
            n = self.number()
            self.take(")")
            return Swap(m, n)
        raise DiagramSyntaxError(f"unknown generator {value!r}", pos)


def parse(src: str) -> Term:
    p = _Parser(src)
    t = p.term()
    p.take(kind="eof")
    return t


# ---------------------------------------------------------------- evaluation

def generator_graph(name: str) -> OpenGraph:
    """Normal form of a single generator."""
    if name == "mult":
        return inject_umat(umat(NatMatrix([[1], [1]])))
    if name == "unit":
        return inject_umat(umat(nm.zeros(0, 1)))
    if name == "comult":
        return inject_umat(umat(NatMatrix([[1, 1]])))
    if name == "counit":
        return inject_umat(umat(nm.zeros(1, 0)))
    if name == "cup":
        return inject_umat(umat(nm.zeros(2, 0), NatMatrix([[0, 1], [0, 0]])))
    if name == "vertex":
        return inject_bij(bij_vertices(1))
    raise ValueError(f"unknown generator {name!r}")


def evaluate(t: Term, *, canonical=True, perm_bound=nm.DEFAULT_PERM_BOUND) -> OpenGraph:
    """The open graph denoted by ``t``.

    With ``canonical=False`` the vertices stay in the order they occur in
    the term, left to right.
    """
    def go(t):
        if isinstance(t, Gen):
            return generator_graph(t.name)
        if isinstance(t, Id):
            return og_identity(t.n)
        if isinstance(t, Swap):
            return og_symmetry(t.m, t.n)
        if isinstance(t, Seq):
            return og_compose(go(t.first), go(t.second), canonical=False)
        if isinstance(t, Par):
            return og_tensor(go(t.left), go(t.right), canonical=False)
        raise TypeError(f"not a term: {t!r}")

    raw = go(t)
    if canonical:
        return canonicalize(raw, perm_bound=perm_bound)
    return raw


# ---------------------------------------------------------------- equations

@dataclass(frozen=True)
class Equation:
    name: str
    group: str
    lhs: str
    rhs: str


def load_equations() -> list[Equation]:
    """The bialgebra and cup equations shipped with the package."""
    text = resources.files("netgames").joinpath("data/equations.json").read_text()
    data = json.loads(text)
    return [Equation(e["name"], e["group"], e["lhs"], e["rhs"]) for e in data["equations"]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def axiom_suite(equations=None) -> list[CheckResult]:
    """Evaluate both sides of every equation and compare the open graphs."""
    results = []
    for eq in equations if equations is not None else load_equations():
        try:
            lhs, rhs = parse(eq.lhs), parse(eq.rhs)
            ok = (lhs.dom, lhs.cod) == (rhs.dom, rhs.cod) and og_equal(evaluate(lhs), evaluate(rhs))
            detail = "" if ok else f"{evaluate(lhs)!r} vs {evaluate(rhs)!r}"
        except NetGamesError as exc:
            ok, detail = False, str(exc)
        results.append(CheckResult(f"{eq.group}/{eq.name}", ok, detail))
    return results
