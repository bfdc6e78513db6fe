"""The two props that open graphs are glued from, and the gluing itself.

``UmatMorphism`` is a vertex-free open graph ``(B, [A])``; ``BoundPerm`` is a
permutation ``m + k -> m + k`` whose last k inputs are "bound", i.e. new
vertices. Open graphs are their coproduct: :func:`inject_umat` and
:func:`inject_bij` are the two inclusions and :func:`mediate` is the
homomorphism out of the coproduct determined by a pair of maps into any
target prop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, NamedTuple

from . import natmat as nm
from .adjclass import AdjClass, adj_class, zero_class
from .errors import ShapeError
from .natmat import NatMatrix, PermMatrix
from .open_graph import (OpenGraph, og_compose, og_identity, og_symmetry,
                         og_tensor)


@dataclass(frozen=True)
class UmatMorphism:
    m: int
    n: int
    b: NatMatrix
    a: AdjClass

    def __post_init__(self):
        if self.b.shape != (self.m, self.n) or self.a.dim != self.m:
            raise ShapeError(f"Umat morphism {self.m}->{self.n} with B {self.b.shape} "
                             f"and [A] of dim {self.a.dim}")

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "B": self.b.to_json(), "A": self.a.canon.to_json()}

    @classmethod
    def from_json(cls, obj) -> UmatMorphism:
        m, n = obj["m"], obj["n"]
        b = NatMatrix.from_json(obj["B"]) if obj.get("B") else nm.zeros(m, n)
        a = adj_class(NatMatrix.from_json(obj["A"])) if obj.get("A") else zero_class(m)
        return cls(m, n, b, a)


def umat(b: NatMatrix, a: NatMatrix | AdjClass | None = None) -> UmatMorphism:
    if a is None:
        a = zero_class(b.rows)
    elif isinstance(a, NatMatrix):
        a = adj_class(a)
    return UmatMorphism(b.rows, b.cols, b, a)


def umat_identity(n: int) -> UmatMorphism:
    return umat(nm.identity(n))


def umat_symmetry(m: int, n: int) -> UmatMorphism:
    return umat(nm.swap_block(m, n))


def umat_compose(g: UmatMorphism, h: UmatMorphism) -> UmatMorphism:
    """``g`` then ``h``: ``(B B', [A + B A' B^T])``."""
    if g.n != h.m:
        raise ShapeError(f"cannot compose {g.m}->{g.n} with {h.m}->{h.n}")
    b = g.b
    return UmatMorphism(g.m, h.n, b @ h.b, adj_class(g.a.canon + b @ h.a.canon @ b.T))


def umat_tensor(g: UmatMorphism, h: UmatMorphism) -> UmatMorphism:
    return UmatMorphism(g.m + h.m, g.n + h.n, nm.direct_sum(g.b, h.b),
                        adj_class(nm.direct_sum(g.a.canon, h.a.canon)))


def _bound_canonical(m: int, k: int, p: PermMatrix) -> PermMatrix:
    # (1_m + s) P only reorders the last k rows, each a unit row vector; a
    # unit row with its 1 further right is smaller in row-major order, so the
    # least arrangement sorts the bound rows by descending column
    tail = sorted(p.word[m:], reverse=True)
    return PermMatrix.from_word(p.word[:m] + tuple(tail))


def bound_row_variants(g: "BoundPerm") -> list[PermMatrix]:
    """Every matrix ``(1_m + s) P`` equivalent to ``g``'s, by brute force."""
    out = []
    for s in nm.permutation_words(g.k):
        sigma = nm.direct_sum(nm.identity(g.m), nm.PermMatrix.from_word(s))
        q = sigma @ g.p
        out.append(PermMatrix(q.tolist(), shape=q.shape))
    return out


class BoundPerm:
    """A morphism ``m -> m + k`` of bound permutations, stored with its
    bound rows in canonical (lexicographically least) order."""

    __slots__ = ("m", "k", "p")

    def __init__(self, m: int, k: int, p: PermMatrix):
        if not isinstance(p, PermMatrix):
            p = PermMatrix(p.tolist() if isinstance(p, NatMatrix) else p, shape=(m + k, m + k))
        if p.rows != m + k:
            raise ShapeError(f"bound permutation {m}->{m + k} needs a {m + k}x{m + k} matrix")
        self.m = m
        self.k = k
        self.p = _bound_canonical(m, k, p)

    @property
    def n(self) -> int:
        return self.m + self.k

    def __eq__(self, other):
        if not isinstance(other, BoundPerm):
            return NotImplemented
        return (self.m, self.k, self.p) == (other.m, other.k, other.p)

    def __hash__(self):
        return hash((self.m, self.k, self.p))

    def __repr__(self):
        return f"BoundPerm(m={self.m}, k={self.k}, word={self.p.word})"

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k, "P": self.p.to_json()}

    @classmethod
    def from_json(cls, obj) -> BoundPerm:
        m, k = obj["m"], obj["k"]
        return cls(m, k, PermMatrix(NatMatrix.from_json(obj["P"]).tolist(), shape=(m + k, m + k)))


def bij_identity(n: int) -> BoundPerm:
    return BoundPerm(n, 0, nm.identity(n))


def bij_vertices(k: int) -> BoundPerm:
    """``(k, 1_k) : 0 -> k``, k fresh vertices."""
    return BoundPerm(0, k, nm.identity(k))


def bij_symmetry(m: int, n: int) -> BoundPerm:
    return BoundPerm(m + n, 0, nm.swap_block(m, n))


def bij_compose(g: BoundPerm, h: BoundPerm) -> BoundPerm:
    """``g : m -> m+k`` then ``h : m+k -> m+k+l`` is ``(k + l, (P + 1_l) Q)``."""
    if g.n != h.m:
        raise ShapeError(f"cannot compose {g.m}->{g.n} with {h.m}->{h.n}")
    p = nm.direct_sum(g.p, nm.identity(h.k)) @ h.p
    return BoundPerm(g.m, g.k + h.k, PermMatrix(p.tolist(), shape=p.shape))


def bij_tensor(g: BoundPerm, h: BoundPerm) -> BoundPerm:
    """Reorder rows to (m, m', k, k') so the bound rows stay last."""
    m, k, m2, k2 = g.m, g.k, h.m, h.k
    # row blocks of P + P' are (m, k, m', k'); pick them in order (m, m', k, k')
    word = (list(range(m)) + list(range(m + k, m + k + m2))
            + list(range(m, m + k)) + list(range(m + k + m2, m + k + m2 + k2)))
    shuffle = PermMatrix.from_word(word)
    p = shuffle @ nm.direct_sum(g.p, h.p)
    return BoundPerm(m + m2, k + k2, PermMatrix(p.tolist(), shape=p.shape))


def inject_umat(g: UmatMorphism) -> OpenGraph:
    """``(B, [A]) -> (0, [A], B, !, ¡, [()])``."""
    return OpenGraph(g.m, g.n, 0, g.a, g.b, nm.zeros(g.m, 0), nm.zeros(0, g.n), zero_class(0))


def inject_bij(g: BoundPerm) -> OpenGraph:
    """``(k, P) -> (k, [0], P[:n], 0, P[n:], [0])`` for ``P`` over ``n + k`` rows."""
    n, k = g.m, g.k
    return OpenGraph(n, n + k, k, zero_class(n), nm.row_slice(g.p, 0, n),
                     nm.zeros(n, k), nm.row_slice(g.p, n, n + k), zero_class(k))


class PropOps(NamedTuple):
    """Structure of a prop as plain functions. ``compose`` is diagrammatic:
    ``compose(f, g)`` runs f first."""
    compose: Callable[[Any, Any], Any]
    tensor: Callable[[Any, Any], Any]
    identity: Callable[[int], Any]
    symmetry: Callable[[int, int], Any]


OPEN_GRAPHS = PropOps(og_compose, og_tensor, og_identity, og_symmetry)
UMAT = PropOps(umat_compose, umat_tensor, umat_identity, umat_symmetry)
BIJ = PropOps(bij_compose, bij_tensor, bij_identity, bij_symmetry)


def mediator_decompose(g: OpenGraph) -> tuple[UmatMorphism, BoundPerm]:
    """Split ``g`` into ``W = ((B; D), [[A, C], [0, E]])`` and ``V = (k, 1_k)``
    such that ``g`` is ``(id_m (x) V)`` followed by ``W``."""
    c_block = nm.block([[g.a.canon, g.c], [nm.zeros(g.k, g.m), g.e.canon]])
    w = UmatMorphism(g.m + g.k, g.n, nm.stack_v(g.b, g.d), adj_class(c_block))
    return w, bij_vertices(g.k)


def mediate(g: OpenGraph, target: PropOps, f1: Callable[[UmatMorphism], Any],
            f2: Callable[[BoundPerm], Any]):
    """Image of ``g`` under the homomorphism out of the coproduct that agrees
    with ``f1`` on vertex-free graphs and with ``f2`` on bound permutations."""
    w, v = mediator_decompose(g)
    return target.compose(target.tensor(target.identity(g.m), f2(v)), f1(w))
