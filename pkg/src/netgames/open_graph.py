"""Open undirected multigraphs: morphisms m -> n of the prop of open graphs.

A morphism is a tuple ``(k, [A], B, C, D, [E])`` with ``k`` vertices:

* ``A`` (m x m) joins left ports to each other,
* ``B`` (m x n) joins left ports to right ports, bypassing the vertices,
* ``C`` (m x k) joins left ports to vertices,
* ``D`` (k x n) joins vertices to right ports,
* ``E`` (k x k) is the multigraph on the vertices.

Two tuples are the same morphism when they differ by a relabelling of the
vertices, ``(C, D, [E]) -> (C P^T, P D, [P E P^T])``. Public operations
return the canonical representative (see :func:`canonicalize`); pass
``canonical=False`` to keep the raw vertex order, which is concatenation
order under composition and tensor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import natmat as nm
from .adjclass import AdjClass, adj_class, conjugate, symmetrize, zero_class
from .errors import BoundExceededError, ShapeError
from .natmat import NatMatrix, PermMatrix

DEFAULT_PERM_BOUND = nm.DEFAULT_PERM_BOUND


@dataclass(frozen=True)
class OpenGraph:
    m: int
    n: int
    k: int
    a: AdjClass
    b: NatMatrix
    c: NatMatrix
    d: NatMatrix
    e: AdjClass

    def __post_init__(self):
        m, n, k = self.m, self.n, self.k
        checks = [
            ("A", (self.a.dim, self.a.dim), (m, m)),
            ("B", self.b.shape, (m, n)),
            ("C", self.c.shape, (m, k)),
            ("D", self.d.shape, (k, n)),
            ("E", (self.e.dim, self.e.dim), (k, k)),
        ]
        for name, got, want in checks:
            if tuple(got) != want:
                raise ShapeError(f"{name} has shape {got}, expected {want} for a "
                                 f"{m}->{n} graph with {k} vertices")

    @property
    def type(self) -> tuple[int, int]:
        return (self.m, self.n)

    def is_closed(self) -> bool:
        return self.m == 0 and self.n == 0

    def relabel(self, p: PermMatrix) -> OpenGraph:
        """The representative ``(k, [A], B, C P^T, P D, [P E P^T])``."""
        if p.rows != self.k:
            raise ShapeError(f"relabelling of size {p.rows} for {self.k} vertices")
        return OpenGraph(self.m, self.n, self.k, self.a, self.b,
                         self.c @ p.T, p @ self.d, conjugate(self.e, p))

    def __repr__(self):
        return (f"OpenGraph({self.m}->{self.n}, k={self.k}, A={self.a.canon.tolist()}, "
                f"B={self.b.tolist()}, C={self.c.tolist()}, D={self.d.tolist()}, "
                f"E={self.e.canon.tolist()})")

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "k": self.k,
            "A": self.a.canon.to_json(), "B": self.b.to_json(),
            "C": self.c.to_json(), "D": self.d.to_json(),
            "E": self.e.canon.to_json(),
        }

    @classmethod
    def from_json(cls, obj, *, canonical=True, perm_bound=DEFAULT_PERM_BOUND) -> OpenGraph:
        """Load either the full ``{"m","n","k","A",...}`` encoding or the
        closed-graph edge list ``{"vertices": k, "edges": [[i, j], ...]}``.
        The result is canonicalized unless ``canonical`` is false, in which
        case vertices keep the order given."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if "vertices" in obj:
            g = closed_graph(obj["vertices"], obj.get("edges", []))
        else:
            m, n, k = obj["m"], obj["n"], obj["k"]

            def mat(key, shape):
                if key not in obj:
                    return nm.zeros(*shape)
                got = NatMatrix.from_json(obj[key]) if obj[key] != [] else nm.zeros(*shape)
                return got

            g = OpenGraph(m, n, k, adj_class(mat("A", (m, m))), mat("B", (m, n)),
                          mat("C", (m, k)), mat("D", (k, n)), adj_class(mat("E", (k, k))))
        return canonicalize(g, perm_bound=perm_bound) if canonical else g


def closed_graph(vertices: int, edges) -> OpenGraph:
    """A 0 -> 0 graph from an edge list (raw vertex order)."""
    return OpenGraph(0, 0, vertices, zero_class(0), nm.zeros(0, 0),
                     nm.zeros(0, vertices), nm.zeros(vertices, 0),
                     AdjClass.from_edges(vertices, edges))


def og_identity(n: int) -> OpenGraph:
    return OpenGraph(n, n, 0, zero_class(n), nm.identity(n), nm.zeros(n, 0),
                     nm.zeros(0, n), zero_class(0))


def og_symmetry(m: int, n: int) -> OpenGraph:
    """Exchange the first m wires with the following n."""
    return OpenGraph(m + n, n + m, 0, zero_class(m + n), nm.swap_block(m, n),
                     nm.zeros(m + n, 0), nm.zeros(0, n + m), zero_class(0))


def og_compose(g: OpenGraph, h: OpenGraph, *, canonical=True,
               perm_bound=DEFAULT_PERM_BOUND) -> OpenGraph:
    """``g`` followed by ``h`` (h o g); the vertices of g come first."""
    if g.n != h.m:
        raise ShapeError(f"cannot compose {g.m}->{g.n} with {h.m}->{h.n}")
    A, B, C, D, E = g.a.canon, g.b, g.c, g.d, g.e.canon
    A2, B2, C2, D2, E2 = h.a.canon, h.b, h.c, h.d, h.e.canon
    A2s = symmetrize(h.a)
    a = adj_class(A + B @ A2 @ B.T)
    b = B @ B2
    c = nm.stack_h(C + B @ A2s @ D.T, B @ C2)
    d = nm.stack_v(D @ B2, D2)
    e = adj_class(nm.block([[E + D @ A2 @ D.T, D @ C2],
                            [nm.zeros(h.k, g.k), E2]]))
    out = OpenGraph(g.m, h.n, g.k + h.k, a, b, c, d, e)
    return canonicalize(out, perm_bound=perm_bound) if canonical else out


def og_tensor(g: OpenGraph, h: OpenGraph, *, canonical=True,
              perm_bound=DEFAULT_PERM_BOUND) -> OpenGraph:
    out = OpenGraph(
        g.m + h.m, g.n + h.n, g.k + h.k,
        adj_class(nm.direct_sum(g.a.canon, h.a.canon)),
        nm.direct_sum(g.b, h.b), nm.direct_sum(g.c, h.c), nm.direct_sum(g.d, h.d),
        adj_class(nm.direct_sum(g.e.canon, h.e.canon)),
    )
    return canonicalize(out, perm_bound=perm_bound) if canonical else out


def canonical_form(g: OpenGraph, *, perm_bound=DEFAULT_PERM_BOUND):
    """Return ``(canonical representative, word)``.

    The representative is ``g.relabel(P)`` for the permutation P (row i has
    its 1 in column ``word[i]``) minimising the row-major serialisation of
    ``(canon of P E P^T, P D, C P^T)``; vertex i of the result is vertex
    ``word[i]`` of ``g``. All k! relabellings are scanned.
    """
    k = g.k
    if k > perm_bound:
        raise BoundExceededError(
            f"graph has {k} vertices, above the permutation bound {perm_bound} "
            f"(raise it with --perm-bound)", size=k, bound=perm_bound)
    if k <= 1:
        return g, tuple(range(k))
    words = np.array(list(nm.permutation_words(k, perm_bound)), dtype=np.intp)
    canon = g.e.canon.array
    folded = canon + canon.T - np.diag(np.diag(canon))
    iu = np.triu_indices(k)
    e_part = folded[words[:, :, None], words[:, None, :]][:, iu[0], iu[1]]
    d_part = g.d.array[words].reshape(len(words), k * g.n)
    c_part = g.c.array[:, words].transpose(1, 0, 2).reshape(len(words), g.m * k)
    keys = np.hstack([e_part, d_part, c_part])
    # lexsort treats the last key as primary
    best = int(np.lexsort(keys.T[::-1])[0])
    word = tuple(int(x) for x in words[best])
    return g.relabel(PermMatrix.from_word(word)), word


def canonicalize(g: OpenGraph, *, perm_bound=DEFAULT_PERM_BOUND) -> OpenGraph:
    return canonical_form(g, perm_bound=perm_bound)[0]


def og_equal(g: OpenGraph, h: OpenGraph, *, perm_bound=DEFAULT_PERM_BOUND) -> bool:
    """Equality of morphisms, i.e. up to relabelling of the vertices."""
    if (g.m, g.n, g.k) != (h.m, h.n, h.k):
        return False
    if g.a != h.a or g.b != h.b:
        return False
    return (canonicalize(g, perm_bound=perm_bound)
            == canonicalize(h, perm_bound=perm_bound))


def empty_graph() -> OpenGraph:
    return og_identity(0)


def max_weighted_degree(g: OpenGraph) -> int:
    """Largest number of incidences at a single vertex or left port, counting
    edges to vertices, to both boundaries, and self-loops twice."""
    s = symmetrize(g.e).array
    deg = [int(s[p].sum() + g.c.array[:, p].sum() + g.d.array[p].sum()) for p in range(g.k)]
    sa = symmetrize(g.a).array
    deg += [int(sa[i].sum() + g.b.array[i].sum() + g.c.array[i].sum()) for i in range(g.m)]
    return max(deg, default=0)
