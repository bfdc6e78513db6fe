"""Adjacency data of undirected multigraphs, up to the relation A ~ A'
iff A + A^T = A' + A'^T.

The canonical representative keeps the diagonal (self-loops, counted once)
and folds every off-diagonal pair onto the strict upper triangle.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .natmat import NatMatrix, PermMatrix, zeros


class AdjClass:
    """Equivalence class ``[A]`` of a square N-matrix."""

    __slots__ = ("_canon",)

    def __init__(self, canon: NatMatrix):
        # trusted constructor; use adj_class() for arbitrary input
        self._canon = canon

    @property
    def dim(self) -> int:
        return self._canon.rows

    @property
    def canon(self) -> NatMatrix:
        return self._canon

    def symmetric(self) -> NatMatrix:
        return symmetrize(self)

    def __eq__(self, other):
        if not isinstance(other, AdjClass):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self):
        return hash(("AdjClass", self._canon))

    def __repr__(self):
        return f"AdjClass({self._canon.tolist() if self.dim else '[]'})"

    def to_json(self) -> dict:
        return {"dim": self.dim, "canon": self._canon.to_json()}

    @classmethod
    def from_json(cls, obj) -> AdjClass:
        """Load ``{"dim", "canon"}`` or any square matrix encoding."""
        if isinstance(obj, dict) and "canon" in obj:
            m = NatMatrix.from_json(obj["canon"])
        elif isinstance(obj, dict) and "data" not in obj and "dim" in obj:
            m = zeros(obj["dim"], obj["dim"])
        else:
            m = NatMatrix.from_json(obj)
        return adj_class(m)

    @classmethod
    def from_edges(cls, dim: int, edges) -> AdjClass:
        """Build a class from an edge list; ``(i, i)`` is a self-loop and
        repeated pairs are parallel edges."""
        a = np.zeros((dim, dim), dtype=np.int64)
        for i, j in edges:
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"edge ({i}, {j}) out of range for {dim} vertices")
            lo, hi = min(i, j), max(i, j)
            a[lo, hi] += 1
        return cls(NatMatrix._wrap(a))


def adj_class(a: NatMatrix) -> AdjClass:
    if not a.is_square():
        raise ShapeError(f"adjacency matrix must be square, got {a.rows}x{a.cols}")
    arr = a.array
    canon = np.triu(arr + arr.T, 1) + np.diag(np.diag(arr))
    return AdjClass(NatMatrix._wrap(canon))


def zero_class(n: int) -> AdjClass:
    return AdjClass(zeros(n, n))


def conjugate(c: AdjClass, p: PermMatrix) -> AdjClass:
    """The class of P A P^T."""
    if p.rows != c.dim:
        raise ShapeError(f"permutation of size {p.rows} applied to class of dim {c.dim}")
    return adj_class(p @ c.canon @ p.T)


def symmetrize(c: AdjClass) -> NatMatrix:
    """canon + canon^T: symmetric, with self-loops doubled on the diagonal."""
    arr = c.canon.array
    return NatMatrix._wrap(arr + arr.T)
