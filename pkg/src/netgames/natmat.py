"""Exact matrices over the natural numbers.

Every connectivity datum in the package (boundary-to-boundary wiring,
vertex incidences, adjacency data) is a :class:`NatMatrix`. Values are
immutable; arithmetic is carried out on Python integers so nothing wraps
around, and results are checked against an entry cap.

Zero-dimensional matrices (0 rows and/or 0 columns) are ordinary values
and every operation accepts them.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundExceededError, EntryOverflowError, ShapeError

DEFAULT_CAP = 2**32 - 1
DEFAULT_PERM_BOUND = 8


class NatMatrix:
    """A rows x cols matrix with entries in N.

    >>> NatMatrix([[2, 1], [0, 1]]).shape
    (2, 2)
    >>> NatMatrix([], shape=(0, 3)).cols
    3
    """

    __slots__ = ("_a", "_key")

    def __init__(self, data, shape=None, *, cap=DEFAULT_CAP):
        arr = np.array(data, dtype=object)
        if shape is not None:
            rows, cols = shape
            if arr.size == 0:
                arr = np.zeros((rows, cols), dtype=object)
            arr = arr.reshape(rows, cols)
        elif arr.ndim != 2:
            if arr.size == 0:
                raise ShapeError("empty matrix needs an explicit shape")
            raise ShapeError(f"expected a 2-d array, got {arr.ndim} dimensions")
        flat = arr.ravel().tolist()
        for x in flat:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise TypeError(f"matrix entries must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"matrix entries must be non-negative, got {x}")
            if cap is not None and x > cap:
                raise EntryOverflowError(f"entry {x} exceeds cap {cap}")
        a = np.array([int(x) for x in flat], dtype=np.int64).reshape(arr.shape)
        a.setflags(write=False)
        self._a = a
        self._key = (a.shape, tuple(a.ravel().tolist()))

    @classmethod
    def _wrap(cls, arr: np.ndarray, cap=DEFAULT_CAP) -> NatMatrix:
        # fast path for arrays whose entries are already known to be valid ints
        if cap is not None and arr.size and int(arr.max()) > cap:
            raise EntryOverflowError(f"entry {int(arr.max())} exceeds cap {cap}")
        out = object.__new__(cls)
        a = np.asarray(arr, dtype=np.int64).copy()
        a.setflags(write=False)
        out._a = a
        out._key = (a.shape, tuple(a.ravel().tolist()))
        return out

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only int64 view of the entries."""
        return self._a

    @property
    def entries(self) -> tuple[int, ...]:
        """Entries in row-major order."""
        return self._key[1]

    @property
    def T(self) -> NatMatrix:
        return transpose(self)

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        return int(self._a[idx])

    def __matmul__(self, other: NatMatrix) -> NatMatrix:
        return matmul(self, other)

    def __add__(self, other: NatMatrix) -> NatMatrix:
        return add(self, other)

    def __eq__(self, other):
        if not isinstance(other, NatMatrix):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self._a.size == 0:
            return f"NatMatrix([], shape={self.shape})"
        return f"NatMatrix({self.tolist()})"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": self.tolist()}

    @classmethod
    def from_json(cls, obj) -> NatMatrix:
        """Accept ``{"rows", "cols", "data"}`` or a bare nested list."""
        if isinstance(obj, dict):
            return cls(obj.get("data", []), shape=(obj["rows"], obj["cols"]))
        return cls(obj)


class PermMatrix(NatMatrix):
    """A square 0/1 matrix with exactly one 1 per row and column.

    Row ``i`` has its 1 in column ``word[i]``.
    """

    __slots__ = ("_word",)

    def __init__(self, data, shape=None):
        super().__init__(data, shape=shape)
        if not is_permutation(self):
            raise ValueError(f"not a permutation matrix: {self.tolist()}")
        self._word = tuple(int(j) for j in np.argmax(self._a, axis=1)) if self.rows else ()

    @classmethod
    def from_word(cls, word: Sequence[int]) -> PermMatrix:
        k = len(word)
        if sorted(word) != list(range(k)):
            raise ValueError(f"not a permutation word: {tuple(word)}")
        a = np.zeros((k, k), dtype=np.int64)
        a[np.arange(k), list(word)] = 1
        out = object.__new__(cls)
        a.setflags(write=False)
        out._a = a
        out._key = (a.shape, tuple(a.ravel().tolist()))
        out._word = tuple(int(w) for w in word)
        return out

    @property
    def word(self) -> tuple[int, ...]:
        return self._word

    @property
    def dim(self) -> int:
        return self.rows

    def __hash__(self):
        return hash(self._key)


def _as_obj(m: NatMatrix) -> np.ndarray:
    return m.array.astype(object)


def _checked(arr: np.ndarray, cap) -> NatMatrix:
    if cap is not None and arr.size:
        top = max(arr.ravel().tolist())
        if top > cap:
            raise EntryOverflowError(f"entry {top} exceeds cap {cap}")
    return NatMatrix._wrap(np.array(arr.tolist(), dtype=np.int64).reshape(arr.shape), cap=None)


def zeros(rows: int, cols: int) -> NatMatrix:
    return NatMatrix._wrap(np.zeros((rows, cols), dtype=np.int64))


def identity(n: int) -> PermMatrix:
    return PermMatrix.from_word(range(n))


def matmul(a: NatMatrix, b: NatMatrix, *, cap=DEFAULT_CAP) -> NatMatrix:
    """Ordinary product over N; ``a.cols`` must equal ``b.rows``."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = _as_obj(a) @ _as_obj(b)
    return _checked(np.asarray(out, dtype=object).reshape(a.rows, b.cols), cap)


def add(a: NatMatrix, b: NatMatrix, *, cap=DEFAULT_CAP) -> NatMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.shape} and {b.shape}")
    return _checked(_as_obj(a) + _as_obj(b), cap)


def transpose(a: NatMatrix) -> NatMatrix:
    return NatMatrix._wrap(a.array.T, cap=None)


def block(blocks: Sequence[Sequence[NatMatrix]]) -> NatMatrix:
    """Concatenate a grid of matrices.

    Every block in a grid row must share its row count and every block in a
    grid column its column count; zero-sized blocks take part in the check
    like any other.
    """
    if not blocks or not blocks[0]:
        raise ShapeError("block grid must be non-empty")
    width = len(blocks[0])
    if any(len(r) != width for r in blocks):
        raise ShapeError("ragged block grid")
    col_widths = [blocks[0][j].cols for j in range(width)]
    row_parts = []
    for i, grid_row in enumerate(blocks):
        height = grid_row[0].rows
        for j, m in enumerate(grid_row):
            if m.rows != height or m.cols != col_widths[j]:
                raise ShapeError(
                    f"block ({i},{j}) is {m.rows}x{m.cols}, "
                    f"expected {height}x{col_widths[j]}"
                )
        row_parts.append(np.hstack([m.array for m in grid_row]) if width else
                         np.zeros((height, 0), dtype=np.int64))
    return NatMatrix._wrap(np.vstack(row_parts), cap=None)


def stack_v(*ms: NatMatrix) -> NatMatrix:
    return block([[m] for m in ms])


def stack_h(*ms: NatMatrix) -> NatMatrix:
    return block([list(ms)])


def direct_sum(*ms: NatMatrix) -> NatMatrix:
    """Block-diagonal sum with zero off-diagonal blocks."""
    if not ms:
        return zeros(0, 0)
    grid = [[ms[i] if i == j else zeros(ms[i].rows, ms[j].cols) for j in range(len(ms))]
            for i in range(len(ms))]
    return block(grid)


def row_slice(a: NatMatrix, start: int, stop: int) -> NatMatrix:
    return NatMatrix._wrap(a.array[start:stop, :], cap=None)


def col_slice(a: NatMatrix, start: int, stop: int) -> NatMatrix:
    return NatMatrix._wrap(a.array[:, start:stop], cap=None)


def is_permutation(a: NatMatrix) -> bool:
    if not a.is_square():
        return False
    arr = a.array
    if arr.size == 0:
        return True
    return bool(((arr == 0) | (arr == 1)).all()
                and (arr.sum(axis=0) == 1).all()
                and (arr.sum(axis=1) == 1).all())


def permutation_words(k: int, bound: int = DEFAULT_PERM_BOUND) -> Iterable[tuple[int, ...]]:
    """All permutation words of length k in lexicographic order."""
    if k > bound:
        raise BoundExceededError(
            f"{k}! permutations requested but the permutation bound is {bound}",
            size=k, bound=bound)
    return itertools.permutations(range(k))


def all_permutations(k: int, bound: int = DEFAULT_PERM_BOUND) -> list[PermMatrix]:
    """Every k x k permutation matrix, lexicographic on the permutation word."""
    out = [PermMatrix.from_word(w) for w in permutation_words(k, bound)]
    assert len(out) == factorial(k)
    return out


def swap_block(m: int, n: int) -> PermMatrix:
    """The (m+n)x(n+m) matrix [[0, 1_m], [1_n, 0]] exchanging two blocks of wires."""
    return PermMatrix.from_word([n + i for i in range(m)] + list(range(n)))
