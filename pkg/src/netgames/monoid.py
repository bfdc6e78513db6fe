"""Finite commutative monoids and the action of N-matrices on their vectors.

A monoid vector is a plain tuple of carrier elements. A natural-number
matrix acts on it row by row, ``(M v)_i = sum_j M_ij . v_j``, where ``n . x``
is x added to itself n times and ``0 . x`` is the unit.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Hashable, Sequence

from .errors import MonoidLawError, ShapeError
from .natmat import NatMatrix

MAX_LAW_PAIRS = 10**4


class CommMonoid:
    """A finite commutative monoid given by its carrier, operation and unit.

    The laws are checked exhaustively when the monoid is built, so the
    carrier is limited to ``MAX_LAW_PAIRS`` ordered pairs.
    """

    def __init__(self, carrier: Sequence[Hashable], op, unit, *, name=None,
                 cap=None, check=True):
        self.carrier = tuple(carrier)
        if len(set(self.carrier)) != len(self.carrier):
            raise MonoidLawError("carrier has repeated elements")
        if len(self.carrier) ** 2 > MAX_LAW_PAIRS:
            raise MonoidLawError(
                f"carrier of size {len(self.carrier)} is too large to check; "
                f"at most {MAX_LAW_PAIRS} pairs")
        self.unit = unit
        self.name = name or "monoid"
        # saturation level shared by every counter in the monoid, if any
        self.cap = cap
        self._table = {(x, y): op(x, y) for x in self.carrier for y in self.carrier}
        if check:
            self._check_laws()
        self.scalar = lru_cache(maxsize=None)(self._scalar)

    def _check_laws(self):
        elems = set(self.carrier)
        if self.unit not in elems:
            raise MonoidLawError(f"unit {self.unit!r} is not in the carrier")
        t = self._table
        for x, y in itertools.product(self.carrier, repeat=2):
            if t[x, y] not in elems:
                raise MonoidLawError(f"{x!r} + {y!r} = {t[x, y]!r} leaves the carrier")
            if t[x, y] != t[y, x]:
                raise MonoidLawError(f"not commutative at {x!r}, {y!r}")
        for x in self.carrier:
            if t[x, self.unit] != x:
                raise MonoidLawError(f"{self.unit!r} is not a unit for {x!r}")
        for x, y, z in itertools.product(self.carrier, repeat=3):
            if t[t[x, y], z] != t[x, t[y, z]]:
                raise MonoidLawError(f"not associative at {x!r}, {y!r}, {z!r}")

    def op(self, x, y):
        return self._table[x, y]

    def sum(self, xs) -> Hashable:
        acc = self.unit
        t = self._table
        for x in xs:
            acc = t[acc, x]
        return acc

    def _scalar(self, n: int, x):
        # square-and-add; valid because the operation is associative
        acc, base = self.unit, x
        t = self._table
        while n:
            if n & 1:
                acc = t[acc, base]
            base = t[base, base]
            n >>= 1
        return acc

    def vectors(self, length: int):
        """All vectors of the given length, in carrier order."""
        return itertools.product(self.carrier, repeat=length)

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"CommMonoid({self.name}, |M|={len(self.carrier)})"


def scalar_act(monoid: CommMonoid, n: int, x) -> Hashable:
    """``x + x + ... + x`` (n times); the unit when ``n == 0``."""
    if n < 0:
        raise ValueError("scalar must be a natural number")
    return monoid.scalar(n, x)


def vec_add(monoid: CommMonoid, u: tuple, v: tuple) -> tuple:
    if len(u) != len(v):
        raise ShapeError(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(monoid.op(a, b) for a, b in zip(u, v))


class MatrixAction:
    """A matrix prepared for repeated application to monoid vectors.

    Zero entries are skipped, so an entry of the vector is only read when
    some coefficient on it is non-zero.
    """

    __slots__ = ("rows", "cols", "_terms", "_monoid")

    def __init__(self, mat: NatMatrix, monoid: CommMonoid):
        self.rows, self.cols = mat.shape
        arr = mat.array
        self._terms = tuple(tuple((j, int(arr[i, j])) for j in range(self.cols) if arr[i, j])
                            for i in range(self.rows))
        self._monoid = monoid

    def __call__(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ShapeError(f"matrix with {self.cols} columns applied to a vector "
                             f"of length {len(v)}")
        mon = self._monoid
        t, sc, unit = mon._table, mon.scalar, mon.unit
        out = []
        for terms in self._terms:
            acc = unit
            for j, c in terms:
                acc = t[acc, sc(c, v[j])]
            out.append(acc)
        return tuple(out)

    def row(self, i: int, v: Sequence):
        """Entry i of the product only."""
        mon = self._monoid
        acc = mon.unit
        for j, c in self._terms[i]:
            acc = mon._table[acc, mon.scalar(c, v[j])]
        return acc


def mat_apply(mat: NatMatrix, v: Sequence, monoid: CommMonoid) -> tuple:
    """``(mat v)_i = sum_j mat_ij . v_j``; ``len(v)`` must equal ``mat.cols``."""
    if len(v) != mat.cols:
        raise ShapeError(f"matrix {mat.rows}x{mat.cols} applied to a vector of length {len(v)}")
    return MatrixAction(mat, monoid)(tuple(v))


def sat_counter(cap: int) -> CommMonoid:
    """``{0, ..., cap}`` under addition truncated at cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    return CommMonoid(range(cap + 1), lambda x, y: min(x + y, cap), 0,
                      name=f"sat_counter({cap})", cap=cap)


def bool_or() -> CommMonoid:
    return CommMonoid((0, 1), lambda x, y: x | y, 0, name="bool_or", cap=1)


def product(*factors: CommMonoid) -> CommMonoid:
    """Componentwise product; elements are tuples."""
    if not factors:
        raise ValueError("product needs at least one factor")
    caps = [f.cap for f in factors]
    return CommMonoid(
        itertools.product(*(f.carrier for f in factors)),
        lambda x, y: tuple(f.op(a, b) for f, a, b in zip(factors, x, y)),
        tuple(f.unit for f in factors),
        name="product(" + ", ".join(f.name for f in factors) + ")",
        cap=min(caps) if all(c is not None for c in caps) else None,
    )


def monoid_from_json(obj) -> CommMonoid:
    """``{"kind": "sat_counter", "cap": 4}``, ``{"kind": "bool_or"}`` or
    ``{"kind": "product", "factors": [...]}``."""
    kind = obj.get("kind")
    if kind == "sat_counter":
        return sat_counter(int(obj["cap"]))
    if kind == "bool_or":
        return bool_or()
    if kind == "product":
        return product(*(monoid_from_json(f) for f in obj["factors"]))
    raise ValueError(f"unknown monoid kind {kind!r}")


def element_from_json(x):
    """Product elements arrive as JSON lists; carriers use tuples."""
    if isinstance(x, list):
        return tuple(element_from_json(y) for y in x)
    return x
