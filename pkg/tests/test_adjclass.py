import itertools

import pytest

from netgames import natmat as nm
from netgames.adjclass import AdjClass, adj_class, conjugate, symmetrize, zero_class
from netgames.errors import ShapeError
from netgames.natmat import NatMatrix


def all_matrices(dim, top=2):
    for flat in itertools.product(range(top + 1), repeat=dim * dim):
        yield NatMatrix(list(flat), shape=(dim, dim))


def test_canon_examples():
    assert adj_class(NatMatrix([[0, 1], [1, 0]])).canon.tolist() == [[0, 2], [0, 0]]
    assert adj_class(NatMatrix([[0, 2], [0, 0]])).canon.tolist() == [[0, 2], [0, 0]]
    assert adj_class(nm.zeros(3, 3)) == zero_class(3)
    assert adj_class(NatMatrix([[0, 1], [1, 0]])) == adj_class(NatMatrix([[0, 2], [0, 0]]))


def test_canon_is_upper_triangular():
    c = adj_class(NatMatrix([[1, 0, 2], [3, 0, 0], [1, 1, 2]])).canon
    assert c.tolist() == [[1, 3, 3], [0, 0, 1], [0, 0, 2]]


def test_non_square_rejected():
    with pytest.raises(ShapeError):
        adj_class(NatMatrix([[1, 2]]))


@pytest.mark.parametrize("dim", [1, 2])
def test_class_equality_is_equality_of_a_plus_at(dim):
    mats = list(all_matrices(dim))
    for a, b in itertools.product(mats, repeat=2):
        same = (a + a.T) == (b + b.T)
        assert (adj_class(a) == adj_class(b)) == same


def test_class_equality_dim3_sampled():
    mats = list(all_matrices(3))[::97]
    for a, b in itertools.product(mats, repeat=2):
        assert (adj_class(a) == adj_class(b)) == ((a + a.T) == (b + b.T))


def test_symmetrize():
    assert symmetrize(adj_class(NatMatrix([[0, 2], [0, 0]]))).tolist() == [[0, 2], [2, 0]]
    assert symmetrize(adj_class(NatMatrix([[1]]))).tolist() == [[2]]


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_symmetrize_constant_on_classes(dim):
    mats = list(all_matrices(dim)) if dim < 3 else list(all_matrices(3))[::13]
    for a in mats:
        assert symmetrize(adj_class(a)) == a + a.T


def test_conjugate():
    edge = adj_class(NatMatrix([[0, 1], [0, 0]]))
    assert conjugate(edge, nm.swap_block(1, 1)) == edge
    c = adj_class(NatMatrix([[1, 2, 0], [0, 0, 1], [0, 0, 0]]))
    assert conjugate(c, nm.identity(3)) == c
    with pytest.raises(ShapeError):
        conjugate(c, nm.identity(2))


def test_path_relabelling_preserves_degrees():
    path = AdjClass.from_edges(3, [(0, 1), (1, 2)])
    cyc = nm.PermMatrix.from_word([1, 2, 0])
    moved = conjugate(path, cyc)
    assert moved != path
    deg = lambda c: sorted(sum(r) for r in symmetrize(c).tolist())  # noqa: E731
    assert deg(moved) == deg(path)


def test_conjugate_composes():
    c = adj_class(NatMatrix([[1, 2, 0], [0, 0, 1], [2, 0, 0]]))
    for p, q in itertools.product(nm.all_permutations(3), repeat=2):
        assert conjugate(conjugate(c, p), q) == conjugate(c, q @ p)


def test_from_edges_and_json():
    c = AdjClass.from_edges(2, [(1, 0), (0, 1), (1, 1)])
    assert c.canon.tolist() == [[0, 2], [0, 1]]
    assert AdjClass.from_json(c.to_json()) == c
    assert AdjClass.from_json([[0, 1], [1, 0]]) == adj_class(NatMatrix([[0, 2], [0, 0]]))
    with pytest.raises(ValueError):
        AdjClass.from_edges(2, [(0, 2)])
