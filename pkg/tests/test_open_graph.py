import itertools
import json
import random

import pytest

from netgames import natmat as nm
from netgames.adjclass import zero_class
from netgames.checks import random_graph, random_perm
from netgames.diagram_lang import generator_graph
from netgames.errors import BoundExceededError, ShapeError
from netgames.open_graph import (OpenGraph, canonical_form, canonicalize, closed_graph,
                                 empty_graph, max_weighted_degree, og_compose, og_equal,
                                 og_identity, og_symmetry, og_tensor)


def test_edge_from_two_vertices_and_a_cup():
    v = generator_graph("vertex")
    g = og_compose(og_tensor(v, v), generator_graph("cup"))
    assert (g.m, g.n, g.k) == (0, 0, 2)
    assert g.e.canon.tolist() == [[0, 1], [0, 0]]
    assert g.c.shape == (0, 2) and g.d.shape == (2, 0)
    assert og_equal(g, closed_graph(2, [(0, 1)]))


def test_vertex_pair():
    v = generator_graph("vertex")
    vv = og_tensor(v, v, canonical=False)
    assert (vv.k, vv.b.shape, vv.c.shape, vv.d.tolist()) == (2, (0, 2), (0, 2), [[1, 0], [0, 1]])
    assert vv.e == zero_class(2)
    # the stored representative may list the vertices in another order
    assert og_equal(og_tensor(v, v), vv)


def test_units():
    rng = random.Random(1)
    for _ in range(50):
        g = random_graph(rng)
        assert og_equal(og_compose(g, og_identity(g.n)), g)
        assert og_equal(og_compose(og_identity(g.m), g), g)
        assert og_equal(og_tensor(g, empty_graph()), g)


def test_compose_type_mismatch():
    with pytest.raises(ShapeError):
        og_compose(og_identity(1), og_identity(2))


def test_shape_validation():
    with pytest.raises(ShapeError):
        OpenGraph(1, 1, 0, zero_class(1), nm.zeros(1, 2), nm.zeros(1, 0), nm.zeros(0, 1),
                  zero_class(0))


def test_identity_and_symmetry_forms():
    i = og_identity(2)
    assert i.b == nm.identity(2) and i.k == 0
    s = og_symmetry(1, 2)
    assert s.b.tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 0), (0, 3), (2, 3)])
def test_symmetry_is_its_own_inverse(m, n):
    assert og_equal(og_compose(og_symmetry(m, n), og_symmetry(n, m)), og_identity(m + n))


def test_symmetry_moves_wires():
    # a vertex on the first wire ends up on the last wire after swapping
    g = og_compose(og_tensor(generator_graph("vertex"), og_identity(2)), og_symmetry(1, 2))
    assert g.d.tolist() == [[0, 0, 1]]


@pytest.mark.parametrize("m,n,p", list(itertools.product(range(3), repeat=3)))
def test_hexagon(m, n, p):
    lhs = og_compose(og_symmetry(m, n + p), og_tensor(og_identity(n), og_symmetry(p, m)))
    assert og_equal(lhs, og_tensor(og_symmetry(m, n), og_identity(p)))


def test_symmetry_naturality():
    rng = random.Random(2)
    for _ in range(50):
        f, g = random_graph(rng, max_k=2), random_graph(rng, max_k=2)
        assert og_equal(og_compose(og_symmetry(f.m, g.m), og_tensor(g, f)),
                        og_compose(og_tensor(f, g), og_symmetry(f.n, g.n)))


def test_interchange():
    rng = random.Random(4)
    for _ in range(50):
        f, g = random_graph(rng, max_k=1), random_graph(rng, max_k=2)
        h, k = random_graph(rng, m=f.n, max_k=1), random_graph(rng, m=g.n, max_k=1)
        assert og_equal(og_tensor(og_compose(f, h), og_compose(g, k)),
                        og_compose(og_tensor(f, g), og_tensor(h, k)))


def test_coherence_under_relabelling():
    rng = random.Random(6)
    for _ in range(100):
        g = random_graph(rng)
        h = random_graph(rng, m=g.n)
        p, q = random_perm(rng, g.k), random_perm(rng, h.k)
        assert og_equal(og_compose(g.relabel(p), h.relabel(q)), og_compose(g, h))
        assert og_equal(og_tensor(g.relabel(p), h.relabel(q)), og_tensor(g, h))


def test_associativity():
    rng = random.Random(8)
    for _ in range(100):
        f = random_graph(rng, max_k=2)
        g = random_graph(rng, m=f.n, max_k=2)
        h = random_graph(rng, m=g.n, max_k=2)
        assert og_equal(og_compose(og_compose(f, g), h), og_compose(f, og_compose(g, h)))


def test_canonicalize_idempotent_and_word():
    rng = random.Random(9)
    for _ in range(100):
        g = random_graph(rng)
        c, word = canonical_form(g)
        assert canonicalize(c) == c
        assert c == g.relabel(nm.PermMatrix.from_word(word))


def test_relabelled_paths_share_a_canon():
    path = closed_graph(3, [(0, 1), (1, 2)])
    forms = {canonicalize(path.relabel(p)) for p in nm.all_permutations(3)}
    assert len(forms) == 1
    relabelled = closed_graph(3, [(2, 0), (0, 1)])
    assert canonicalize(relabelled) == canonicalize(path)


def test_triangle_relabellings():
    tri = closed_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert len({canonicalize(tri.relabel(p)) for p in nm.all_permutations(3)}) == 1


def test_equality_examples():
    single = closed_graph(2, [(0, 1)])
    double = closed_graph(2, [(0, 1), (0, 1)])
    assert not og_equal(single, double)
    assert og_equal(single, single.relabel(nm.swap_block(1, 1)))
    assert not og_equal(og_identity(1), generator_graph("vertex"))


def test_closed_graphs_are_determined_by_vertex_data():
    g = closed_graph(3, [(0, 0), (1, 2)])
    assert g.a.dim == 0 and g.b.shape == (0, 0)
    assert g.c.shape == (0, 3) and g.d.shape == (3, 0)


def test_permutation_bound():
    big = closed_graph(9, [])
    with pytest.raises(BoundExceededError):
        canonicalize(big)
    assert canonicalize(closed_graph(9, [(0, 1)]), perm_bound=9).k == 9


def test_json_round_trip():
    rng = random.Random(10)
    for _ in range(30):
        g = canonicalize(random_graph(rng))
        assert OpenGraph.from_json(json.loads(json.dumps(g.to_json()))) == g


def test_edge_list_json():
    g = OpenGraph.from_json({"vertices": 3, "edges": [[0, 1], [1, 2], [2, 2], [0, 1]]})
    assert og_equal(g, closed_graph(3, [(0, 1), (0, 1), (1, 2), (2, 2)]))
    raw = OpenGraph.from_json({"vertices": 2, "edges": [[1, 1]]}, canonical=False)
    assert raw.e.canon.tolist() == [[0, 0], [0, 1]]


def test_max_weighted_degree():
    assert max_weighted_degree(closed_graph(3, [(0, 1), (0, 2), (0, 0)])) == 4
    assert max_weighted_degree(og_identity(2)) == 1
    assert max_weighted_degree(empty_graph()) == 0
