import random

import pytest

from netgames import natmat as nm
from netgames.adjclass import adj_class, zero_class
from netgames.checks import random_bij, random_graph, random_umat
from netgames.diagram_lang import evaluate, generator_graph, parse
from netgames.errors import ShapeError
from netgames.graph_props import (OPEN_GRAPHS, BoundPerm, UmatMorphism, bij_compose,
                                  bij_identity, bij_tensor, bij_vertices, bound_row_variants,
                                  inject_bij, inject_umat, mediate, mediator_decompose, umat,
                                  umat_compose, umat_identity, umat_tensor)
from netgames.natmat import NatMatrix, PermMatrix
from netgames.open_graph import closed_graph, og_equal, og_identity


def test_umat_compose_examples():
    g = umat(NatMatrix([[1], [1]]))
    h = umat(NatMatrix([[1, 1]]))
    gh = umat_compose(g, h)
    assert gh.b.tolist() == [[1, 1], [1, 1]] and gh.a == zero_class(2)
    assert og_equal(inject_umat(gh), evaluate(parse("mult ; comult")))
    for f in (g, h, gh):
        assert umat_compose(umat_identity(f.m), f) == f == umat_compose(f, umat_identity(f.n))
    edge = NatMatrix([[0, 1], [0, 0]])
    assert umat_compose(umat(nm.identity(2), edge), umat_identity(2)) == umat(nm.identity(2), edge)


def test_umat_compose_pushes_classes_through_b():
    # 1 -> 2 copy, then a cup on the two copies: a self-loop on the single input
    g = umat(NatMatrix([[1, 1]]))
    h = umat(nm.zeros(2, 0), NatMatrix([[0, 1], [0, 0]]))
    loop = umat_compose(g, h).a
    assert loop.canon.tolist() == [[1]]
    assert loop.symmetric().tolist() == [[2]]


def test_umat_tensor_examples():
    unit = umat(nm.zeros(0, 1))
    uu = umat_tensor(unit, unit)
    assert uu.b.shape == (0, 2) and uu.a.dim == 0
    g = umat(NatMatrix([[1]]))
    assert umat_tensor(g, umat_identity(0)) == g
    assert umat_tensor(g, umat(NatMatrix([[2]]))).b.tolist() == [[1, 0], [0, 2]]


def test_umat_shape_errors():
    with pytest.raises(ShapeError):
        UmatMorphism(2, 1, NatMatrix([[1]]), zero_class(2))
    with pytest.raises(ShapeError):
        umat_compose(umat(NatMatrix([[1]])), umat(NatMatrix([[1], [1]])))


def test_bound_canonical_form_matches_brute_force():
    rng = random.Random(3)
    for _ in range(300):
        g = random_bij(rng)
        variants = bound_row_variants(g)
        assert g.p == min(variants, key=lambda p: p.entries)
        for p in variants:
            assert BoundPerm(g.m, g.k, p) == g


def test_bij_examples():
    assert bij_compose(bij_identity(2), bij_identity(2)) == bij_identity(2)
    v = bij_vertices(1)
    assert bij_compose(v, BoundPerm(1, 0, nm.identity(1))) == v
    two = bij_compose(bij_vertices(1), BoundPerm(1, 1, nm.identity(2)))
    assert two == bij_vertices(2)
    assert two == bij_compose(bij_vertices(1), BoundPerm(1, 1, nm.swap_block(1, 1)))
    assert bij_tensor(bij_vertices(1), bij_vertices(1)) == bij_vertices(2)
    with pytest.raises(ShapeError):
        bij_compose(bij_vertices(1), bij_identity(2))


def test_bound_perm_json():
    g = BoundPerm(1, 2, PermMatrix.from_word([2, 0, 1]))
    assert BoundPerm.from_json(g.to_json()) == g
    u = umat(NatMatrix([[1, 2]]), NatMatrix([[1]]))
    assert UmatMorphism.from_json(u.to_json()) == u


def test_inclusions():
    assert og_equal(inject_umat(umat_identity(2)), og_identity(2))
    assert inject_bij(bij_vertices(1)) == generator_graph("vertex")
    v = inject_bij(bij_vertices(1))
    assert (v.m, v.n, v.k, v.d.tolist()) == (0, 1, 1, [[1]])


def test_mediator_examples():
    edge = closed_graph(2, [(0, 1)])
    w, v = mediator_decompose(edge)
    assert (w.m, w.n) == (2, 0)
    assert w.a.canon.tolist() == [[0, 1], [0, 0]]
    assert v == bij_vertices(2)
    g = evaluate(parse("mult ; comult"))
    w, v = mediator_decompose(g)
    assert w == UmatMorphism(2, 2, g.b, g.a) and v == bij_vertices(0)
    w, v = mediator_decompose(og_identity(3))
    assert w == umat_identity(3) and v == bij_identity(0)


def test_mediator_round_trip():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng)
        assert og_equal(mediate(g, OPEN_GRAPHS, inject_umat, inject_bij), g)


def test_mediator_respects_composition():
    # H is a homomorphism: H(g ; h) = H(g) ; H(h) with H the identity instance
    rng = random.Random(5)
    from netgames.open_graph import og_compose
    for _ in range(100):
        g = random_graph(rng, max_k=2)
        h = random_graph(rng, m=g.n, max_k=2)
        lhs = mediate(og_compose(g, h), OPEN_GRAPHS, inject_umat, inject_bij)
        rhs = og_compose(mediate(g, OPEN_GRAPHS, inject_umat, inject_bij),
                         mediate(h, OPEN_GRAPHS, inject_umat, inject_bij))
        assert og_equal(lhs, rhs)


def test_random_generators_respect_bounds():
    rng = random.Random(0)
    for _ in range(50):
        u = random_umat(rng)
        assert max(u.b.entries, default=0) <= 2 and u.m <= 3
        assert adj_class(u.a.canon) == u.a
