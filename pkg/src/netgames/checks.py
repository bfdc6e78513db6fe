"""Randomized law checks and the direct-vs-compositional agreement corpus.

Everything here is seeded and deterministic: the same seed yields the same
instances, in the same order, and the same report lines.
"""

from __future__ import annotations

import random

from . import natmat as nm
from .adjclass import adj_class, symmetrize
from .diagram_lang import (Comult, Counit, CheckResult, Cup, Gen, Id, Mult, Par, Seq, Swap,
                           Term, Unit, Vertex, count_vertices, load_equations, parse)
from .errors import NetGamesError
from .graph_props import (OPEN_GRAPHS, BoundPerm, UmatMorphism, bij_compose,
                          bij_identity, bij_symmetry, bij_tensor, inject_bij, inject_umat,
                          mediate, umat_compose, umat_identity, umat_symmetry, umat_tensor)
from .natmat import NatMatrix, PermMatrix
from .network_games import majority_game
from .open_graph import (OpenGraph, og_compose, og_equal, og_identity, og_symmetry,
                         og_tensor)

DEFAULT_TRIALS = 500
MAX_ENTRY = 2


# ---------------------------------------------------------------- generators

def random_matrix(rng: random.Random, rows: int, cols: int, top: int = MAX_ENTRY) -> NatMatrix:
    if rows == 0 or cols == 0:
        return nm.zeros(rows, cols)
    return NatMatrix([[rng.randint(0, top) for _ in range(cols)] for _ in range(rows)])


def random_perm(rng: random.Random, k: int) -> PermMatrix:
    word = list(range(k))
    rng.shuffle(word)
    return PermMatrix.from_word(word)


def random_graph(rng: random.Random, m=None, n=None, k=None, *, max_dim=3,
                 max_k=3) -> OpenGraph:
    m = rng.randint(0, max_dim) if m is None else m
    n = rng.randint(0, max_dim) if n is None else n
    k = rng.randint(0, max_k) if k is None else k
    return OpenGraph(m, n, k, adj_class(random_matrix(rng, m, m)), random_matrix(rng, m, n),
                     random_matrix(rng, m, k), random_matrix(rng, k, n),
                     adj_class(random_matrix(rng, k, k)))


def random_umat(rng: random.Random, m=None, n=None, *, max_dim=3) -> UmatMorphism:
    m = rng.randint(0, max_dim) if m is None else m
    n = rng.randint(0, max_dim) if n is None else n
    return UmatMorphism(m, n, random_matrix(rng, m, n), adj_class(random_matrix(rng, m, m)))


def random_bij(rng: random.Random, m=None, k=None, *, max_dim=3, max_k=3) -> BoundPerm:
    m = rng.randint(0, max_dim) if m is None else m
    k = rng.randint(0, max_k) if k is None else k
    return BoundPerm(m, k, random_perm(rng, m + k))


# atoms grouped by domain, with sampling weights
_BY_DOM = {
    0: [(Unit, 1), (Vertex, 3)],
    1: [(Id(1), 2), (Comult, 2), (Counit, 1)],
    2: [(Mult, 2), (Cup, 1), (Swap(1, 1), 1), (Id(2), 1)],
}


def random_term(rng: random.Random, *, max_vertices=3, max_width=2, layers=(1, 4)) -> Term:
    """A well-typed term whose wires never get wider than ``max_width``.

    The term is a sequence of layers; each layer is a row of atoms laid side
    by side that consumes the current wires."""
    while True:
        width = rng.randint(0, max_width)
        vertices = 0
        term = None
        for _ in range(rng.randint(*layers)):
            layer, dom_left, out = [], width, 0
            while dom_left or not layer or rng.random() < 0.2:
                d = rng.choice([d for d in _BY_DOM if d <= dom_left])
                atoms, weights = zip(*_BY_DOM[d])
                atom = rng.choices(atoms, weights)[0]
                if atom == Vertex:
                    if vertices == max_vertices:
                        atom = Unit
                    else:
                        vertices += 1
                layer.append(atom)
                dom_left -= atom.dom
                out += atom.cod
                if len(layer) > 4:
                    break
            if dom_left or out > max_width:
                term = None
                break
            row = layer[0]
            for atom in layer[1:]:
                row = Par(row, atom)
            term = row if term is None else Seq(term, row)
            width = out
        if term is not None:
            return term


# ---------------------------------------------------------------- path counting

def path_count(t: Term) -> tuple[list[list[int]], list[list[int]]]:
    """Wire-level semantics of a vertex-free term, computed by tracing the
    diagram: ``B[i][j]`` is the number of paths from left port i to right
    port j and ``S[i][j]`` the number of ways a cup joins ports i and j
    (both orders counted, so ``S`` is symmetric)."""
    if count_vertices(t):
        raise ValueError("path counting needs a vertex-free term")
    sources = []   # sources[w] = wires feeding wire w
    cups = []

    def new_wire(feeds):
        sources.append(list(feeds))
        return len(sources) - 1

    def trace(t, wires):
        if isinstance(t, Id):
            return wires
        if isinstance(t, Swap):
            return wires[t.m:] + wires[:t.m]
        if isinstance(t, Seq):
            return trace(t.second, trace(t.first, wires))
        if isinstance(t, Par):
            left = t.left.dom
            return trace(t.left, wires[:left]) + trace(t.right, wires[left:])
        if isinstance(t, Gen):
            if t.name == "mult":
                return [new_wire(wires)]
            if t.name == "unit":
                return [new_wire([])]
            if t.name == "comult":
                return [new_wire(wires), new_wire(wires)]
            if t.name == "counit":
                return []
            if t.name == "cup":
                cups.append(tuple(wires))
                return []
        raise TypeError(t)

    inputs = [new_wire([]) for _ in range(t.dom)]
    outputs = trace(t, inputs)
    # paths[i][w]: paths from input i to wire w; wires are created in order
    paths = []
    for i in range(t.dom):
        row = [0] * len(sources)
        row[inputs[i]] = 1
        for w, feeds in enumerate(sources):
            if feeds:
                row[w] = sum(row[v] for v in feeds)
        paths.append(row)
    b = [[paths[i][w] for w in outputs] for i in range(t.dom)]
    s = [[0] * t.dom for _ in range(t.dom)]
    for u, v in cups:
        for i in range(t.dom):
            for j in range(t.dom):
                s[i][j] += paths[i][u] * paths[j][v] + paths[i][v] * paths[j][u]
    return b, s


# ---------------------------------------------------------------- prop laws

def _trial(rng, check):
    try:
        return check(rng)
    except NetGamesError as exc:
        return f"raised {exc}"


def _law_coherence(rng):
    g = random_graph(rng)
    h = random_graph(rng, m=g.n)
    p, q = random_perm(rng, g.k), random_perm(rng, h.k)
    return og_equal(og_compose(g.relabel(p), h.relabel(q)), og_compose(g, h))


def _law_associativity(rng):
    f = random_graph(rng, max_k=2)
    g = random_graph(rng, m=f.n, max_k=2)
    h = random_graph(rng, m=g.n, max_k=2)
    return og_equal(og_compose(og_compose(f, g), h), og_compose(f, og_compose(g, h)))


def _law_units(rng):
    g = random_graph(rng)
    return (og_equal(og_compose(og_identity(g.m), g), g)
            and og_equal(og_compose(g, og_identity(g.n)), g)
            and og_equal(og_tensor(og_identity(0), g), g))


def _law_tensor_associativity(rng):
    f, g, h = (random_graph(rng, max_k=2) for _ in range(3))
    return og_equal(og_tensor(og_tensor(f, g), h), og_tensor(f, og_tensor(g, h)))


def _law_interchange(rng):
    f = random_graph(rng, max_dim=2, max_k=1)
    g = random_graph(rng, max_dim=2, max_k=2)
    h = random_graph(rng, m=f.n, max_dim=2, max_k=1)
    k = random_graph(rng, m=g.n, max_dim=2, max_k=2)
    return og_equal(og_compose(og_tensor(f, g), og_tensor(h, k)),
                    og_tensor(og_compose(f, h), og_compose(g, k)))


def _law_symmetry_inverse(rng):
    m, n = rng.randint(0, 3), rng.randint(0, 3)
    return og_equal(og_compose(og_symmetry(m, n), og_symmetry(n, m)), og_identity(m + n))


def _law_symmetry_natural(rng):
    f = random_graph(rng, max_k=2)
    g = random_graph(rng, max_k=2)
    return og_equal(og_compose(og_tensor(f, g), og_symmetry(f.n, g.n)),
                    og_compose(og_symmetry(f.m, g.m), og_tensor(g, f)))


def _law_hexagon(rng):
    m, n, p = (rng.randint(0, 3) for _ in range(3))
    lhs = og_symmetry(m, n + p)
    rhs = og_compose(og_tensor(og_symmetry(m, n), og_identity(p)),
                     og_tensor(og_identity(n), og_symmetry(m, p)))
    return og_equal(lhs, rhs)


def _law_bij(rng):
    f = random_bij(rng, max_k=2)
    g = random_bij(rng, m=f.n, max_k=2)
    h = random_bij(rng, m=g.n, max_k=2)
    u, v = random_bij(rng), random_bij(rng)
    m, n = rng.randint(0, 3), rng.randint(0, 3)
    return (bij_compose(bij_compose(f, g), h) == bij_compose(f, bij_compose(g, h))
            and bij_compose(bij_identity(f.m), f) == f == bij_compose(f, bij_identity(f.n))
            and bij_compose(bij_symmetry(m, n), bij_symmetry(n, m)) == bij_identity(m + n)
            and bij_compose(bij_tensor(u, v), bij_symmetry(u.n, v.n))
            == bij_compose(bij_symmetry(u.m, v.m), bij_tensor(v, u)))


def _law_umat(rng):
    f = random_umat(rng)
    g = random_umat(rng, m=f.n)
    h = random_umat(rng, m=g.n)
    u, v = random_umat(rng), random_umat(rng)
    return (umat_compose(umat_compose(f, g), h) == umat_compose(f, umat_compose(g, h))
            and umat_compose(umat_identity(f.m), f) == f == umat_compose(f, umat_identity(f.n))
            and umat_compose(umat_tensor(u, v), umat_symmetry(u.n, v.n))
            == umat_compose(umat_symmetry(u.m, v.m), umat_tensor(v, u)))


def _law_inject_umat(rng):
    f = random_umat(rng)
    g = random_umat(rng, m=f.n)
    u = random_umat(rng)
    m, n = rng.randint(0, 3), rng.randint(0, 3)
    return (og_equal(inject_umat(umat_compose(f, g)), og_compose(inject_umat(f), inject_umat(g)))
            and og_equal(inject_umat(umat_tensor(f, u)),
                         og_tensor(inject_umat(f), inject_umat(u)))
            and og_equal(inject_umat(umat_identity(m)), og_identity(m))
            and og_equal(inject_umat(umat_symmetry(m, n)), og_symmetry(m, n)))


def _law_inject_bij(rng):
    f = random_bij(rng)
    g = random_bij(rng, m=f.n, max_k=3 - f.k)
    u = random_bij(rng, max_k=3 - f.k)
    m, n = rng.randint(0, 3), rng.randint(0, 3)
    return (og_equal(inject_bij(bij_compose(f, g)), og_compose(inject_bij(f), inject_bij(g)))
            and og_equal(inject_bij(bij_tensor(f, u)), og_tensor(inject_bij(f), inject_bij(u)))
            and og_equal(inject_bij(bij_identity(m)), og_identity(m))
            and og_equal(inject_bij(bij_symmetry(m, n)), og_symmetry(m, n)))


def _law_mediator(rng):
    g = random_graph(rng)
    return og_equal(mediate(g, OPEN_GRAPHS, inject_umat, inject_bij), g)


PROP_LAWS = {
    "composition-coherence": _law_coherence,
    "associativity": _law_associativity,
    "units": _law_units,
    "tensor-associativity": _law_tensor_associativity,
    "interchange": _law_interchange,
    "symmetry-inverse": _law_symmetry_inverse,
    "symmetry-naturality": _law_symmetry_natural,
    "hexagon": _law_hexagon,
    "bij-laws": _law_bij,
    "umat-laws": _law_umat,
    "inclusion-umat": _law_inject_umat,
    "inclusion-bij": _law_inject_bij,
    "mediator-round-trip": _law_mediator,
}


def prop_law_suite(seed: int = 0, trials: int = DEFAULT_TRIALS, laws=None) -> list[CheckResult]:
    """Run every law on ``trials`` random instances; one result per law."""
    results = []
    for name in laws or PROP_LAWS:
        rng = random.Random(f"{seed}/{name}")
        failures, first = 0, ""
        for i in range(trials):
            ok = _trial(rng, PROP_LAWS[name])
            if ok is not True:
                failures += 1
                first = first or f"trial {i}: {ok if isinstance(ok, str) else 'laws disagree'}"
        detail = f"{trials - failures}/{trials}" + (f"; first failure {first}" if failures else "")
        results.append(CheckResult(f"props/{name}", failures == 0, detail))
    return results


def path_count_suite(seed: int = 0, trials: int = 200) -> list[CheckResult]:
    """Normal forms of vertex-free terms against the diagram-tracing oracle."""
    from .diagram_lang import evaluate
    rng = random.Random(f"{seed}/paths")
    bad = ""
    for i in range(trials):
        t = random_term(rng, max_vertices=0, max_width=3, layers=(1, 5))
        g = evaluate(t)
        b, s = path_count(t)
        if g.k != 0 or g.b.tolist() != b or symmetrize(g.a).tolist() != s:
            bad = f"trial {i}: {t}"
            break
    return [CheckResult("props/path-count", not bad, bad or f"{trials}/{trials}")]


# ---------------------------------------------------------------- functoriality

def functor_corpus(seed: int = 0, n_random: int = 20) -> list[tuple[str, Term]]:
    """Every generator, every equation side and ``n_random`` random terms."""
    corpus = [(g.name, g) for g in (Mult, Unit, Comult, Counit, Cup, Vertex)]
    corpus += [("id(1)", Id(1)), ("swap(1,1)", Swap(1, 1))]
    for eq in load_equations():
        corpus.append((f"{eq.name}/lhs", parse(eq.lhs)))
        corpus.append((f"{eq.name}/rhs", parse(eq.rhs)))
    rng = random.Random(f"{seed}/functor")
    seen = set()
    while len(seen) < n_random:
        t = random_term(rng)
        if t not in seen:
            seen.add(t)
            corpus.append((f"random-{len(seen) - 1}", t))
    return corpus


def functor_suite(seed: int = 0, n_random: int = 20, cap: int = 2) -> list[CheckResult]:
    """Compositional against direct games over majority with counters saturating at ``cap``."""
    from .semantics import SemanticsConfig, check_term
    cfg = SemanticsConfig(majority_game(cap), warn_saturation=False)
    results = []
    for name, t in functor_corpus(seed, n_random):
        try:
            problem = check_term(t, cfg)
        except NetGamesError as exc:
            problem = f"raised {exc}"
        results.append(CheckResult(f"functor/{name}", problem is None,
                                   problem or f"{t}"))
    return results
