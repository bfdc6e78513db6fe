"""Open games of open graphs.

Two routes lead from a diagram to a game. :func:`direct_game` reads the
game straight off an open graph's normal form. :func:`compositional_game`
maps each generator of a term to the direct game of its normal form and
glues the pieces with :func:`~netgames.open_games.game_compose` and
:func:`~netgames.open_games.game_tensor`. :func:`games_equal` compares two
games extensionally, which is how the two routes are checked against
each other.

Comparing best responses means quantifying over every continuation
``Y -> R``. Instead of listing whole function tables, a continuation is
handed out as a vector whose coordinates are filled in on demand; the
comparison branches over all monoid values of a coordinate only at the
moment one of the two games reads it. Coordinates that neither game
reads cannot influence either answer, so the search is exact.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import natmat as nm
from .adjclass import symmetrize
from .diagram_lang import Gen, Id, Par, Seq, Swap, Term, evaluate, generator_graph
from .errors import BoundExceededError, ShapeError
from .graph_props import PropOps, inject_bij, inject_umat, mediate
from .monoid import CommMonoid, MatrixAction
from .network_games import ARGMAX_TOL, DEFAULT_PROFILE_GUARD, MonoidGame
from .open_games import (FiniteOpenGame, argmax_set, game_compose, game_symmetry,
                         game_tensor, identity_game, trivial_continuation)
from .open_graph import OpenGraph, canonical_form, max_weighted_degree

DEFAULT_BUDGET = 5 * 10**7


class SaturationWarning(UserWarning):
    """A counter monoid may saturate on this graph, so counts above the cap merge."""


@dataclass(frozen=True)
class SemanticsConfig:
    game: MonoidGame
    perm_bound: int = nm.DEFAULT_PERM_BOUND
    profile_guard: int = DEFAULT_PROFILE_GUARD
    # cap on evaluations made by games_equal
    budget: int = DEFAULT_BUDGET
    warn_saturation: bool = True

    @property
    def monoid(self) -> CommMonoid:
        return self.game.monoid

    def check_cap(self, g: OpenGraph) -> bool:
        """False when some vertex or port hears more contributions than the
        monoid can count. Idempotent monoids never lose information this way."""
        mon = self.monoid
        if mon.cap is None or all(mon.op(x, x) == x for x in mon.carrier):
            return True
        return max_weighted_degree(g) <= mon.cap


def _concat(mon: CommMonoid, u, v) -> tuple:
    t = mon._table
    return tuple(t[a, b] for a, b in zip(u, v))


def direct_game(g: OpenGraph, cfg: SemanticsConfig) -> FiniteOpenGame:
    """The game of ``g`` with one player per vertex, in vertex order."""
    if cfg.warn_saturation and not cfg.check_cap(g):
        warnings.warn(f"max weighted degree {max_weighted_degree(g)} exceeds the monoid "
                      f"cap {cfg.monoid.cap}; counts may saturate", SaturationWarning,
                      stacklevel=2)
    game, mon = cfg.game, cfg.monoid
    t = mon._table
    act = lambda mat: MatrixAction(mat, mon)  # noqa: E731
    bt, dt = act(g.b.T), act(g.d.T)
    sym_a, b, c = act(symmetrize(g.a)), act(g.b), act(g.c)
    ct, d, sym_e = act(g.c.T), act(g.d), act(symmetrize(g.e))
    f, xs = game.f, game.strategies

    # everything below except the continuation is fixed by (sigma, x), and the
    # comparison engine asks the same question many times over
    @lru_cache(maxsize=None)
    def heard_from(sigma):
        fs = tuple(f(s) for s in sigma)
        return fs, dt(fs), c(fs)

    @lru_cache(maxsize=None)
    def from_ports(x):
        return bt(x), sym_a(x)

    @lru_cache(maxsize=None)
    def fixed_coplay(sigma, x):
        return _concat(mon, from_ports(x)[1], heard_from(sigma)[2])

    def play(sigma, x):
        return _concat(mon, from_ports(x)[0], heard_from(sigma)[1])

    def coplay(sigma, x, r):
        return _concat(mon, fixed_coplay(sigma, x), b(r))

    @lru_cache(maxsize=None)
    def deviations(p, sigma, x):
        # (s, what p hears from the left and from other vertices, play after deviating)
        from_left = ct.row(p, x)
        bx = from_ports(x)[0]
        out = []
        for s in xs:
            fs, dfs, _ = heard_from(sigma[:p] + (s,) + sigma[p + 1:])
            out.append((s, t[from_left, sym_e.row(p, fs)], _concat(mon, bx, dfs)))
        return tuple(out)

    def best_reply(p, sigma, x, k):
        values = {s: game.g(s, t[base, d.row(p, k(y))]) for s, base, y in deviations(p, sigma, x)}
        return argmax_set(values, ARGMAX_TOL)

    return FiniteOpenGame(mon, g.m, g.n, [xs] * g.k, play, coplay, best_reply,
                          name=f"direct({g.m}->{g.n}, k={g.k})")


def compositional_game(t: Term, cfg: SemanticsConfig) -> FiniteOpenGame:
    """Structural recursion on ``t``; players appear in term order."""
    gens = {}

    def go(t):
        if isinstance(t, Gen):
            if t.name not in gens:
                gens[t.name] = direct_game(generator_graph(t.name), cfg)
            return gens[t.name]
        if isinstance(t, Id):
            return identity_game(cfg.monoid, t.n)
        if isinstance(t, Swap):
            return game_symmetry(cfg.monoid, t.m, t.n)
        if isinstance(t, Seq):
            return game_compose(go(t.first), go(t.second))
        if isinstance(t, Par):
            return game_tensor(go(t.left), go(t.right))
        raise TypeError(f"not a term: {t!r}")

    return go(t)


def term_games(t: Term, cfg: SemanticsConfig):
    """``(compositional, direct, word)`` for a term, where ``word`` maps players
    of the direct game on the canonical graph to players of the compositional
    game (direct player i is compositional player ``word[i]``)."""
    raw = evaluate(t, canonical=False)
    canon, word = canonical_form(raw, perm_bound=cfg.perm_bound)
    return compositional_game(t, cfg), direct_game(canon, cfg), word


def open_game_ops(monoid: CommMonoid) -> PropOps:
    return PropOps(game_compose, game_tensor, lambda n: identity_game(monoid, n),
                   lambda m, n: game_symmetry(monoid, m, n))


def mediated_game(g: OpenGraph, cfg: SemanticsConfig) -> FiniteOpenGame:
    """The game of ``g`` assembled from its vertex-free part and its vertices.

    Players come out in the order of the stored bound permutation, so player
    i here is vertex ``mediator_decompose(g)[1].p.word[i]`` of ``g``.
    """
    return mediate(g, open_game_ops(cfg.monoid),
                   lambda w: direct_game(inject_umat(w), cfg),
                   lambda v: direct_game(inject_bij(v), cfg))


def nash(g: OpenGraph, cfg: SemanticsConfig) -> list[tuple]:
    """Pure equilibria of the closed graph ``g``, sorted."""
    if not g.is_closed():
        raise ShapeError(f"equilibria need a closed graph, got {g.m}->{g.n}")
    size = len(cfg.game.strategies) ** g.k
    if size > cfg.profile_guard:
        raise BoundExceededError(f"{size} profiles exceed the guard {cfg.profile_guard}",
                                 size=size, bound=cfg.profile_guard)
    return direct_game(g, cfg).equilibria((), trivial_continuation)


# ---------------------------------------------------------------- comparison

class _Unassigned(Exception):
    def __init__(self, key):
        self.key = key


class _Cell:
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key


class _LazyVec:
    """A continuation's output whose coordinates are looked up when read."""

    __slots__ = ("cells", "assign")

    def __init__(self, cells, assign):
        self.cells = cells
        self.assign = assign

    def _get(self, c):
        if not isinstance(c, _Cell):
            return c
        try:
            return self.assign[c.key]
        except KeyError:
            raise _Unassigned(c.key) from None

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return _LazyVec(self.cells[i], self.assign)
        return self._get(self.cells[i])

    def __iter__(self):
        return (self._get(c) for c in self.cells)

    def __add__(self, other):
        cells = other.cells if isinstance(other, _LazyVec) else tuple(other)
        return _LazyVec(self.cells + cells, self.assign)

    def __radd__(self, other):
        return _LazyVec(tuple(other) + self.cells, self.assign)

    __hash__ = None


class _Counter:
    def __init__(self, budget):
        self.n, self.budget = 0, budget

    def tick(self, amount=1):
        self.n += amount
        if self.n > self.budget:
            raise BoundExceededError(
                f"comparison needs more than {self.budget} evaluations", size=self.n,
                bound=self.budget)


def _reply_mismatch(f1, f2, carrier, cod, counter):
    """Search for a continuation on which ``f1`` and ``f2`` disagree.

    Both take a continuation and return a set of strategies. Returns None
    when they agree on every continuation, else a description."""
    assign = {}
    cells = {}

    def kappa(y):
        if y not in cells:
            cells[y] = tuple(_Cell((y, j)) for j in range(cod))
        return _LazyVec(cells[y], assign)

    def run(f):
        try:
            return f(kappa), None
        except _Unassigned as u:
            return None, u.key

    def search():
        counter.tick()
        r1, missing = run(f1)
        if missing is None:
            r2, missing = run(f2)
        if missing is not None:
            for v in carrier:
                assign[missing] = v
                found = search()
                if found:
                    return found
            del assign[missing]
            return None
        if r1 != r2:
            return f"{sorted(r1)} vs {sorted(r2)} when continuation reads {dict(assign)}"
        return None

    return search()


def game_mismatch(g1: FiniteOpenGame, g2: FiniteOpenGame, relabel=None,
                  budget: int = DEFAULT_BUDGET) -> str | None:
    """First difference found between two games, or None when they agree.

    ``relabel[i]`` names the player of g2 that corresponds to player i of
    g1; profiles are translated accordingly. Play and coplay are compared on
    every input, best replies on every input and every continuation.
    """
    if (g1.dom, g1.cod) != (g2.dom, g2.cod):
        return f"interfaces differ: {g1.dom}->{g1.cod} vs {g2.dom}->{g2.cod}"
    if g1.monoid is not g2.monoid:
        return "games over different monoids"
    n = g1.n_players
    if g2.n_players != n:
        return f"player counts differ: {n} vs {g2.n_players}"
    word = tuple(range(n)) if relabel is None else tuple(relabel)
    if sorted(word) != list(range(n)):
        raise ValueError(f"relabel {word} is not a permutation of {n} players")
    for i in range(n):
        if set(g1.players[i]) != set(g2.players[word[i]]):
            return f"strategy sets of player {i} differ"

    mon = g1.monoid
    n_x, n_r = len(mon) ** g1.dom, len(mon) ** g1.cod
    upfront = g2.n_profiles() * n_x * (n_r + 1)
    if upfront > budget:
        raise BoundExceededError(
            f"{g2.n_profiles()} profiles x {n_x} inputs x {n_r} responses exceed "
            f"the comparison budget {budget}", size=upfront, bound=budget)
    counter = _Counter(budget)
    counter.tick(upfront)
    xs, rs = list(g1.x_set()), list(g1.r_set())

    for sigma2 in g2.profiles():
        sigma1 = tuple(sigma2[word[i]] for i in range(n))
        for x in xs:
            if g1.play(sigma1, x) != g2.play(sigma2, x):
                return f"play differs at profile {sigma1}, input {x}"
            for r in rs:
                if g1.coplay(sigma1, x, r) != g2.coplay(sigma2, x, r):
                    return f"coplay differs at profile {sigma1}, input {x}, response {r}"
            for p in range(n):
                q = word[p]
                found = _reply_mismatch(
                    lambda k: g1.best_reply(p, sigma1, x, k),
                    lambda k: g2.best_reply(q, sigma2, x, k),
                    mon.carrier, g1.cod, counter)
                if found:
                    return f"best reply of player {p} differs at profile {sigma1}, input {x}: {found}"
    return None


def games_equal(g1: FiniteOpenGame, g2: FiniteOpenGame, relabel=None,
                budget: int = DEFAULT_BUDGET) -> bool:
    return game_mismatch(g1, g2, relabel, budget) is None


def check_term(t: Term, cfg: SemanticsConfig) -> str | None:
    """Compare the compositional game of ``t`` with the direct game of its normal form."""
    comp, direct, word = term_games(t, cfg)
    return game_mismatch(direct, comp, word, cfg.budget)
