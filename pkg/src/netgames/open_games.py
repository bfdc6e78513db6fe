"""Finite open games built from players and lifted functions.

A game ``(X, S) -> (Y, R)`` here has states ``X = S = M^dom`` and
``Y = R = M^cod`` for a finite monoid M, i.e. its interfaces are monoid
vectors (plain tuples). A strategy profile is a flat tuple with one entry
per player; sequential and parallel composition concatenate profiles,
left game first.

Best responses are kept per player: ``best_reply(p, sigma, x, k)`` is the
set of strategies player p may switch to when the others play ``sigma``,
the state is ``x`` and the continuation is ``k : Y -> R``. The best
response relation is the product of these sets over all players.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Sequence

from .errors import ShapeError
from .monoid import CommMonoid


class FiniteOpenGame:
    def __init__(self, monoid: CommMonoid, dom: int, cod: int, players: Sequence[tuple],
                 play: Callable, coplay: Callable, best_reply: Callable | None = None,
                 name: str = "game"):
        self.monoid = monoid
        self.dom = dom
        self.cod = cod
        # strategy set of each player
        self.players = tuple(tuple(s) for s in players)
        self.play = play
        self.coplay = coplay
        self.best_reply = best_reply or _no_players
        self.name = name

    @property
    def n_players(self) -> int:
        return len(self.players)

    def profiles(self):
        return itertools.product(*self.players)

    def n_profiles(self) -> int:
        out = 1
        for s in self.players:
            out *= len(s)
        return out

    def x_set(self):
        return self.monoid.vectors(self.dom)

    def r_set(self):
        return self.monoid.vectors(self.cod)

    y_set = r_set
    s_set = x_set

    def best(self, x: tuple, k: Callable) -> set[tuple[tuple, tuple]]:
        """The best response relation as a set of ``(sigma, sigma')`` pairs."""
        out = set()
        for sigma in self.profiles():
            replies = [self.best_reply(p, sigma, x, k) for p in range(self.n_players)]
            out.update((sigma, s2) for s2 in itertools.product(*replies))
        return out

    def is_equilibrium(self, sigma: tuple, x: tuple, k: Callable) -> bool:
        return all(sigma[p] in self.best_reply(p, sigma, x, k) for p in range(self.n_players))

    def equilibria(self, x: tuple = (), k: Callable | None = None) -> list[tuple]:
        """Profiles related to themselves by the best response relation."""
        if k is None:
            k = trivial_continuation
        return sorted(s for s in self.profiles() if self.is_equilibrium(s, x, k))

    def __repr__(self):
        return (f"FiniteOpenGame({self.name}: M^{self.dom} -> M^{self.cod}, "
                f"{self.n_players} players)")


def trivial_continuation(y):
    return ()


def _no_players(p, sigma, x, k):
    raise IndexError(f"game has no player {p}")


def _cached(fn):
    return lru_cache(maxsize=1 << 16)(fn)


def lifted_game(monoid: CommMonoid, dom: int, cod: int, fun: Callable, cofun: Callable,
                name: str = "lifted") -> FiniteOpenGame:
    """A game with no players: play ``x -> fun(x)``, coplay ``(x, r) -> cofun(x, r)``."""
    return FiniteOpenGame(monoid, dom, cod, (), lambda sigma, x: fun(x),
                          lambda sigma, x, r: cofun(x, r), name=name)


def identity_game(monoid: CommMonoid, n: int) -> FiniteOpenGame:
    return lifted_game(monoid, n, n, lambda x: x, lambda x, r: r, name=f"id({n})")


def game_compose(g1: FiniteOpenGame, g2: FiniteOpenGame) -> FiniteOpenGame:
    """``g1`` followed by ``g2``."""
    if g1.cod != g2.dom or g1.monoid is not g2.monoid:
        raise ShapeError(f"cannot compose {g1!r} with {g2!r}")
    n1 = g1.n_players
    # coplay is left uncached: its last argument may be a lazily filled vector
    play1, play2 = _cached(g1.play), _cached(g2.play)
    coplay1, coplay2 = g1.coplay, g2.coplay

    def play(sigma, x):
        return play2(sigma[n1:], play1(sigma[:n1], x))

    def coplay(sigma, x, q):
        s1, s2 = sigma[:n1], sigma[n1:]
        return coplay1(s1, x, coplay2(s2, play1(s1, x), q))

    def best_reply(p, sigma, x, k):
        s1, s2 = sigma[:n1], sigma[n1:]
        if p < n1:
            def k1(y):
                return coplay2(s2, y, k(play2(s2, y)))
            return g1.best_reply(p, s1, x, k1)
        return g2.best_reply(p - n1, s2, play1(s1, x), k)

    return FiniteOpenGame(g1.monoid, g1.dom, g2.cod, g1.players + g2.players,
                          play, coplay, best_reply, name=f"({g1.name} ; {g2.name})")


def game_tensor(g1: FiniteOpenGame, g2: FiniteOpenGame) -> FiniteOpenGame:
    """``g1`` and ``g2`` side by side; states and profiles concatenate."""
    if g1.monoid is not g2.monoid:
        raise ShapeError("games over different monoids")
    n1, d1, c1 = g1.n_players, g1.dom, g1.cod
    play1, play2 = _cached(g1.play), _cached(g2.play)

    def play(sigma, x):
        return play1(sigma[:n1], x[:d1]) + play2(sigma[n1:], x[d1:])

    def coplay(sigma, x, r):
        return (g1.coplay(sigma[:n1], x[:d1], r[:c1])
                + g2.coplay(sigma[n1:], x[d1:], r[c1:]))

    def best_reply(p, sigma, x, k):
        s1, s2 = sigma[:n1], sigma[n1:]
        x1, x2 = x[:d1], x[d1:]
        if p < n1:
            other = play2(s2, x2)

            def k1(y1):
                return k(y1 + other)[:c1]
            return g1.best_reply(p, s1, x1, k1)
        other = play1(s1, x1)

        def k2(y2):
            return k(other + y2)[c1:]
        return g2.best_reply(p - n1, s2, x2, k2)

    return FiniteOpenGame(g1.monoid, g1.dom + g2.dom, g1.cod + g2.cod,
                          g1.players + g2.players, play, coplay, best_reply,
                          name=f"({g1.name} # {g2.name})")


def game_symmetry(monoid: CommMonoid, m: int, n: int) -> FiniteOpenGame:
    return lifted_game(monoid, m + n, n + m, lambda x: x[m:] + x[:m],
                       lambda x, r: r[n:] + r[:n], name=f"swap({m},{n})")


def argmax_set(values: dict, tol: float) -> frozenset:
    top = max(values.values())
    return frozenset(s for s, v in values.items() if v >= top - tol)
