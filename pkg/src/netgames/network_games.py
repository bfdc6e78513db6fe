"""Monoid network games ``(X, M, f, g)`` and the classical game on a closed graph.

Each player picks a strategy in X and broadcasts ``f(x)`` to its
neighbours; a player's payoff is ``g(own strategy, sum of what it hears)``
with the sum taken in the commutative monoid M and each neighbour counted
once per edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping

from .adjclass import symmetrize
from .errors import BoundExceededError, ShapeError
from .monoid import CommMonoid, bool_or, element_from_json, monoid_from_json, product, sat_counter
from .open_graph import OpenGraph

ARGMAX_TOL = 1e-9
DEFAULT_PROFILE_GUARD = 10**7


@dataclass(frozen=True)
class MonoidGame:
    strategies: tuple
    monoid: CommMonoid
    broadcast: Mapping[Hashable, Hashable]
    utility: Mapping[tuple, float]
    name: str = "custom"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        elems = set(self.monoid.carrier)
        for x in self.strategies:
            if x not in self.broadcast:
                raise ValueError(f"broadcast undefined on strategy {x!r}")
            if self.broadcast[x] not in elems:
                raise ValueError(f"broadcast of {x!r} is not a monoid element")
            for m in self.monoid.carrier:
                if (x, m) not in self.utility:
                    raise ValueError(f"utility undefined at ({x!r}, {m!r})")

    def f(self, x):
        return self.broadcast[x]

    def g(self, x, m) -> float:
        return self.utility[x, m]

    @classmethod
    def tabulate(cls, strategies, monoid, f, g, **kw) -> MonoidGame:
        strategies = tuple(strategies)
        return cls(strategies, monoid, {x: f(x) for x in strategies},
                   {(x, m): float(g(x, m)) for x in strategies for m in monoid.carrier}, **kw)

    def with_cap(self, cap: int) -> MonoidGame:
        """The same builtin game over counters saturating at ``cap``."""
        if self.name == "majority":
            return majority_game(cap, self.params.get("tie_wins", True))
        raise ValueError(f"game {self.name!r} has no counter cap to change")

    def to_json(self) -> dict:
        if self.name in ("majority", "best_shot"):
            return {"game": self.name, **self.params}
        raise ValueError("custom games are not re-serialised")


def majority_game(cap: int = 4, tie_wins: bool = True) -> MonoidGame:
    """Players win (payoff 1) when their strategy is at least as common among
    their neighbours as the other one (strictly more common if ``tie_wins``
    is false). The monoid counts neighbours playing 0 and 1 separately."""
    mon = product(sat_counter(cap), sat_counter(cap))
    bc = {0: (1, 0), 1: (0, 1)}

    def g(s, counts):
        mine, other = counts[s], counts[1 - s]
        return 1.0 if mine > other or (tie_wins and mine == other) else 0.0

    return MonoidGame.tabulate((0, 1), mon, bc.__getitem__, g, name="majority",
                               params={"cap": cap, "tie_wins": tie_wins})


def best_shot_game(benefit: float = 1.0, cost: float = 0.4) -> MonoidGame:
    """Best-shot public goods: a player enjoys ``benefit`` if it or some
    neighbour provides the good, and pays ``cost`` for providing it."""
    if not benefit > cost > 0:
        raise ValueError(f"need benefit > cost > 0, got benefit={benefit}, cost={cost}")
    return MonoidGame.tabulate(
        (0, 1), bool_or(), lambda x: x,
        lambda s, m: benefit * (1 if (s == 1 or m == 1) else 0) - cost * s,
        name="best_shot", params={"benefit": benefit, "cost": cost})


def game_from_json(obj) -> MonoidGame:
    """Build a game from its JSON configuration (see the README)."""
    kind = obj.get("game")
    if kind == "majority":
        return majority_game(int(obj.get("cap", 4)), bool(obj.get("tie_wins", True)))
    if kind == "best_shot":
        return best_shot_game(float(obj.get("benefit", 1.0)), float(obj.get("cost", 0.4)))
    if kind == "custom":
        strategies = tuple(element_from_json(x) for x in obj["X"])
        mon = monoid_from_json(obj["monoid"])
        f_table = obj["f"]
        by_name = {str(x): x for x in strategies}
        bc = {by_name[str(k)]: element_from_json(v) for k, v in f_table.items()}
        util = {}
        for x, m, value in obj["g"]:
            util[element_from_json(x), element_from_json(m)] = float(value)
        return MonoidGame(strategies, mon, bc, util, name="custom")
    raise ValueError(f"unknown game {kind!r}")


def classical_nash(game: MonoidGame, graph: OpenGraph,
                   profile_guard: int = DEFAULT_PROFILE_GUARD) -> list[tuple]:
    """Pure Nash equilibria of ``game`` played on a closed graph, by brute force."""
    if not graph.is_closed():
        raise ShapeError(f"classical game needs a closed graph, got {graph.m}->{graph.n}")
    k, xs = graph.k, game.strategies
    if len(xs) ** k > profile_guard:
        raise BoundExceededError(f"{len(xs)}^{k} profiles exceed the guard {profile_guard}",
                                 size=len(xs) ** k, bound=profile_guard)
    adj = symmetrize(graph.e).tolist()

    def payoff(p, profile):
        heard = game.monoid.sum(game.monoid.scalar(adj[p][q], game.f(profile[q]))
                                for q in range(k))
        return game.g(profile[p], heard)

    found = []
    for sigma in itertools.product(xs, repeat=k):
        if all(payoff(p, sigma) >= max(payoff(p, sigma[:p] + (s,) + sigma[p + 1:]) for s in xs)
               - ARGMAX_TOL for p in range(k)):
            found.append(sigma)
    return sorted(found)
