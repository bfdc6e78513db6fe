# Pure equilibria of two network games on a few small graphs.
from netgames.network_games import best_shot_game, game_from_json, majority_game
from netgames.open_graph import closed_graph
from netgames.semantics import SemanticsConfig, nash

graphs = {
    "edge": closed_graph(2, [(0, 1)]),
    "triangle": closed_graph(3, [(0, 1), (1, 2), (0, 2)]),
    "4-cycle": closed_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "3-path": closed_graph(3, [(0, 1), (1, 2)]),
    "star": closed_graph(4, [(0, 1), (0, 2), (0, 3)]),
}

for game in (majority_game(), best_shot_game()):
    cfg = SemanticsConfig(game)
    print(f"{game.name}:")
    for name, g in graphs.items():
        eqs = ["".join(map(str, p)) for p in nash(g, cfg)]
        print(f"  {name:9s} {' '.join(eqs)}")

# best shot equilibria are exactly the maximal independent sets of providers
star = nash(graphs["star"], SemanticsConfig(best_shot_game()))
print("\nstar providers:", [[i for i, s in enumerate(p) if s] for p in star])

# a game can also be given as a table: strategy, aggregate, payoff.
# here a player scores when it differs from "someone nearby plays 1"
anti = game_from_json({"game": "custom", "X": [0, 1], "monoid": {"kind": "bool_or"},
                       "f": {"0": 0, "1": 1},
                       "g": [[0, 0, 0.0], [0, 1, 1.0], [1, 0, 1.0], [1, 1, 0.0]]})
print("\nanti-coordination on the triangle:",
      nash(graphs["triangle"], SemanticsConfig(anti)))
