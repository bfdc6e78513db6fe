# The game of a whole graph can be assembled from the games of its pieces.
from netgames.diagram_lang import evaluate, parse
from netgames.network_games import majority_game
from netgames.semantics import (SemanticsConfig, compositional_game, direct_game,
                                games_equal, term_games)

cfg = SemanticsConfig(majority_game(2))
edge = parse("vertex # vertex ; cup")

pieces = compositional_game(edge, cfg)
whole = direct_game(evaluate(edge, canonical=False), cfg)
print("built from pieces:", pieces)
print("read off the graph:", whole)
print("equal:", games_equal(pieces, whole))
print("equilibria:", pieces.equilibria())

# an open game still has inputs: the vertex game hands its broadcast outward
v = direct_game(evaluate(parse("vertex")), cfg)
for s in (0, 1):
    print(f"vertex playing {s} sends", v.play((s,), ()))

# bigger terms pass through canonical relabelling before the comparison
term = parse("vertex # vertex ; mult ; comult ; id(1) # counit")
comp, direct, word = term_games(term, cfg)
print("\nplayers of the first game sit at", word, "in the second:",
      games_equal(direct, comp, word))
