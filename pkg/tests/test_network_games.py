import pytest

from netgames import natmat as nm
from netgames.adjclass import symmetrize
from netgames.errors import BoundExceededError, ShapeError
from netgames.network_games import (MonoidGame, best_shot_game, classical_nash, game_from_json,
                                    majority_game)
from netgames.open_graph import closed_graph, og_identity

from oracle import best_shot, brute_nash, majority

GRAPHS = {
    "edge": (2, [(0, 1)]),
    "double-edge": (2, [(0, 1), (0, 1)]),
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    "4-cycle": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "3-path": (3, [(0, 1), (1, 2)]),
    "vertex": (1, []),
}


def test_majority_utility():
    g = majority_game()
    assert g.g(0, (2, 1)) == 1.0
    assert g.g(1, (1, 1)) == 1.0
    assert majority_game(tie_wins=False).g(1, (1, 1)) == 0.0
    unit = g.monoid.unit
    assert g.g(0, unit) == g.g(1, unit) == 1.0
    assert g.f(0) == (1, 0) and g.f(1) == (0, 1)


def test_best_shot_utility():
    g = best_shot_game()
    assert g.g(1, 0) == pytest.approx(0.6)
    assert g.g(0, 1) == 1.0 and g.g(0, 0) == 0.0
    assert g.g(1, 1) < g.g(0, 1)
    for bad in [(0.4, 1.0), (1.0, 0.0), (1.0, 1.0)]:
        with pytest.raises(ValueError):
            best_shot_game(*bad)


@pytest.mark.parametrize("name", list(GRAPHS))
def test_classical_matches_edge_list_oracle(name):
    n, edges = GRAPHS[name]
    g = closed_graph(n, edges)
    assert classical_nash(majority_game(), g) == brute_nash(n, edges, majority)
    assert classical_nash(best_shot_game(), g) == brute_nash(n, edges, best_shot)


def test_pinned_equilibria():
    tri = closed_graph(*GRAPHS["triangle"])
    assert classical_nash(majority_game(), tri) == [(0, 0, 0), (1, 1, 1)]
    assert classical_nash(best_shot_game(), closed_graph(*GRAPHS["edge"])) == [(0, 1), (1, 0)]
    assert classical_nash(majority_game(), closed_graph(*GRAPHS["edge"])) == [(0, 0), (1, 1)]
    assert classical_nash(majority_game(), closed_graph(1, [])) == [(0,), (1,)]


def test_relabelling_permutes_equilibria():
    n, edges = GRAPHS["3-path"]
    path = closed_graph(n, edges)
    base = classical_nash(best_shot_game(), path)
    for p in nm.all_permutations(3):
        moved = classical_nash(best_shot_game(), path.relabel(p))
        # vertex i of the relabelled graph is vertex word[i] of the original
        assert moved == sorted(tuple(s[w] for w in p.word) for s in base)


def test_doubled_edge_counts_twice():
    g = closed_graph(*GRAPHS["double-edge"])
    assert symmetrize(g.e).tolist() == [[0, 2], [2, 0]]
    assert classical_nash(majority_game(), g) == [(0, 0), (1, 1)]


def test_guards():
    with pytest.raises(BoundExceededError):
        classical_nash(majority_game(), closed_graph(12, []), profile_guard=1000)
    with pytest.raises(ShapeError):
        classical_nash(majority_game(), og_identity(1))


def test_game_json():
    g = game_from_json({"game": "majority", "cap": 3, "tie_wins": False})
    assert g.monoid.cap == 3 and g.g(0, (1, 1)) == 0.0
    assert game_from_json(g.to_json()).params == g.params
    b = game_from_json({"game": "best_shot", "benefit": 2.0, "cost": 0.5})
    assert b.g(1, 0) == 1.5
    custom = game_from_json({
        "game": "custom", "X": ["a", "b"], "monoid": {"kind": "bool_or"},
        "f": {"a": 0, "b": 1},
        "g": [["a", 0, 0.0], ["a", 1, 1.0], ["b", 0, 0.5], ["b", 1, 0.5]],
    })
    assert classical_nash(custom, closed_graph(2, [(0, 1)])) == [("a", "b"), ("b", "a")]
    with pytest.raises(ValueError):
        game_from_json({"game": "chess"})
    with pytest.raises(ValueError):
        game_from_json({"game": "custom", "X": ["a"], "monoid": {"kind": "bool_or"},
                        "f": {"a": 0}, "g": [["a", 0, 1.0]]})


def test_with_cap():
    assert majority_game(4).with_cap(2).monoid.cap == 2
    with pytest.raises(ValueError):
        best_shot_game().with_cap(3)


def test_tabulate_validates_broadcast():
    from netgames.monoid import bool_or
    with pytest.raises(ValueError):
        MonoidGame((0,), bool_or(), {0: 7}, {(0, 0): 0.0, (0, 1): 0.0})
