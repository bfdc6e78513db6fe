# Two diagrams that look different but draw the same multigraph.
import json

from netgames.adjclass import adj_class, symmetrize
from netgames.diagram_lang import evaluate, parse
from netgames.natmat import NatMatrix
from netgames.open_graph import og_equal

crossed = ("comult # comult ; id(1) # swap(1,1) # id(1) ; id(2) # swap(1,1) ; "
           "id(1) # swap(1,1) # id(1) ; cup # cup")
straight = ("comult # comult ; id(1) # swap(1,1) # id(1) ; "
            "id(2) # (comult # counit ; unit # mult) ; id(1) # swap(1,1) # id(1) ; cup # cup")

g1, g2 = evaluate(parse(crossed)), evaluate(parse(straight))
print("same graph:", og_equal(g1, g2))
print("adjacency classes:", g1.a.canon.tolist(), g2.a.canon.tolist())

# an undirected multigraph doesn't care which way an edge was written down
a = adj_class(NatMatrix([[0, 1], [1, 0]]))
b = adj_class(NatMatrix([[0, 2], [0, 0]]))
print("[[0,1],[1,0]] ~ [[0,2],[0,0]]:", a == b, "symmetric form", symmetrize(a).tolist())

# the vertices of a term are renumbered into a canonical order on evaluation
path = evaluate(parse("vertex # vertex # vertex ; id(1) # comult # id(1) ; cup # cup"))
print("\n3-path normal form:")
print(json.dumps(path.to_json(), indent=None))
