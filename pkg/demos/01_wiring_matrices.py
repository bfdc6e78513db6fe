# Diagrams without vertices are just N-matrices: entry (i, j) counts the
# paths from input i to output j.
import numpy as np

from netgames.diagram_lang import evaluate, parse

merge_then_split = evaluate(parse("mult ; comult"))
print("mult ; comult =")
print(merge_then_split.b.array)      # every input reaches every output once

# three inputs, two outputs; input 0 is copied twice into output 0
term = ("(comult ; comult # id(1)) # id(2) ; id(2) # swap(1,2) ; "
        "id(2) # swap(1,1) # id(1) ; (mult # id(1) ; mult) # mult")
g = evaluate(parse(term))
print("\n3 -> 2 wiring, vertices:", g.k)
print(g.b.array)

# sequencing multiplies the matrices, side by side takes a direct sum
left, right = evaluate(parse("comult # id(1)")), evaluate(parse("mult # id(1)"))
seq = evaluate(parse("comult # id(1) ; mult # id(1)"))
assert np.array_equal(seq.b.array, left.b.array @ right.b.array)
print("\n(comult # id(1)) ; (mult # id(1)) =")
print(seq.b.array)

# a cup turns wires into a connection between them, tracked in A
loop = evaluate(parse("comult ; cup"))
print("\ncomult ; cup is 1 -> 0 with A canon", loop.a.canon.tolist())
