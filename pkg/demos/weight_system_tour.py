"""A tour of surgery and the weight system on two-circle diagrams.

Run with ``python3 demos/weight_system_tour.py``.
"""

from chordcalc import (
    DoubleChordDiagram,
    ModuleElement,
    beta,
    enumerate_diagrams,
    from_key,
    generate_2T_pairs,
    generate_4T,
    smoothing_graph,
    weight,
)
from chordcalc.cli import format_diagram

# A chord joining the two circles merges them into one boundary component,
# while a chord inside one circle splits off an extra component.
joining = DoubleChordDiagram(("A",), ("A",))
inside = DoubleChordDiagram(("A", "A"), ())
print("beta of one joining chord:", beta(joining))
print("beta of one chord inside a circle (plus a free loop):", beta(inside))

# The smoothing graph is tiny and easy to inspect: two nodes per endpoint,
# one arc gluing and one chord gluing per node.
graph = smoothing_graph(inside)
print("nodes:", graph.node_count, "gluings:", graph.gluings, "free loops:", graph.free_loops)

# beta over a whole degree, as a table.
print("\nbeta across all 2-chord double diagrams:")
for key in enumerate_diagrams("double", 2):
    print(f"  {format_diagram(key):24s} beta = {beta(from_key(key))}")

# Sliding one endpoint across a whole chord never changes beta; that is
# exactly why the term-wise extension of beta kills every 4T relation.
pairs = generate_2T_pairs("double", 3)
print("\n2T slide pairs at degree 3:", len(pairs))
print("beta equal on every pair:", all(beta(from_key(p)) == beta(from_key(q)) for p, q in pairs))

gens = generate_4T("double", 3)
print("4T generators at degree 3:", len(gens))
print("weight vanishes on all of them:", all(weight(g.element) == 0 for g in gens))

# The weight therefore separates quotient classes: two diagrams with
# different beta can never be equal modulo the relations.
a = ModuleElement.single(DoubleChordDiagram(("A", "A"), ()).key())
b = ModuleElement.single(DoubleChordDiagram(("A",), ("A",)).key())
print("\nweight separates", format_diagram(a.support()[0]), "from", format_diagram(b.support()[0]))
print("weights:", weight(a), "vs", weight(b))
