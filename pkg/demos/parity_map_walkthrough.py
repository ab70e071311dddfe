"""How the parity map spreads a framed diagram over two circles.

Run with ``python3 demos/parity_map_walkthrough.py``.
"""

from chordcalc import FramedChordDiagram, FramedLinearDiagram, psi, psi_l, psi_summands
from chordcalc.cli import format_diagram, format_element

# Three chords, framings (0, 0, 1).  Each framing-0 chord goes to one circle
# or the other as a whole; the framing-1 chord always splits across the two.
# That gives 2^3 = 8 summands, displayed before aggregation:
d = FramedChordDiagram(("A", "B", "A", "C", "B", "C"), {"A": 0, "B": 0, "C": 1})
print("parity expansion of a (0,0,1) three-chord diagram, summand by summand:")
for sides, summand in psi_summands(d):
    placement = ", ".join(f"{lab}->{pair}" for lab, pair in sorted(sides.items()))
    print(f"  {format_diagram(summand):28s}   sides: {placement}")

# After canonicalization the eight summands aggregate; the total coefficient
# mass stays 2^n.
expansion = psi(d)
print("\naggregated:", format_element(expansion))
print("coefficient mass:", expansion.mass())

# The second circle is read with reversed orientation.  The same construction
# works on lines, where the second line is read back to front:
g = FramedLinearDiagram(("A", "B", "A", "B"), {"A": 1, "B": 1})
print("\nline version on an interleaved all-framing-1 word:")
print(format_element(psi_l(g)))
