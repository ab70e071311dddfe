"""Why connected sums of framed chord diagrams are not well defined.

Gluing two circles depends on where you cut them.  For unframed diagrams the
4T relations absorb the choice; with framings they do not, and this script
exhibits the smallest witness.  Run with
``python3 demos/connected_sum_failure.py``.
"""

from chordcalc import (
    connected_sum_framed,
    from_key,
    psi,
    quotient_equal,
    search_counterexample,
    weight,
)
from chordcalc.cli import format_diagram, format_element

witnesses = search_counterexample(3)
print(f"diagram pairs with cut-dependent sums at <= 3 chords: {len(witnesses)}")

w = witnesses[0]
d1, d2 = from_key(w.d1), from_key(w.d2)
print("\ntake", format_diagram(d1), "and", format_diagram(d2))

sum_a = connected_sum_framed(d1, w.cuts_a[0], d2, w.cuts_a[1])
sum_b = connected_sum_framed(d1, w.cuts_b[0], d2, w.cuts_b[1])
print(f"cut at arcs {w.cuts_a}: {format_diagram(sum_a)}")
print(f"cut at arcs {w.cuts_b}: {format_diagram(sum_b)}")

# The parity expansions collapse onto single diagrams with coefficient 8,
# but those diagrams have different surgery counts: weights 8 vs 24.
pa, pb = psi(sum_a), psi(sum_b)
print("\nparity expansion of the first sum: ", format_element(pa))
print("parity expansion of the second sum:", format_element(pb))
print("weights:", weight(pa), "vs", weight(pb))

# The weight descends to the quotient by the 4T relations, so the two sums
# cannot be equal there; the exact integer-span decision agrees.
print("equal modulo the 4T relations:", quotient_equal(pa, pb))
