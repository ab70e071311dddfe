"""Surgery along chords: smoothing graphs, component counts, weight systems.

Surgery replaces every chord by a band and counts the boundary circles (and
lines) of the result.  Combinatorially: each endpoint ``p`` splits into an
``in`` node (the side the core arc enters from) and an ``out`` node (the side
it leaves by); core arcs glue ``out(p) ~ in(p')`` for consecutive endpoints,
and a smoothed chord with endpoints ``p, q`` glues ``in(p) ~ out(q)`` and
``in(q) ~ out(p)`` -- the orientation-coherent reconnection.  The component
count of the resulting pairing, plus one per chordless circle or line, is the
surgery invariant ``beta``.  ``docs/surgery-notes.md`` traces this rule back
to the band picture and records the hand-checked calibration values.

For framed single-circle diagrams the chord gluing depends on the framing:
framing 0 smooths coherently as above, framing 1 (the half-twisted band)
glues ``in(p) ~ in(q)`` and ``out(p) ~ out(q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import KindMismatchError, ModuleElement
from .diagrams import (
    DoubleChordDiagram,
    DoubleLinearDiagram,
    FramedChordDiagram,
    from_key,
)


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def component_count(self):
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


@dataclass(frozen=True)
class SmoothingGraph:
    """The node-pairing structure produced by surgery.

    Endpoint ``e`` (counted across word 1 then word 2) contributes nodes
    ``2e`` (in) and ``2e + 1`` (out).  ``gluings`` lists the arc and chord
    pairings; ``free_loops`` counts chordless circles and chordless lines,
    each a component of its own; ``free_ends`` are the unpaired nodes at line
    extremities (empty for circle kinds).
    """

    node_count: int
    gluings: tuple
    free_loops: int
    free_ends: tuple = ()

    def component_count(self) -> int:
        uf = _UnionFind(self.node_count)
        for a, b in self.gluings:
            uf.union(a, b)
        return uf.component_count() + self.free_loops

    def node_components(self) -> int:
        """Components among the glued nodes only, ignoring free loops."""
        return self.component_count() - self.free_loops


def _in(e):
    return 2 * e


def _out(e):
    return 2 * e + 1


def _build_graph(words, cyclic, chord_gluer):
    offsets = []
    total = 0
    for word in words:
        offsets.append(total)
        total += len(word)
    gluings = []
    free_loops = 0
    free_ends = []
    for word, offset in zip(words, offsets):
        m = len(word)
        if m == 0:
            free_loops += 1
            continue
        if cyclic:
            for p in range(m):
                gluings.append((_out(offset + p), _in(offset + (p + 1) % m)))
        else:
            for p in range(m - 1):
                gluings.append((_out(offset + p), _in(offset + p + 1)))
            free_ends.append(_in(offset))
            free_ends.append(_out(offset + m - 1))
    positions = {}
    for word, offset in zip(words, offsets):
        for p, lab in enumerate(word):
            positions.setdefault(lab, []).append(offset + p)
    for lab in sorted(positions, key=str):
        e1, e2 = positions[lab]
        gluings.extend(chord_gluer(lab, e1, e2))
    return SmoothingGraph(
        node_count=2 * total,
        gluings=tuple(gluings),
        free_loops=free_loops,
        free_ends=tuple(free_ends),
    )


def _coherent(_lab, e1, e2):
    return ((_in(e1), _out(e2)), (_in(e2), _out(e1)))


def smoothing_graph(d) -> SmoothingGraph:
    """The surgery pairing of a double chord or double linear diagram.

    All chords smooth with the orientation-coherent rule; circle arcs close
    up cyclically while line arcs leave the two extremities as free ends.
    """
    if isinstance(d, DoubleChordDiagram):
        return _build_graph([list(d.word1), list(d.word2)], True, _coherent)
    if isinstance(d, DoubleLinearDiagram):
        return _build_graph([list(d.word1), list(d.word2)], False, _coherent)
    raise TypeError(f"expected a double or dlinear diagram, got {type(d).__name__}")


def beta(d) -> int:
    """Number of connected components after surgery on all chords.

    Non-compact components of a double linear diagram count once each, like
    any other component; chordless circles and lines contribute one apiece.
    """
    return smoothing_graph(d).component_count()


def beta_framed(d: FramedChordDiagram) -> int:
    """Surgery component count of a framed chord diagram.

    A supporting diagnostic (it calibrates the framed relation family); the
    parity map never consumes it.
    """
    if not isinstance(d, FramedChordDiagram):
        raise TypeError(f"expected FramedChordDiagram, got {type(d).__name__}")

    def gluer(lab, e1, e2):
        if d.framing[lab] == 0:
            return _coherent(lab, e1, e2)
        return ((_in(e1), _in(e2)), (_out(e1), _out(e2)))

    return _build_graph([list(d.word)], True, gluer).component_count()


@lru_cache(maxsize=None)
def _beta_of_key(key):
    return beta(from_key(key))


def weight(u: ModuleElement) -> int:
    """The surgery weight system: sum of coefficient times beta over terms.

    Defined for the double and dlinear kinds; vanishes on every 4T generator
    because beta is constant on 2T pairs, hence descends to the quotient
    modules.
    """
    if not isinstance(u, ModuleElement):
        raise TypeError("weight takes a ModuleElement")
    if u.kind not in ("double", "dlinear"):
        raise KindMismatchError(f"weight is defined for double/dlinear, got {u.kind}")
    return sum(coeff * _beta_of_key(key) for key, coeff in u.items())
