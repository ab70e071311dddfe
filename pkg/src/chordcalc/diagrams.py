"""Core diagram types, canonical forms, enumeration, and the coproduct.

Four kinds of diagram share one vocabulary:

* ``framed``  -- chords on one oriented circle, every chord framed 0 or 1;
* ``double``  -- unframed chords spread over two oriented circles;
* ``linear``  -- framed chords on one oriented line;
* ``dlinear`` -- unframed chords spread over two oriented, *ordered* lines.

A diagram is stored as one or two words of chord labels in which every label
occurs exactly twice across the whole diagram.  Isomorphism is rotation of
circle words (plus exchanging the two circles for ``double``) followed by
relabelling; lines are never rotated, and the two lines of a ``dlinear``
diagram keep their order.  :class:`CanonicalKey` realises these equivalences:
two diagrams are isomorphic iff their keys compare equal.

Labels are arbitrary hashable values; canonicalization erases them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

KINDS = ("framed", "double", "linear", "dlinear")


class InvalidDiagramError(ValueError):
    """A word is not a double-occurrence word, or framing data is malformed."""


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Canonical form of a diagram; equal keys mean isomorphic diagrams.

    ``payload`` is the lexicographically minimal relabelled encoding: a tuple
    of ``(chord, framing)`` tokens for the one-word kinds, or a pair of
    chord-number tuples for the two-word kinds.  Chords are numbered 1, 2, ...
    by first occurrence in the minimising scan.  Keys are totally ordered, so
    sorted containers of keys are deterministic.
    """

    kind: str
    payload: tuple

    @property
    def n(self) -> int:
        """Chord count."""
        if self.kind in ("framed", "linear"):
            return len(self.payload) // 2
        return (len(self.payload[0]) + len(self.payload[1])) // 2


def _occurrence_counts(words):
    counts = {}
    for word in words:
        for lab in word:
            counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(str(lab) for lab, c in counts.items() if c != 2)
    if bad:
        raise InvalidDiagramError(
            "every chord label must occur exactly twice; offending labels: "
            + ", ".join(bad)
        )
    return counts


def _checked_framing(framing, labels):
    framing = dict(framing)
    missing = sorted(str(lab) for lab in labels if lab not in framing)
    if missing:
        raise InvalidDiagramError("missing framing for: " + ", ".join(missing))
    extra = sorted(str(lab) for lab in framing if lab not in labels)
    if extra:
        raise InvalidDiagramError("framing given for absent chords: " + ", ".join(extra))
    for lab, fr in framing.items():
        if fr not in (0, 1):
            raise InvalidDiagramError(f"framing of {lab!r} must be 0 or 1, got {fr!r}")
    return framing


class FramedChordDiagram:
    """Cyclic double-occurrence word with a 0/1 framing per chord.

    The free loop (no chords) is the legal degree-0 diagram: empty word,
    empty framing.
    """

    kind = "framed"

    def __init__(self, word, framing):
        self.word = tuple(word)
        counts = _occurrence_counts([self.word])
        self.framing = _checked_framing(framing, counts)
        self.n = len(self.word) // 2

    def tokens(self):
        return tuple((lab, self.framing[lab]) for lab in self.word)

    def key(self) -> CanonicalKey:
        return _canon_framed(self.tokens())

    def canonical(self) -> "FramedChordDiagram":
        return from_key(self.key())

    def __repr__(self):
        return f"FramedChordDiagram({self.word!r}, {self.framing!r})"


class DoubleChordDiagram:
    """Chords distributed over two oriented circles; no framing data.

    Either circle may be empty; an empty circle is a free loop of the
    diagram.  The two circles are interchangeable (see :func:`canonicalize_double`).
    """

    kind = "double"

    def __init__(self, word1, word2):
        self.word1 = tuple(word1)
        self.word2 = tuple(word2)
        _occurrence_counts([self.word1, self.word2])
        self.n = (len(self.word1) + len(self.word2)) // 2

    def key(self) -> CanonicalKey:
        return _canon_double(self.word1, self.word2)

    def canonical(self) -> "DoubleChordDiagram":
        return from_key(self.key())

    def __repr__(self):
        return f"DoubleChordDiagram({self.word1!r}, {self.word2!r})"


class FramedLinearDiagram:
    """Linear double-occurrence word with framings; word order is the line's
    orientation."""

    kind = "linear"

    def __init__(self, word, framing):
        self.word = tuple(word)
        counts = _occurrence_counts([self.word])
        self.framing = _checked_framing(framing, counts)
        self.n = len(self.word) // 2

    def tokens(self):
        return tuple((lab, self.framing[lab]) for lab in self.word)

    def key(self) -> CanonicalKey:
        return _canon_linear(self.tokens())

    def canonical(self) -> "FramedLinearDiagram":
        return from_key(self.key())

    def __repr__(self):
        return f"FramedLinearDiagram({self.word!r}, {self.framing!r})"


class DoubleLinearDiagram:
    """Chords distributed over two oriented lines; the lines are an ordered
    pair and are never exchanged."""

    kind = "dlinear"

    def __init__(self, word1, word2):
        self.word1 = tuple(word1)
        self.word2 = tuple(word2)
        _occurrence_counts([self.word1, self.word2])
        self.n = (len(self.word1) + len(self.word2)) // 2

    def key(self) -> CanonicalKey:
        return _canon_dlinear(self.word1, self.word2)

    def canonical(self) -> "DoubleLinearDiagram":
        return from_key(self.key())

    def __repr__(self):
        return f"DoubleLinearDiagram({self.word1!r}, {self.word2!r})"


# ---------------------------------------------------------------------------
# canonicalization


def _relabel_tokens(seq):
    numbering = {}
    out = []
    for lab, fr in seq:
        num = numbering.get(lab)
        if num is None:
            num = numbering[lab] = len(numbering) + 1
        out.append((num, fr))
    return tuple(out)


def _relabel_pair(w1, w2):
    numbering = {}

    def number(lab):
        num = numbering.get(lab)
        if num is None:
            num = numbering[lab] = len(numbering) + 1
        return num

    return (tuple(number(lab) for lab in w1), tuple(number(lab) for lab in w2))


def _rotations(seq):
    seq = tuple(seq)
    if len(seq) <= 1:
        return (seq,)
    return tuple(seq[r:] + seq[:r] for r in range(len(seq)))


@lru_cache(maxsize=None)
def _canon_framed(tokens) -> CanonicalKey:
    if not tokens:
        return CanonicalKey("framed", ())
    return CanonicalKey("framed", min(_relabel_tokens(r) for r in _rotations(tokens)))


@lru_cache(maxsize=None)
def _canon_double(w1, w2) -> CanonicalKey:
    best = None
    for a, b in ((w1, w2), (w2, w1)):
        for ra in _rotations(a):
            for rb in _rotations(b):
                cand = _relabel_pair(ra, rb)
                if best is None or cand < best:
                    best = cand
    return CanonicalKey("double", best)


@lru_cache(maxsize=None)
def _canon_linear(tokens) -> CanonicalKey:
    return CanonicalKey("linear", _relabel_tokens(tokens))


@lru_cache(maxsize=None)
def _canon_dlinear(w1, w2) -> CanonicalKey:
    return CanonicalKey("dlinear", _relabel_pair(w1, w2))


def canonicalize_framed(d: FramedChordDiagram) -> CanonicalKey:
    """Lexicographic minimum over all rotations of the relabelled cyclic word."""
    return d.key()


def canonicalize_double(d: DoubleChordDiagram) -> CanonicalKey:
    """Minimum over rotations of both words and the exchange of the circles.

    Circle exchange is permitted: the isomorphisms only have to preserve the
    circle orientations, not which circle is "first".
    """
    return d.key()


def canonicalize_linear(d) -> CanonicalKey:
    """Relabel by first occurrence; no rotation, and ``dlinear`` lines keep
    their order."""
    if not isinstance(d, (FramedLinearDiagram, DoubleLinearDiagram)):
        raise TypeError(f"expected a linear diagram, got {type(d).__name__}")
    return d.key()


def spell_label(i: int) -> str:
    """1 -> 'A', 2 -> 'B', ..., 26 -> 'Z', 27 -> 'AA' (bijective base 26)."""
    if i < 1:
        raise ValueError("labels are numbered from 1")
    out = []
    while i > 0:
        i, r = divmod(i - 1, 26)
        out.append(chr(ord("A") + r))
    return "".join(reversed(out))


def from_key(key: CanonicalKey):
    """Rebuild a diagram (with spelled labels A, B, C, ...) from its key."""
    if key.kind in ("framed", "linear"):
        word = tuple(spell_label(num) for num, _ in key.payload)
        framing = {spell_label(num): fr for num, fr in key.payload}
        cls = FramedChordDiagram if key.kind == "framed" else FramedLinearDiagram
        return cls(word, framing)
    if key.kind in ("double", "dlinear"):
        w1 = tuple(spell_label(num) for num in key.payload[0])
        w2 = tuple(spell_label(num) for num in key.payload[1])
        cls = DoubleChordDiagram if key.kind == "double" else DoubleLinearDiagram
        return cls(w1, w2)
    raise ValueError(f"unknown kind {key.kind!r}")


# ---------------------------------------------------------------------------
# enumeration


def _matchings(items):
    """All perfect matchings of a list, as lists of pairs."""
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for rest_matching in _matchings(rest):
            yield [(first, items[i])] + rest_matching


@lru_cache(maxsize=None)
def enumerate_diagrams(kind: str, n: int):
    """All canonical keys of diagrams with exactly ``n`` chords, sorted.

    Brute force over matchings of 2n endpoint slots (times framings, times
    slot splits between the two words), canonicalized and deduplicated.
    Practical ceiling: n <= 6 for ``double`` (a minute or two); everything in
    the shipped verification sweeps uses n <= 4.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    positions = list(range(2 * n))
    keys = set()
    if kind in ("framed", "linear"):
        canon = _canon_framed if kind == "framed" else _canon_linear
        for matching in _matchings(positions):
            chord_of = {}
            for ci, (p, q) in enumerate(matching):
                chord_of[p] = chord_of[q] = ci
            for framings in itertools.product((0, 1), repeat=n):
                tokens = tuple((chord_of[p], framings[chord_of[p]]) for p in positions)
                keys.add(canon(tokens))
    else:
        canon = _canon_double if kind == "double" else _canon_dlinear
        for split in range(2 * n + 1):
            for matching in _matchings(positions):
                chord_of = {}
                for ci, (p, q) in enumerate(matching):
                    chord_of[p] = chord_of[q] = ci
                w1 = tuple(chord_of[p] for p in positions[:split])
                w2 = tuple(chord_of[p] for p in positions[split:])
                keys.add(canon(w1, w2))
    return tuple(sorted(keys))


# ---------------------------------------------------------------------------
# closure, reversal, coproduct


def closure(g: FramedLinearDiagram) -> FramedChordDiagram:
    """Close the line of a framed linear diagram into a circle.

    The cyclic word equals the linear word; the result is returned in
    canonical form, which makes the operation independent of where the circle
    is later cut open again.
    """
    if not isinstance(g, FramedLinearDiagram):
        raise TypeError(f"expected FramedLinearDiagram, got {type(g).__name__}")
    return FramedChordDiagram(g.word, g.framing).canonical()


def reverse_word(word):
    """Read a (cyclic or linear) word against its orientation."""
    return tuple(reversed(tuple(word)))


def coproduct(d: FramedChordDiagram) -> dict:
    """Split the chord set into ordered complementary subsets, all 2^n ways.

    Returns a dict mapping ``(left key, right key)`` to an integer
    coefficient; both components are canonicalized and equal pairs are
    aggregated, so coefficients may exceed 1 while the total mass stays 2^n.
    """
    if not isinstance(d, FramedChordDiagram):
        raise TypeError(f"expected FramedChordDiagram, got {type(d).__name__}")
    chords = []
    for lab in d.word:
        if lab not in chords:
            chords.append(lab)
    result = {}
    for picks in itertools.product((True, False), repeat=len(chords)):
        left = {lab for lab, taken in zip(chords, picks) if taken}
        right = {lab for lab in chords if lab not in left}
        pair = (restrict(d, left).key(), restrict(d, right).key())
        result[pair] = result.get(pair, 0) + 1
    return result


def restrict(d: FramedChordDiagram, subset) -> FramedChordDiagram:
    """The sub-diagram on a subset of chords; other endpoints are deleted."""
    subset = set(subset)
    word = tuple(lab for lab in d.word if lab in subset)
    framing = {lab: d.framing[lab] for lab in subset}
    return FramedChordDiagram(word, framing)
