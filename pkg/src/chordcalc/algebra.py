"""Formal integer combinations of diagrams, 4T/2T relation generators, and
exact equality decisions in the quotient modules.

The relation families are pinned by three internal consistency requirements
that the test suite enforces: the surgery component count is constant on
every 2T pair, the weight system kills every 4T generator, and the parity
map sends framed 4T generators into the integer span of the double-diagram
4T generators.  Calibrating against all three fixes one convention:

* the four placements of the moving endpoint are taken just before / just
  after each endpoint of the target chord, in core orientation;
* for the unframed kinds, and for framed kinds when the target chord has
  framing 0, the generator is ``before-b1 - after-b1 + before-b2 - after-b2``
  and the 2T slides pair ``{before-b1, after-b2}`` and ``{after-b1, before-b2}``;
* for framed kinds when the target chord has framing 1, sliding across the
  half-twisted band lands on the *near* side of the other endpoint and flips
  the moving chord's framing, so the generator is
  ``before-b1 - after-b1 - before-b2* + after-b2*`` (``*`` = framing of the
  moving chord flipped) and the slides pair ``{before-b1, before-b2*}`` and
  ``{after-b1, after-b2*}``.

The framing-flip variant is forced: under the no-flip convention some framed
generators have nonzero image under the weight system after the parity map,
which makes span membership impossible.  ``docs/surgery-notes.md`` records
the calibration evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import (
    KINDS,
    CanonicalKey,
    DoubleChordDiagram,
    DoubleLinearDiagram,
    FramedChordDiagram,
    FramedLinearDiagram,
    enumerate_diagrams,
    from_key,
)
from .intlinalg import IntMatrix, hnf

#: Largest degree at which quotient equality is decided by default.  Above
#: it the decision raises :class:`UndecidedError` instead of guessing.
DEGREE_CEILING = {"framed": 4, "double": 4, "linear": 4, "dlinear": 4}


class KindMismatchError(ValueError):
    """Operands live over different diagram kinds."""


class UndecidedError(RuntimeError):
    """The requested decision exceeds the configured degree ceiling."""


class ModuleElement:
    """A finite integer-linear combination of canonical diagrams of one kind.

    Zero coefficients are never stored; iteration order is sorted by key, so
    every derived output is deterministic.
    """

    __slots__ = ("kind", "_terms")

    def __init__(self, kind, terms=()):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        accumulated = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            if not isinstance(key, CanonicalKey):
                raise TypeError("terms must be keyed by CanonicalKey")
            if key.kind != kind:
                raise KindMismatchError(f"{key.kind} key in a {kind} element")
            coeff = int(coeff)
            if coeff:
                new = accumulated.get(key, 0) + coeff
                if new:
                    accumulated[key] = new
                else:
                    del accumulated[key]
        self.kind = kind
        self._terms = accumulated

    @classmethod
    def zero(cls, kind) -> "ModuleElement":
        return cls(kind)

    @classmethod
    def single(cls, key, coeff=1) -> "ModuleElement":
        return cls(key.kind, [(key, coeff)])

    def items(self):
        return tuple(sorted(self._terms.items()))

    def support(self):
        return tuple(sorted(self._terms))

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def mass(self) -> int:
        """Total absolute coefficient mass."""
        return sum(abs(c) for c in self._terms.values())

    def degrees(self):
        """Sorted chord counts present among the terms."""
        return tuple(sorted({key.n for key in self._terms}))

    def homogeneous_part(self, n) -> "ModuleElement":
        return ModuleElement(self.kind, [(k, c) for k, c in self._terms.items() if k.n == n])

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if other.kind != self.kind:
            raise KindMismatchError(f"cannot add {self.kind} and {other.kind} elements")
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            new = merged.get(key, 0) + coeff
            if new:
                merged[key] = new
            else:
                merged.pop(key, None)
        return ModuleElement(self.kind, merged)

    def __neg__(self):
        return ModuleElement(self.kind, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return ModuleElement(self.kind, {k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.kind == other.kind
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.kind, self.items()))

    def __repr__(self):
        if not self._terms:
            return f"ModuleElement({self.kind!r}, 0)"
        body = " + ".join(f"{c}*[{k.payload}]" for k, c in self.items())
        return f"ModuleElement({self.kind!r}, {body})"


def combine(alpha: int, u: ModuleElement, beta: int, v: ModuleElement) -> ModuleElement:
    """Term-wise ``alpha*u + beta*v`` with zero coefficients dropped."""
    if u.kind != v.kind:
        raise KindMismatchError(f"cannot combine {u.kind} and {v.kind} elements")
    return alpha * u + beta * v


# ---------------------------------------------------------------------------
# relation generators


@dataclass(frozen=True)
class RelationGenerator:
    """One 4T relation together with where it came from.

    ``placements`` holds the four canonical diagrams built by parking the
    moving endpoint just before b1, just after b1, just before b2, just after
    b2 (in that order; for a framing-1 target the last two carry the flipped
    framing of the moving chord), ``signs`` the coefficients attached to them
    before aggregation, and ``slide_pairs`` the two 2T slides the generator
    decomposes into.  Chord numbers refer to the base key's canonical
    labelling.
    """

    element: ModuleElement
    base: CanonicalKey
    moving_chord: int
    occurrence: int
    target_chord: int
    placements: tuple
    signs: tuple
    slide_pairs: tuple


_DIAGRAM_CLASS = {
    "framed": FramedChordDiagram,
    "double": DoubleChordDiagram,
    "linear": FramedLinearDiagram,
    "dlinear": DoubleLinearDiagram,
}


def _words_of(key):
    d = from_key(key)
    if key.kind in ("framed", "linear"):
        return [list(d.word)], dict(d.framing)
    return [list(d.word1), list(d.word2)], None


def _key_of(kind, words, framing):
    if kind in ("framed", "linear"):
        return _DIAGRAM_CLASS[kind](words[0], framing).key()
    return _DIAGRAM_CLASS[kind](words[0], words[1]).key()


def _moves(kind, base):
    """Yield every (a, occ, b, placements, signs, pairs) slide datum of a base
    diagram."""
    words, framing = _words_of(base)
    labels = []
    for word in words:
        for lab in word:
            if lab not in labels:
                labels.append(lab)
    for a in labels:
        a_positions = [
            (wi, p) for wi, word in enumerate(words) for p, lab in enumerate(word) if lab == a
        ]
        for occ in (0, 1):
            for b in labels:
                if b == a:
                    continue
                xwi, xp = a_positions[occ]
                stripped = [list(word) for word in words]
                del stripped[xwi][xp]
                b_positions = [
                    (wi, p)
                    for wi, word in enumerate(stripped)
                    for p, lab in enumerate(word)
                    if lab == b
                ]
                (w1, p1), (w2, p2) = b_positions
                slots = ((w1, p1), (w1, p1 + 1), (w2, p2), (w2, p2 + 1))
                flip_far_side = framing is not None and framing[b] == 1
                placements = []
                for si, (wi, slot) in enumerate(slots):
                    ws = [list(word) for word in stripped]
                    ws[wi].insert(slot, a)
                    fr = framing
                    if flip_far_side and si >= 2:
                        fr = dict(framing)
                        fr[a] ^= 1
                    placements.append(_key_of(kind, ws, fr))
                placements = tuple(placements)
                if flip_far_side:
                    signs = (1, -1, -1, 1)
                    pairs = (
                        tuple(sorted((placements[0], placements[2]))),
                        tuple(sorted((placements[1], placements[3]))),
                    )
                else:
                    signs = (1, -1, 1, -1)
                    pairs = (
                        tuple(sorted((placements[0], placements[3]))),
                        tuple(sorted((placements[1], placements[2]))),
                    )
                yield a, occ, b, placements, signs, pairs


@lru_cache(maxsize=None)
def _all_generators(kind, n):
    generators = []
    seen = set()
    for base in enumerate_diagrams(kind, n):
        numbering = {}
        words, _ = _words_of(base)
        for word in words:
            for lab in word:
                numbering.setdefault(lab, len(numbering) + 1)
        for a, occ, b, placements, signs, pairs in _moves(kind, base):
            signature = tuple(sorted(zip(placements, signs)))
            if signature in seen:
                continue
            seen.add(signature)
            generators.append(
                RelationGenerator(
                    element=ModuleElement(kind, zip(placements, signs)),
                    base=base,
                    moving_chord=numbering[a],
                    occurrence=occ,
                    target_chord=numbering[b],
                    placements=placements,
                    signs=signs,
                    slide_pairs=pairs,
                )
            )
    return tuple(generators)


def generate_4T(kind, n, include_zero=True):
    """All 4T relation generators in degree ``n``, deduplicated up to
    canonical-form duplication of the whole generator.

    Every ordered choice of a base diagram, a moving endpoint of one chord,
    and a distinct target chord contributes one generator; degenerate
    configurations are kept.  Generators whose four terms cancel to the zero
    element are included unless ``include_zero`` is false.  ``n < 2`` yields
    nothing (a relation needs two chords).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 2:
        return ()
    generators = _all_generators(kind, n)
    if include_zero:
        return generators
    return tuple(g for g in generators if not g.element.is_zero())


def generate_2T_pairs(kind, n):
    """The 2T refinement for the unframed two-word kinds: unordered pairs of
    diagrams related by sliding one endpoint across a whole chord.

    Every 4T generator is the difference of the differences of its two
    pairs, so any function constant on these pairs kills all 4T generators.
    """
    if kind not in ("double", "dlinear"):
        raise ValueError("2T pairs are generated for the double and dlinear kinds")
    if n < 2:
        return ()
    pairs = set()
    for base in enumerate_diagrams(kind, n):
        for _a, _occ, _b, _placements, _signs, move_pairs in _moves(kind, base):
            pairs.update(move_pairs)
    return tuple(sorted(pairs))


# ---------------------------------------------------------------------------
# quotient equality


@lru_cache(maxsize=None)
def _integer_lattice(kind, n):
    """HNF basis of the integer span of the degree-n 4T generators."""
    basis = enumerate_diagrams(kind, n)
    index = {key: i for i, key in enumerate(basis)}
    rows = set()
    for gen in generate_4T(kind, n, include_zero=False):
        row = [0] * len(basis)
        for key, coeff in gen.element.items():
            row[index[key]] = coeff
        rows.add(tuple(row))
    if not rows:
        return index, (), ()
    h, _u = hnf(IntMatrix(sorted(rows), cols=len(basis)))
    hrows = []
    pivots = []
    for row in h.entries:
        p = next((j for j, x in enumerate(row) if x != 0), None)
        if p is None:
            break
        hrows.append(tuple(row))
        pivots.append(p)
    return index, tuple(hrows), tuple(pivots)


@lru_cache(maxsize=None)
def _rational_lattice(kind, n):
    """Reduced row echelon basis of the rational span of the generators."""
    basis = enumerate_diagrams(kind, n)
    index = {key: i for i, key in enumerate(basis)}
    rows = []
    for gen in generate_4T(kind, n, include_zero=False):
        row = [Fraction(0)] * len(basis)
        for key, coeff in gen.element.items():
            row[index[key]] = Fraction(coeff)
        rows.append(row)
    echelon = []
    pivots = []
    for row in rows:
        row = _rational_reduce(row, echelon, pivots)
        p = next((j for j, x in enumerate(row) if x), None)
        if p is not None:
            echelon.append([x / row[p] for x in row])
            pivots.append(p)
    return index, echelon, pivots


def _rational_reduce(row, echelon, pivots):
    row = list(row)
    for erow, p in zip(echelon, pivots):
        if row[p]:
            factor = row[p]
            row = [x - factor * y for x, y in zip(row, erow)]
    return row


def _vectorize(element, index):
    vec = [0] * len(index)
    for key, coeff in element.items():
        vec[index[key]] = coeff
    return vec


def _in_integer_span(vec, hrows, pivots):
    residual = list(vec)
    for row, p in zip(hrows, pivots):
        q, rem = divmod(residual[p], row[p])
        if rem:
            return False
        if q:
            residual = [x - q * y for x, y in zip(residual, row)]
    return not any(residual)


def quotient_equal(u: ModuleElement, v: ModuleElement, rational=False, max_degree=None) -> bool:
    """Exact equality of ``u`` and ``v`` in the quotient by the 4T relations.

    Decided degree by degree: the relations are homogeneous, so ``u - v``
    must lie in the span of the degree-n generators for each chord count n it
    touches.  Membership is over the integers by default (the modules are
    Z-modules); ``rational=True`` switches to the Q-span, a strictly coarser
    diagnostic.  Degrees above the ceiling raise :class:`UndecidedError`
    rather than ever returning a wrong boolean.
    """
    if not isinstance(u, ModuleElement) or not isinstance(v, ModuleElement):
        raise TypeError("quotient_equal compares ModuleElements")
    if u.kind != v.kind:
        raise KindMismatchError(f"cannot compare {u.kind} and {v.kind} elements")
    difference = u - v
    if difference.is_zero():
        return True
    ceiling = DEGREE_CEILING[u.kind] if max_degree is None else max_degree
    for n in difference.degrees():
        if n > ceiling:
            raise UndecidedError(
                f"undecided: degree {n} exceeds the ceiling {ceiling} for kind {u.kind}"
            )
        piece = difference.homogeneous_part(n)
        if rational:
            index, echelon, pivots = _rational_lattice(u.kind, n)
            vec = [Fraction(x) for x in _vectorize(piece, index)]
            if any(_rational_reduce(vec, echelon, pivots)):
                return False
        else:
            index, hrows, pivots = _integer_lattice(u.kind, n)
            if not _in_integer_span(_vectorize(piece, index), hrows, pivots):
                return False
    return True
