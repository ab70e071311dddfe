"""The parity maps onto two circles and onto two lines."""

import pytest

from chordcalc.algebra import ModuleElement, generate_4T, quotient_equal
from chordcalc.diagrams import (
    DoubleChordDiagram,
    DoubleLinearDiagram,
    FramedChordDiagram,
    FramedLinearDiagram,
    enumerate_diagrams,
    from_key,
)
from chordcalc.parity import (
    psi,
    psi_l,
    psi_l_module,
    psi_l_summands,
    psi_module,
    psi_summands,
)
from chordcalc.surgery import weight


def fcd(word, framing):
    return FramedChordDiagram(tuple(word.split()), framing)


def fld(word, framing):
    return FramedLinearDiagram(tuple(word.split()), framing)


def test_psi_framing_zero_chord():
    expected = ModuleElement.single(DoubleChordDiagram(("A", "A"), ()).key(), 2)
    assert psi(fcd("A A", {"A": 0})) == expected


def test_psi_framing_one_chord():
    expected = ModuleElement.single(DoubleChordDiagram(("A",), ("A",)).key(), 2)
    assert psi(fcd("A A", {"A": 1})) == expected


def test_psi_free_loop():
    expected = ModuleElement.single(DoubleChordDiagram((), ()).key(), 1)
    assert psi(fcd("", {})) == expected


def test_psi_summand_count_and_mass():
    for n in range(4):
        for key in enumerate_diagrams("framed", n):
            d = from_key(key)
            summands = list(psi_summands(d))
            assert len(summands) == 2**n
            assert psi(d).mass() == 2**n


def test_psi_summand_sides_respect_framings():
    for n in range(4):
        for key in enumerate_diagrams("framed", n):
            d = from_key(key)
            for sides, _summand in psi_summands(d):
                for lab, (first, second) in sides.items():
                    if d.framing[lab] == 0:
                        assert first == second
                    else:
                        assert first != second


def test_psi_independent_of_stored_representative():
    d = fcd("A B A C B C", {"A": 0, "B": 1, "C": 1})
    for r in range(len(d.word)):
        rotated = FramedChordDiagram(d.word[r:] + d.word[:r], d.framing)
        assert psi(rotated) == psi(d)


def test_psi_three_chord_example_mass_eight():
    d = fcd("A B A C B C", {"A": 0, "B": 0, "C": 1})
    expansion = psi(d)
    assert expansion.mass() == 8
    assert len(list(psi_summands(d))) == 8


def test_psi_module_linearity():
    d = fcd("A B A B", {"A": 0, "B": 1})
    u = ModuleElement.single(d.key(), 2)
    assert psi_module(u) == 2 * psi(d)
    assert psi_module(ModuleElement.zero("framed")).is_zero()


def test_psi_module_kind_check():
    with pytest.raises(ValueError):
        psi_module(ModuleElement.zero("double"))


def test_psi_kills_relations_small():
    zero = ModuleElement.zero("double")
    for gen in generate_4T("framed", 2):
        image = psi_module(gen.element)
        assert weight(image) == 0
        assert quotient_equal(image, zero)


# --- the line variant -----------------------------------------------------------


def test_psi_l_empty_line():
    expected = ModuleElement.single(DoubleLinearDiagram((), ()).key(), 1)
    assert psi_l(fld("", {})) == expected


def test_psi_l_one_spanning_arc():
    expected = ModuleElement.single(DoubleLinearDiagram(("A",), ("A",)).key(), 2)
    assert psi_l(fld("A A", {"A": 1})) == expected


def test_psi_l_mass():
    for n in range(4):
        for key in enumerate_diagrams("linear", n):
            g = from_key(key)
            assert len(list(psi_l_summands(g))) == 2**n
            assert psi_l(g).mass() == 2**n


def test_psi_l_reverses_second_line():
    # with two split chords the second line reads back-to-front
    g = fld("A B A B", {"A": 1, "B": 1})
    keys = {summand.key() for _sides, summand in psi_l_summands(g)}
    both_on_line2_reversed = DoubleLinearDiagram(("A", "B"), ("B", "A")).key()
    assert both_on_line2_reversed in keys


def test_psi_l_module_linearity():
    g = fld("A A B B", {"A": 1, "B": 0})
    u = ModuleElement.single(g.key(), -3)
    assert psi_l_module(u) == -3 * psi_l(g)


def test_psi_l_kills_relations_small():
    zero = ModuleElement.zero("dlinear")
    for gen in generate_4T("linear", 2):
        image = psi_l_module(gen.element)
        assert weight(image) == 0
        assert quotient_equal(image, zero)
