"""Exhaustive verification sweeps.

Each sweep checks one of the structural facts the calculus rests on, over
every object of the stated size, and reports how many objects were checked
together with the failures (empty on success).  The command-line ``check-4t``
command and the acceptance test suite both run these.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ModuleElement, generate_2T_pairs, generate_4T, quotient_equal
from .diagrams import enumerate_diagrams, from_key
from .parity import psi_l, psi_l_module, psi_module
from .sums import connected_sum_dlinear, connected_sum_linear
from .surgery import beta, weight


@dataclass(frozen=True)
class SweepResult:
    description: str
    checked: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def weight_kill(kind: str, n: int) -> SweepResult:
    """The weight system vanishes on every 4T generator (double kinds)."""
    failures = []
    gens = generate_4T(kind, n)
    for gen in gens:
        w = weight(gen.element)
        if w != 0:
            failures.append((gen.base, gen.moving_chord, gen.occurrence, gen.target_chord, w))
    return SweepResult(f"w-kill {kind} n={n}", len(gens), tuple(failures))


def two_term_beta(kind: str, n: int) -> SweepResult:
    """beta is constant on every 2T pair (double kinds)."""
    failures = []
    pairs = generate_2T_pairs(kind, n)
    for p, q in pairs:
        bp, bq = beta(from_key(p)), beta(from_key(q))
        if bp != bq:
            failures.append((p, q, bp, bq))
    return SweepResult(f"2T beta {kind} n={n}", len(pairs), tuple(failures))


def psi_weight_kill(kind: str, n: int) -> SweepResult:
    """The weight of the parity image vanishes on every 4T generator
    (framed or linear kind).  Cheaper necessary half of the span check."""
    expand = psi_module if kind == "framed" else psi_l_module
    failures = []
    gens = generate_4T(kind, n)
    for gen in gens:
        w = weight(expand(gen.element))
        if w != 0:
            failures.append((gen.base, gen.moving_chord, gen.occurrence, gen.target_chord, w))
    return SweepResult(f"psi-w-kill {kind} n={n}", len(gens), tuple(failures))


def psi_relation_span(kind: str, n: int) -> SweepResult:
    """The parity image of every 4T generator lies in the integer span of
    the image kind's 4T generators (exact Diophantine membership)."""
    if kind == "framed":
        expand, image_kind = psi_module, "double"
    else:
        expand, image_kind = psi_l_module, "dlinear"
    zero = ModuleElement.zero(image_kind)
    failures = []
    gens = generate_4T(kind, n)
    for gen in gens:
        if not quotient_equal(expand(gen.element), zero):
            failures.append((gen.base, gen.moving_chord, gen.occurrence, gen.target_chord))
    return SweepResult(f"psi-span {kind} n={n}", len(gens), tuple(failures))


def psi_mass(max_n: int) -> SweepResult:
    """The parity expansion of an n-chord framed diagram has total
    coefficient mass exactly 2^n."""
    failures = []
    checked = 0
    for n in range(max_n + 1):
        for key in enumerate_diagrams("framed", n):
            checked += 1
            mass = psi_module(ModuleElement.single(key)).mass()
            if mass != 2**n:
                failures.append((key, mass))
    return SweepResult(f"psi mass n<={max_n}", checked, tuple(failures))


def sum_symmetry(max_total: int) -> SweepResult:
    """Weight of the parity expansion is symmetric in the two operands of a
    linear connected sum, for all pairs with at most ``max_total`` chords."""
    failures = []
    checked = 0
    for total in range(max_total + 1):
        for n1 in range(total + 1):
            for k1 in enumerate_diagrams("linear", n1):
                g1 = from_key(k1)
                for k2 in enumerate_diagrams("linear", total - n1):
                    g2 = from_key(k2)
                    checked += 1
                    w12 = weight(psi_l(connected_sum_linear(g1, g2)))
                    w21 = weight(psi_l(connected_sum_linear(g2, g1)))
                    if w12 != w21:
                        failures.append((k1, k2, w12, w21))
    return SweepResult(f"sum symmetry total<={max_total}", checked, tuple(failures))


def beta_additivity(max_each: int) -> SweepResult:
    """beta of a line-wise connected sum deficits the operand betas by 1 or 2."""
    pool = [key for n in range(max_each + 1) for key in enumerate_diagrams("dlinear", n)]
    failures = []
    checked = 0
    for k1 in pool:
        h1 = from_key(k1)
        b1 = beta(h1)
        for k2 in pool:
            h2 = from_key(k2)
            checked += 1
            deficit = b1 + beta(h2) - beta(connected_sum_dlinear(h1, h2))
            if deficit not in (1, 2):
                failures.append((k1, k2, deficit))
    return SweepResult(f"beta additivity n<={max_each} each", checked, tuple(failures))
