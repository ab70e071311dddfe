"""Command-line surface: the diagram text grammar and the commands that run
every computation and verification sweep.

Grammar::

    token    := LABEL FRAMING?     LABEL = [A-Za-z][A-Za-z0-9]*, FRAMING = 0|1
    cdword   := token*             (cyclic; may be empty)
    diagram  := "cd:" cdword | "lcd:" cdword
              | "dcd:" cdword "|" cdword | "dlcd:" cdword "|" cdword
    melem    := INT "[" diagram "]" ("+" INT "[" diagram "]")*

Framing digits are mandatory in the framed kinds (``cd``, ``lcd``) and
forbidden in the double kinds (``dcd``, ``dlcd``); a double-kind label may
not end in 0 or 1, which keeps a framed word from silently parsing as bare
labels.  Exit codes: 0 success, 1 mathematical "no" answers (quotient-eq
false, no witness, a failed sweep), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import verify
from .algebra import (
    KindMismatchError,
    ModuleElement,
    UndecidedError,
    quotient_equal,
)
from .diagrams import (
    CanonicalKey,
    DoubleChordDiagram,
    DoubleLinearDiagram,
    FramedChordDiagram,
    FramedLinearDiagram,
    InvalidDiagramError,
    closure,
    coproduct,
    enumerate_diagrams,
    from_key,
    spell_label,
)
from .parity import psi, psi_l, psi_l_module, psi_module
from .surgery import beta, beta_framed, weight
from .sums import (
    connected_sum_dlinear,
    connected_sum_framed,
    connected_sum_linear,
    search_counterexample,
    witness_quotient_split,
)

_PREFIX_TO_KIND = {"cd": "framed", "lcd": "linear", "dcd": "double", "dlcd": "dlinear"}
_KIND_TO_PREFIX = {v: k for k, v in _PREFIX_TO_KIND.items()}
_LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
_TOKEN_RE = re.compile(r"\S+")


class ParseError(ValueError):
    """Input text violates the grammar; ``column`` is 1-based."""

    def __init__(self, message, column):
        super().__init__(f"column {column}: {message}")
        self.column = column


# ---------------------------------------------------------------------------
# parsing


def parse(text: str):
    """Parse a diagram or a module element, canonicalized.

    Diagram texts yield diagram objects in canonical form; element texts
    yield :class:`ModuleElement`.
    """
    stripped = text.lstrip()
    offset = len(text) - len(stripped)
    if not stripped:
        raise ParseError("empty input", offset + 1)
    if stripped[0] == "-" or stripped[0].isdigit():
        return _parse_element(text)
    return _parse_diagram(text, 0)


def _parse_diagram(text, offset):
    m = re.match(r"\s*(dlcd|dcd|lcd|cd):", text)
    if not m:
        col = offset + len(text) - len(text.lstrip()) + 1
        raise ParseError("expected a diagram prefix cd:, lcd:, dcd:, or dlcd:", col)
    prefix = m.group(1)
    kind = _PREFIX_TO_KIND[prefix]
    body = text[m.end() :]
    body_offset = offset + m.end()
    if kind in ("framed", "linear"):
        if "|" in body:
            raise ParseError(
                f"'|' is not allowed in a {prefix} diagram", body_offset + body.index("|") + 1
            )
        word, framing = _parse_framed_word(body, body_offset)
        cls = FramedChordDiagram if kind == "framed" else FramedLinearDiagram
        return cls(word, framing).canonical()
    bar = body.find("|")
    if bar < 0:
        raise ParseError(f"a {prefix} diagram needs one '|'", body_offset + len(body) + 1)
    second_bar = body.find("|", bar + 1)
    if second_bar >= 0:
        raise ParseError("only one '|' is allowed", body_offset + second_bar + 1)
    word1 = _parse_bare_word(body[:bar], body_offset)
    word2 = _parse_bare_word(body[bar + 1 :], body_offset + bar + 1)
    _check_counts(word1 + word2, body_offset + len(body))
    cls = DoubleChordDiagram if kind == "double" else DoubleLinearDiagram
    return cls(word1, word2).canonical()


def _parse_framed_word(body, offset):
    word = []
    framing = {}
    first_col = {}
    for m in _TOKEN_RE.finditer(body):
        token, col = m.group(0), offset + m.start() + 1
        if len(token) < 2 or token[-1] not in "01":
            raise ParseError(f"token {token!r} is missing its framing digit", col)
        label, fr = token[:-1], int(token[-1])
        if not _LABEL_RE.match(label):
            raise ParseError(f"bad chord label {label!r}", col)
        if label in framing and framing[label] != fr:
            raise ParseError(
                f"framing mismatch for chord {label!r}: {fr} here, "
                f"{framing[label]} at column {first_col[label]}",
                col,
            )
        if label not in framing:
            framing[label] = fr
            first_col[label] = col
        word.append(label)
    _check_counts(tuple(word), offset + len(body))
    return tuple(word), framing


def _parse_bare_word(body, offset):
    word = []
    for m in _TOKEN_RE.finditer(body):
        token, col = m.group(0), offset + m.start() + 1
        if not _LABEL_RE.match(token):
            raise ParseError(f"bad chord label {token!r}", col)
        if token[-1] in "01":
            raise ParseError(
                f"token {token!r} ends in a framing digit, which double-kind labels may not",
                col,
            )
        word.append(token)
    return tuple(word)


def _check_counts(word, end_col):
    counts = {}
    for lab in word:
        counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise ParseError(
            "every chord must occur exactly twice; offending labels: " + ", ".join(bad),
            end_col,
        )


_INT_RE = re.compile(r"-?\d+")


def _parse_element(text):
    pos = 0
    terms = []
    kind = None
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        m = _INT_RE.match(text, pos)
        if not m:
            raise ParseError("expected an integer coefficient", pos + 1)
        coeff = int(m.group(0))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text) or text[pos] != "[":
            raise ParseError("expected '[' after the coefficient", pos + 1)
        close = text.find("]", pos + 1)
        if close < 0:
            raise ParseError("unclosed '['", pos + 1)
        diagram = _parse_diagram(text[pos + 1 : close], pos + 1)
        if kind is None:
            kind = diagram.kind
        elif diagram.kind != kind:
            raise ParseError(
                f"kind mismatch: {diagram.kind} term in a {kind} element", pos + 2
            )
        terms.append((diagram.key(), coeff))
        pos = close + 1
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        if text[pos] != "+":
            raise ParseError("expected '+' between terms", pos + 1)
        pos += 1
    return ModuleElement(kind, terms)


# ---------------------------------------------------------------------------
# formatting


def format_diagram(obj) -> str:
    """Canonical text of a diagram or key; stable under parse/format."""
    key = obj if isinstance(obj, CanonicalKey) else obj.key()
    prefix = _KIND_TO_PREFIX[key.kind] + ":"
    if key.kind in ("framed", "linear"):
        tokens = [f"{spell_label(num)}{fr}" for num, fr in key.payload]
        return " ".join([prefix] + tokens) if tokens else prefix
    side1 = [spell_label(num) for num in key.payload[0]]
    side2 = [spell_label(num) for num in key.payload[1]]
    return " ".join([prefix] + side1 + ["|"] + side2).rstrip()


def format_element(element: ModuleElement) -> str:
    """Canonical element text; the zero element prints as the chordless
    diagram with coefficient 0."""
    if element.is_zero():
        empty = _empty_key(element.kind)
        return f"0 [{format_diagram(empty)}]"
    return " + ".join(f"{c} [{format_diagram(k)}]" for k, c in element.items())


def _empty_key(kind):
    if kind in ("framed", "linear"):
        return CanonicalKey(kind, ())
    return CanonicalKey(kind, ((), ()))


def format_pair_sum(pairs: dict) -> str:
    """Text of a coproduct: ``COEFF [left] (x) [right]`` terms joined by +."""
    parts = []
    for (left, right), coeff in sorted(pairs.items()):
        parts.append(f"{coeff} [{format_diagram(left)}] (x) [{format_diagram(right)}]")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# commands


def _as_element(text):
    value = parse(text)
    if isinstance(value, ModuleElement):
        return value
    return ModuleElement.single(value.key())


def _cmd_canon(args):
    value = parse(args.input)
    if isinstance(value, ModuleElement):
        return 0, format_element(value)
    return 0, format_diagram(value)


def _cmd_beta(args):
    d = parse(args.diagram)
    if isinstance(d, ModuleElement):
        raise ParseError("beta takes a single diagram, not an element", 1)
    if isinstance(d, (DoubleChordDiagram, DoubleLinearDiagram)):
        return 0, str(beta(d))
    if isinstance(d, FramedChordDiagram):
        return 0, str(beta_framed(d))
    raise ParseError("beta is defined for dcd, dlcd, and cd diagrams", 1)


def _cmd_psi(args):
    value = _as_element(args.input)
    if value.kind != "framed":
        raise ParseError("psi takes framed (cd) input", 1)
    return 0, format_element(psi_module(value))


def _cmd_psil(args):
    value = _as_element(args.input)
    if value.kind != "linear":
        raise ParseError("psil takes linear (lcd) input", 1)
    return 0, format_element(psi_l_module(value))


def _cmd_weight(args):
    value = _as_element(args.input)
    return 0, str(weight(value))


def _cmd_consum(args):
    d1 = parse(args.first)
    d2 = parse(args.second)
    if isinstance(d1, ModuleElement) or isinstance(d2, ModuleElement):
        raise ParseError("consum takes two diagrams", 1)
    if type(d1) is not type(d2):
        raise ParseError("consum operands must have the same kind", 1)
    if isinstance(d1, FramedChordDiagram):
        result = connected_sum_framed(d1, args.cut1, d2, args.cut2)
    elif isinstance(d1, FramedLinearDiagram):
        result = connected_sum_linear(d1, d2)
    elif isinstance(d1, DoubleLinearDiagram):
        result = connected_sum_dlinear(d1, d2)
    else:
        raise ParseError("no connected sum is defined for dcd diagrams", 1)
    return 0, format_diagram(result)


def _cmd_closure(args):
    g = parse(args.diagram)
    if not isinstance(g, FramedLinearDiagram):
        raise ParseError("closure takes an lcd diagram", 1)
    return 0, format_diagram(closure(g))


def _cmd_coproduct(args):
    d = parse(args.diagram)
    if not isinstance(d, FramedChordDiagram):
        raise ParseError("coproduct takes a cd diagram", 1)
    return 0, format_pair_sum(coproduct(d))


def _cmd_quotient_eq(args):
    u = _as_element(args.first)
    v = _as_element(args.second)
    equal = quotient_equal(u, v, rational=args.rational)
    return (0 if equal else 1), ("true" if equal else "false")


def _cmd_enumerate(args):
    keys = enumerate_diagrams(args.kind, args.degree)
    return 0, "\n".join(format_diagram(k) for k in keys)


def _cmd_check_4t(args):
    kind, n = args.kind, args.degree
    lines = [f"kind: {kind}", f"degree: {n}"]
    if kind in ("double", "dlinear"):
        kill = verify.weight_kill(kind, n)
        two_t = verify.two_term_beta(kind, n)
        lines.append(f"generators: {kill.checked}")
        lines.append(f"2t-pairs: {two_t.checked}")
        lines.append(f"w-kill: {'PASS' if kill.passed else 'FAIL'}")
        lines.append(f"2T: {'PASS' if two_t.passed else 'FAIL'}")
        ok = kill.passed and two_t.passed
    else:
        kill = verify.psi_weight_kill(kind, n)
        span = verify.psi_relation_span(kind, n)
        lines.append(f"generators: {kill.checked}")
        lines.append(f"psi-w-kill: {'PASS' if kill.passed else 'FAIL'}")
        lines.append(f"psi-span: {'PASS' if span.passed else 'FAIL'}")
        ok = kill.passed and span.passed
    return (0 if ok else 1), "\n".join(lines)


def _cmd_find_counterexample(args):
    witnesses = search_counterexample(args.max_chords)
    if not witnesses:
        return 1, f"no witness found (max chords {args.max_chords})"
    lines = []
    for i, w in enumerate(witnesses, 1):
        lines.append(
            f"witness {i}: d1=[{format_diagram(w.d1)}] d2=[{format_diagram(w.d2)}] "
            f"cuts={w.cuts_a} w={w.w_a} cuts={w.cuts_b} w={w.w_b} "
            f"values={','.join(str(v) for v in w.w_values)}"
        )
    lines.append(f"witnesses found: {len(witnesses)}")
    split = witness_quotient_split(witnesses[0])
    lines.append(f"first-witness quotient-equal: {'false' if split else 'true'}")
    return 0, "\n".join(lines)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="chordcalc",
        description="Calculus of framed, double, and linear chord diagrams.",
    )
    parser.add_argument("--out", metavar="PATH", help="also write the output to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical form of a diagram or element")
    p.add_argument("input")
    p.set_defaults(run=_cmd_canon)

    p = sub.add_parser("beta", help="surgery component count of a diagram")
    p.add_argument("diagram")
    p.set_defaults(run=_cmd_beta)

    p = sub.add_parser("psi", help="parity expansion of a framed diagram or element")
    p.add_argument("input")
    p.set_defaults(run=_cmd_psi)

    p = sub.add_parser("psil", help="parity expansion of a linear diagram or element")
    p.add_argument("input")
    p.set_defaults(run=_cmd_psil)

    p = sub.add_parser("weight", help="weight of a double/dlinear element")
    p.add_argument("input")
    p.set_defaults(run=_cmd_weight)

    p = sub.add_parser("consum", help="connected sum of two diagrams")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--cut1", type=int, default=0, help="arc index on the first cd diagram")
    p.add_argument("--cut2", type=int, default=0, help="arc index on the second cd diagram")
    p.set_defaults(run=_cmd_consum)

    p = sub.add_parser("closure", help="close a linear diagram into a chord diagram")
    p.add_argument("diagram")
    p.set_defaults(run=_cmd_closure)

    p = sub.add_parser("coproduct", help="chord-subset coproduct of a framed diagram")
    p.add_argument("diagram")
    p.set_defaults(run=_cmd_coproduct)

    p = sub.add_parser("check-4t", help="run the relation sweeps at one degree")
    p.add_argument("--kind", required=True, choices=("framed", "double", "linear", "dlinear"))
    p.add_argument("--degree", required=True, type=int)
    p.set_defaults(run=_cmd_check_4t)

    p = sub.add_parser("quotient-eq", help="exact equality modulo the 4T relations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--rational", action="store_true", help="decide over Q instead of Z")
    p.set_defaults(run=_cmd_quotient_eq)

    p = sub.add_parser("enumerate", help="all canonical diagrams of one degree")
    p.add_argument("--kind", required=True, choices=("framed", "double", "linear", "dlinear"))
    p.add_argument("--degree", required=True, type=int)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser(
        "find-counterexample",
        help="search for connected sums split apart by the parity weight",
    )
    p.add_argument("--max-chords", required=True, type=int)
    p.set_defaults(run=_cmd_find_counterexample)

    return parser


def main(argv=None) -> int:
    """Run one command; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code, text = args.run(args)
    except (ParseError, InvalidDiagramError, KindMismatchError, UndecidedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if text:
        print(text)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return code


def console_main():
    raise SystemExit(main())
