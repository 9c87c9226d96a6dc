"""Text formats for algebras, fuzzy subsets and bit matrices.

Algebra file (UTF-8, ``#`` starts a comment line)::

    kind: wajsberg
    elements: 0 a b 1
    circ:
    1 1 1 1
    b 1 b 1
    a a 1 1
    0 a b 1
    neg: 1 b a 0

A residuated file has ``kind: residuated``, the blocks ``join:``, ``meet:``,
``prod:``, ``impl:`` and the lines ``bottom: e`` and ``top: e``.  A Wajsberg
file may carry ``one: e``; when absent the unit is read off ``x o x`` for the
first element.

Fuzzy subset file: one ``element = p/q`` line per element.

Matrix file: one row per line made of ``0``/``1`` characters.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import FiniteResiduatedLattice, WajsbergAlgebra
from .errors import ParseError, StructureError

_RES_BLOCKS = ("join", "meet", "prod", "impl")


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def parse_algebra(text: str) -> WajsbergAlgebra | FiniteResiduatedLattice:
    lines = _content_lines(text)
    fields: dict[str, str] = {}
    blocks: dict[str, list[list[str]]] = {}
    elements: list[str] | None = None
    pos = 0
    while pos < len(lines):
        no, line = lines[pos]
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {no}: expected 'key: value', got {line!r}")
        key, rest = key.strip(), rest.strip()
        if key in fields or key in blocks:
            raise ParseError(f"line {no}: duplicate {key!r}")
        pos += 1
        if key in ("circ",) + _RES_BLOCKS:
            if rest:
                raise ParseError(f"line {no}: {key}: block rows go on the following lines")
            if elements is None:
                raise ParseError(f"line {no}: 'elements:' must precede table blocks")
            n = len(elements)
            rows = []
            for _ in range(n):
                if pos >= len(lines):
                    raise ParseError(f"{key}: expected {n} rows, file ended")
                rno, rline = lines[pos]
                cells = rline.split()
                if len(cells) != n or ":" in rline:
                    raise ParseError(f"line {rno}: {key} row must have {n} cells")
                rows.append(cells)
                pos += 1
            blocks[key] = rows
        elif key == "elements":
            elements = rest.split()
            fields[key] = rest
        elif key in ("kind", "neg", "bottom", "top", "one"):
            fields[key] = rest
        else:
            raise ParseError(f"line {no}: unknown key {key!r}")

    if elements is None:
        raise ParseError("missing 'elements:' line")
    kind = fields.get("kind")
    try:
        if kind == "wajsberg":
            if "circ" not in blocks or "neg" not in fields:
                raise ParseError("wajsberg algebra needs 'circ:' and 'neg:'")
            extra = set(blocks) - {"circ"} | set(fields) & {"bottom", "top"}
            if extra:
                raise ParseError(f"unexpected keys for wajsberg: {sorted(extra)}")
            neg = fields["neg"].split()
            if len(neg) != len(elements):
                raise ParseError(f"neg: expected {len(elements)} entries, got {len(neg)}")
            one = fields.get("one", blocks["circ"][0][0])
            return WajsbergAlgebra.from_names(elements, blocks["circ"], neg, one)
        if kind == "residuated":
            missing = [b for b in _RES_BLOCKS if b not in blocks]
            missing += [f for f in ("bottom", "top") if f not in fields]
            if missing:
                raise ParseError(f"residuated lattice is missing {missing}")
            if "circ" in blocks or "neg" in fields or "one" in fields:
                raise ParseError("unexpected wajsberg keys in a residuated file")
            return FiniteResiduatedLattice.from_names(
                elements, *(blocks[b] for b in _RES_BLOCKS), fields["bottom"], fields["top"]
            )
    except StructureError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"kind must be 'wajsberg' or 'residuated', got {kind!r}")


def _format_rows(elements: Sequence[str], table) -> list[str]:
    return [" ".join(elements[v] for v in row) for row in table]


def format_algebra(A: WajsbergAlgebra | FiniteResiduatedLattice) -> str:
    e = A.elements
    out = []
    if isinstance(A, WajsbergAlgebra):
        out += ["kind: wajsberg", "elements: " + " ".join(e), "circ:"]
        out += _format_rows(e, A.circ_table)
        out.append("neg: " + " ".join(e[v] for v in A.neg_table))
        if A.circ_table[0][0] != A.one:
            out.append(f"one: {e[A.one]}")
    else:
        out += ["kind: residuated", "elements: " + " ".join(e)]
        for b in _RES_BLOCKS:
            out.append(f"{b}:")
            out += _format_rows(e, getattr(A, f"{b}_table"))
        out += [f"bottom: {e[A.bottom]}", f"top: {e[A.top]}"]
    return "\n".join(out) + "\n"


def load_algebra(path: str | Path) -> WajsbergAlgebra | FiniteResiduatedLattice:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# fuzzy subsets


def parse_grade(text: str) -> Fraction:
    try:
        g = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational grade: {text!r}") from None
    if not 0 <= g <= 1:
        raise ParseError(f"grade {g} outside [0, 1]")
    return g


def parse_grades(text: str, elements: Sequence[str]) -> tuple[Fraction, ...]:
    """Parse ``element = p/q`` lines into a grade vector in declared order."""
    grades: dict[str, Fraction] = {}
    for no, line in _content_lines(text):
        name, sep, value = line.partition("=")
        name = name.strip()
        if not sep:
            raise ParseError(f"line {no}: expected 'element = p/q'")
        if name not in elements:
            raise ParseError(f"line {no}: unknown element {name!r}")
        if name in grades:
            raise ParseError(f"line {no}: duplicate element {name!r}")
        try:
            grades[name] = parse_grade(value)
        except ParseError as exc:
            raise ParseError(f"line {no}: {exc}") from None
    missing = [e for e in elements if e not in grades]
    if missing:
        raise ParseError(f"no grade for {', '.join(missing)}")
    return tuple(grades[e] for e in elements)


def format_grades(elements: Sequence[str], grades: Sequence[Fraction]) -> str:
    return "".join(f"{e} = {g}\n" for e, g in zip(elements, grades))


# ---------------------------------------------------------------------------
# bit matrices


def parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    for no, line in _content_lines(text):
        if set(line) - {"0", "1"}:
            raise ParseError(f"line {no}: matrix rows contain only 0 and 1")
        rows.append(tuple(int(c) for c in line))
    if not rows:
        raise ParseError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("ragged matrix rows")
    return tuple(rows)


def format_matrix(rows: Sequence[Sequence[int]], header: bool = False) -> str:
    out = []
    if header:
        out.append(f"# rows={len(rows)} cols={len(rows[0]) if rows else 0}")
    out += ["".join(map(str, r)) for r in rows]
    return "\n".join(out) + "\n"


def load_matrix(path: str | Path) -> tuple[tuple[int, ...], ...]:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
