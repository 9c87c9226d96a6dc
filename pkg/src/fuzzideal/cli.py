"""Command-line driver.

Exit status: 0 on success, 1 for bad input or a failed precondition,
2 when a computed result contradicts an invariant.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import codes, fixtures
from .algebra import (
    FiniteResiduatedLattice,
    WajsbergAlgebra,
    as_residuated,
    validate_residuated_lattice,
    validate_wajsberg,
)
from .channel import ChannelConfig, exhaustive_correction, run_channel
from .errors import FuzzIdealError, InvariantBreach, NotALatticeError
from .fuzzy import FuzzySubset, characterization_verdicts, fuzzy_closure
from .fuzzy_lattice import DEFAULT_BUDGET, ValueGrid, heyting_arrow, heyting_axioms_check
from .ideals import enumerate_ideals, is_prime_ideal
from .textio import (
    format_algebra,
    format_grades,
    format_matrix,
    load_algebra,
    load_matrix,
    parse_grade,
    parse_grades,
)

FORMATS = """\
formats:
  algebra file (wajsberg; row x, column y holds x o y):
      kind: wajsberg
      elements: 0 a b 1
      circ:
      1 1 1 1
      b 1 b 1
      a a 1 1
      0 a b 1
      neg: 1 b a 0
    kind: residuated instead takes the blocks join:, meet:, prod:, impl:
    and the lines bottom: e and top: e.  Lines starting with # are comments.
    Shipped fixtures can be named directly: order4, order8, order9,
    order9_printed, product:N.

  fuzzy file, one line per element:
      0 = 1
      a = 1/2
      b = 0
      1 = 0

  matrix file, one row per line (a '# rows=k cols=n' header is ignored):
      1100
      1010

examples:
  fuzzideal validate order8
  fuzzideal ideals order9 --proper --prime
  fuzzideal fuzzy close order4 mu.txt
  fuzzideal code from-ideals order8 --ideals 0,a,b,c 0,a,d,e 0,b,d,f
  fuzzideal simulate --matrix h16.txt --p 1/20 --trials 1000 --seed 7
"""


class CliError(FuzzIdealError):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fmt_set(I) -> str:
    return "{" + ",".join(I.names()) + "}"


def _load(source: str) -> WajsbergAlgebra | FiniteResiduatedLattice:
    path = Path(source)
    if path.is_file():
        return load_algebra(path)
    name = source[:-4] if source.endswith(".wal") else source
    if name in fixtures.NAMES or name.startswith("product:"):
        return fixtures.load_fixture(name)
    raise CliError(f"{source}: no such file or fixture")


def _check(A) -> list[str]:
    """Violations of the declared kind's axioms, as printable lines."""
    if isinstance(A, WajsbergAlgebra):
        report = validate_wajsberg(A)
        if not report.ok:
            return [str(v) for v in report.violations]
        try:
            L = as_residuated(A)
        except NotALatticeError as exc:
            return [f"lattice: {exc}"]
        return [str(v) for v in validate_residuated_lattice(L).violations]
    return [str(v) for v in validate_residuated_lattice(A).violations]


def _load_valid(source: str):
    A = _load(source)
    bad = _check(A)
    if bad:
        raise CliError(f"{source} is not a valid algebra: {bad[0]}")
    return A


def _load_fuzzy(A, path: str) -> FuzzySubset:
    L = as_residuated(A)
    text = Path(path).read_text(encoding="utf-8")
    return FuzzySubset(L, parse_grades(text, L.elements))


def _parse_order(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _parse_prob(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _print_code(code: codes.BinaryCode, ideals=None, output: str | None = None) -> None:
    if ideals is not None:
        for i, I in enumerate(ideals, 1):
            _out(f"# I{i} = {_fmt_set(I)}")
    text = format_matrix(code.generator, header=True)
    sys.stdout.write(text)
    _out(str(code.params))
    if output:
        Path(output).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    A = _load(args.algebra)
    kind = "wajsberg" if isinstance(A, WajsbergAlgebra) else "residuated"
    bad = _check(A)
    _out(f"kind: {kind}")
    _out(f"elements: {A.size}")
    if bad:
        for line in bad:
            _out(f"violation {line}")
        _out("status: invalid")
        return 1
    _out("status: valid")
    return 0


def cmd_ideals(args) -> int:
    A = _load_valid(args.algebra)
    for I in enumerate_ideals(A, proper=args.proper):
        if args.prime and not is_prime_ideal(A, I, conventional=args.conventional):
            continue
        _out(I.bitstring() if args.bits else _fmt_set(I))
    return 0


def cmd_fuzzy_check(args) -> int:
    A = _load_valid(args.algebra)
    verdicts = characterization_verdicts(_load_fuzzy(A, args.fuzzy))
    for name, v in verdicts.items():
        _out(f"{name}: {str(v).lower()}")
    if len(set(verdicts.values())) != 1:
        raise InvariantBreach("fuzzy-ideal characterizations disagree")
    _out(f"fuzzy-ideal: {str(verdicts['uplus']).lower()}")
    return 0


def cmd_fuzzy_close(args) -> int:
    A = _load_valid(args.algebra)
    mu = fuzzy_closure(_load_fuzzy(A, args.fuzzy))
    sys.stdout.write(format_grades(mu.algebra.elements, mu.grades))
    return 0


def _grid(text: str | None) -> ValueGrid | None:
    if text is None:
        return None
    return ValueGrid.of(parse_grade(v) for v in text.split(",") if v.strip())


def cmd_fuzzy_arrow(args) -> int:
    A = _load_valid(args.algebra)
    mu1, mu2 = _load_fuzzy(A, args.first), _load_fuzzy(A, args.second)
    for label, mu in (("first", mu1), ("second", mu2)):
        if not characterization_verdicts(mu)["uplus"]:
            raise CliError(f"the {label} argument is not a fuzzy ideal")
    mu = heyting_arrow(mu1, mu2, _grid(args.grid), args.budget)
    sys.stdout.write(format_grades(mu.algebra.elements, mu.grades))
    return 0


def cmd_fuzzy_heyting(args) -> int:
    A = _load_valid(args.algebra)
    report = heyting_axioms_check(A, _grid(args.grid), args.budget)
    for r in report.results:
        _out(r.tsv() if args.tsv else r.line())
    statuses = {r.status for r in report.results}
    if "FAIL" in statuses:
        return 2
    return 1 if "BUDGET" in statuses else 0


def cmd_code_from_ideals(args) -> int:
    A = _load_valid(args.algebra)
    if args.ideals:
        ideals = codes.ideals_from_names(A, (g.split(",") for g in args.ideals))
    else:
        ideals = codes.generator_order(enumerate_ideals(A, proper=True))
        if not ideals:
            raise CliError("the algebra has no proper ideals")
    _print_code(codes.generator_matrix(ideals), ideals, args.output)
    return 0


def cmd_code_hadamard(args) -> int:
    built = codes.build_hadamard(args.order)
    _print_code(built.code, built.ideals, args.output)
    M = built.code.generator
    cols = codes.columns_all_bitvectors(M)
    roweq = codes.row_equivalent(M, codes.boolean_form_matrix(args.order))
    _out(f"hadamard-type: {str(codes.is_hadamard_type(built.code.params)).lower()}")
    _out(f"columns-all-bitvectors: {str(cols).lower()}")
    _out(f"row-equivalent-to-boolean-form: {str(roweq).lower()}")
    if not (cols and roweq):
        raise InvariantBreach("Hadamard construction failed its own checks")
    return 0


def cmd_code_construct(args) -> int:
    W, ideals = codes.boolean_from_matrix(load_matrix(args.matrix))
    sys.stdout.write(format_algebra(W))
    for i, I in enumerate(ideals, 1):
        _out(f"# I{i} = {_fmt_set(I)} codeword {codes.codeword(W, I)}")
    return 0


def cmd_code_params(args) -> int:
    params = codes.code_params(load_matrix(args.matrix))
    _out(str(params))
    _out(f"hadamard-type: {str(codes.is_hadamard_type(params)).lower()}")
    return 0


def cmd_code_boolean_form(args) -> int:
    sys.stdout.write(format_matrix(codes.boolean_form_matrix(args.order), header=True))
    return 0


def cmd_code_roweq(args) -> int:
    M1, M2 = load_matrix(args.first), load_matrix(args.second)
    _out(str(codes.row_equivalent(M1, M2)).lower())
    return 0


def cmd_simulate(args) -> int:
    code = codes.BinaryCode(load_matrix(args.matrix))
    report = run_channel(code, ChannelConfig(args.p, args.trials, args.seed))
    _out(report.header())
    _out(report.tsv())
    if args.exhaustive is not None:
        c = exhaustive_correction(code, args.exhaustive)
        _out(f"# exhaustive weight<={c.max_weight}: patterns={c.patterns} messages={c.messages} "
             f"corrected={c.corrected} ambiguous={c.ambiguous} wrong={c.wrong}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    raw = argparse.RawDescriptionHelpFormatter
    p = argparse.ArgumentParser(
        prog="fuzzideal",
        description="Ideals, fuzzy ideals and binary codes of finite Wajsberg algebras.",
        epilog=FORMATS,
        formatter_class=raw,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the axioms of an algebra file")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("ideals", help="list ideals in canonical order")
    s.add_argument("algebra")
    s.add_argument("--proper", action="store_true", help="drop {0} and the whole algebra")
    s.add_argument("--prime", action="store_true", help="keep prime ideals only")
    s.add_argument("--conventional", action="store_true",
                   help="prime test quantifies over the whole algebra instead of the ideal")
    s.add_argument("--bits", action="store_true", help="print membership bitstrings")
    s.set_defaults(func=cmd_ideals)

    fz = sub.add_parser("fuzzy", help="fuzzy ideals").add_subparsers(dest="action", required=True)
    s = fz.add_parser("check", help="run every fuzzy-ideal characterization")
    s.add_argument("algebra")
    s.add_argument("fuzzy")
    s.set_defaults(func=cmd_fuzzy_check)
    s = fz.add_parser("close", help="generated fuzzy ideal")
    s.add_argument("algebra")
    s.add_argument("fuzzy")
    s.set_defaults(func=cmd_fuzzy_close)
    s = fz.add_parser("arrow", help="relative pseudocomplement on a value grid")
    s.add_argument("algebra")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--grid", help="comma-separated grades, e.g. 0,1/2,1")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_fuzzy_arrow)
    s = fz.add_parser("heyting", help="check the Heyting laws on all grid fuzzy ideals")
    s.add_argument("algebra")
    s.add_argument("--grid", required=True, help="comma-separated grades, e.g. 0,1/2,1")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--tsv", action="store_true", help="tab-separated law, status, witness")
    s.set_defaults(func=cmd_fuzzy_heyting)

    cd = sub.add_parser("code", help="binary codes from ideals").add_subparsers(
        dest="action", required=True)
    s = cd.add_parser("from-ideals", help="generator matrix of a family of ideals")
    s.add_argument("algebra")
    s.add_argument("--ideals", nargs="+", metavar="E,E,...",
                   help="ideals as comma-separated element names (default: all proper ideals)")
    s.add_argument("-o", "--output", help="also write the matrix to this file")
    s.set_defaults(func=cmd_code_from_ideals)
    s = cd.add_parser("hadamard", help="Hadamard code from the Boolean algebra {0,1}^n")
    s.add_argument("--order", type=_parse_order, required=True)
    s.add_argument("-o", "--output", help="also write the matrix to this file")
    s.set_defaults(func=cmd_code_hadamard)
    s = cd.add_parser("construct", help="Boolean algebra and ideals from a Boolean-form matrix")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_code_construct)
    s = cd.add_parser("params", help="[n,k,d] parameters of a matrix")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_code_params)
    s = cd.add_parser("boolean-form", help="print the Boolean-form matrix of order n")
    s.add_argument("--order", type=_parse_order, required=True)
    s.set_defaults(func=cmd_code_boolean_form)
    s = cd.add_parser("roweq", help="are two matrices row equivalent over GF(2)")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_code_roweq)

    s = sub.add_parser("simulate", help="binary symmetric channel with min-distance decoding")
    s.add_argument("--matrix", required=True)
    s.add_argument("--p", type=_parse_prob, required=True, help="flip probability p/q")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exhaustive", type=int, metavar="W",
                   help="also decode every error pattern of weight <= W")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (FuzzIdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
