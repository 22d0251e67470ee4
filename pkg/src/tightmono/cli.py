"""Command-line interface: analyze one weight, sweep boxes of weights,
cross-check the two engines against each other, and test independence of
the monomial from the chosen reduced word.

Output is UTF-8 on stdout (JSON output is byte-deterministic for a fixed
invocation); diagnostics go to stderr. Exit codes: 0 success with all
internal agreement checks passing, 1 usage or configuration error, 2 a
verified mathematical disagreement.
"""

from __future__ import annotations

import argparse
import itertools
import json
import multiprocessing
import sys
from typing import Sequence

from . import a5
from .form import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_WORD_CAP,
    SOURCE_ORACLE,
    DegreeCapExceeded,
    WeightTooLarge,
    classify_form,
    equal_by_pairing,
    form_monomials,
)
from .laurent import eval_at_vinv0
from .roots import (
    CartanSpec,
    InvalidWord,
    NonDominantWeight,
    ReducedWord,
    Weight,
    validate_w0_word,
    xlambda,
)

TYPES = ("A2", "A3", "A4", "A5", "D4")


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit code 1; argparse's default of 2 is reserved
    # for mathematical disagreements.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_weight(text: str, cartan: CartanSpec) -> Weight:
    try:
        lam = Weight.parse(text)
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}") from None
    if len(lam.coords) != cartan.rank:
        raise ValueError(f"weight {text!r} needs {cartan.rank} coordinates for {cartan.kind}")
    if not lam.is_dominant:
        raise ValueError(f"weight {text!r} has a negative coordinate")
    return lam


def _ratfunc_json(f) -> dict:
    return {"num": str(f.num), "den": str(f.den)}


def _emit(payload: dict, fmt: str, table_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(table_lines))


def _oracle_monomial(lam: Weight, cartan: CartanSpec, max_degree: int):
    m = xlambda(cartan.standard_w0_word(), lam, cartan).drop_zeros()
    if m.degree > max_degree:
        raise DegreeCapExceeded(
            f"monomial degree {m.degree} for lambda={lam.coords} exceeds the "
            f"oracle degree cap {max_degree} (raise it with --max-degree)"
        )
    return m


def cmd_analyze(args: argparse.Namespace) -> int:
    cartan = CartanSpec.from_name(args.type)
    lam = _parse_weight(args.lam, cartan)
    if args.type == "A5":
        report = a5.classify(lam)
        payload = {"command": "analyze", "type": args.type, **report.to_dict(),
                   "tight_conditions": a5.tight_conditions(lam)}
        lines = [
            f"type              {args.type}",
            f"lambda            {','.join(map(str, lam.coords))}",
            f"verdict           {report.verdict.kind.value}",
            f"constant_term     {report.verdict.constant_term}",
            f"zero_count        {report.zero_count}",
            f"tight_conditions  {a5.tight_conditions(lam)}",
            f"domain_size       {report.domain_size}",
        ]
        _emit(payload, args.format, lines)
        return 0
    m = _oracle_monomial(lam, cartan, args.max_degree)
    f = form_monomials(m, m, cartan)
    verdict = classify_form(f, SOURCE_ORACLE)
    payload = {
        "command": "analyze",
        "type": args.type,
        "lambda": list(lam.coords),
        "degree": m.degree,
        "form": _ratfunc_json(f),
        "verdict": verdict.to_dict(),
    }
    lines = [
        f"type           {args.type}",
        f"lambda         {','.join(map(str, lam.coords))}",
        f"degree         {m.degree}",
        f"verdict        {verdict.kind.value}",
        f"constant_term  {verdict.constant_term}",
        f"form           {f}",
    ]
    _emit(payload, args.format, lines)
    return 0


def _sweep_row(coords: tuple[int, ...]) -> dict:
    count = a5.count_defect_zeros(coords)
    tight = count == 1
    conditions = a5.tight_conditions(coords)
    return {
        "lambda": list(coords),
        "zero_count": count,
        "tight": tight,
        "tight_conditions": conditions,
        "agree": tight == conditions,
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    cartan = CartanSpec.type_a(5)
    bounds = _parse_weight(args.lam, cartan).coords
    lams = list(itertools.product(*(range(b + 1) for b in bounds)))
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_sweep_row, lams)
    else:
        rows = [_sweep_row(lam) for lam in lams]
    all_agree = all(row["agree"] for row in rows)
    payload = {"command": "sweep", "bounds": list(bounds), "rows": rows, "all_agree": all_agree}
    lines = ["lambda      zeros  tight  conditions  agree"]
    for row in rows:
        lines.append(
            "{:<11} {:<6} {:<6} {:<11} {}".format(
                ",".join(map(str, row["lambda"])),
                row["zero_count"],
                str(row["tight"]).lower(),
                str(row["tight_conditions"]).lower(),
                str(row["agree"]).lower(),
            )
        )
    lines.append(f"rows {len(rows)}  all_agree {str(all_agree).lower()}")
    _emit(payload, args.format, lines)
    if not all_agree:
        print("sweep: tightness conditions disagree with zero counts", file=sys.stderr)
        return 2
    return 0


def cmd_crosscheck(args: argparse.Namespace) -> int:
    cartan = CartanSpec.type_a(5)
    rows = []
    all_equal = True
    for text in args.lam:
        lam = _parse_weight(text, cartan)
        m = _oracle_monomial(lam, cartan, args.max_degree)
        ev = eval_at_vinv0(form_monomials(m, m, cartan))
        closed = a5.count_defect_zeros(lam)
        oracle = int(ev.value) if ev.regular and ev.value.denominator == 1 else None
        equal = ev.regular and oracle == closed
        all_equal = all_equal and equal
        rows.append(
            {
                "lambda": list(lam.coords),
                "degree": m.degree,
                "regular": ev.regular,
                "oracle_constant": oracle,
                "closed_count": closed,
                "equal": equal,
            }
        )
    payload = {"command": "crosscheck", "rows": rows, "all_equal": all_equal}
    lines = ["lambda      degree  oracle  closed  equal"]
    for row in rows:
        lines.append(
            "{:<11} {:<7} {:<7} {:<7} {}".format(
                ",".join(map(str, row["lambda"])),
                row["degree"],
                str(row["oracle_constant"]),
                row["closed_count"],
                str(row["equal"]).lower(),
            )
        )
    lines.append(f"rows {len(rows)}  all_equal {str(all_equal).lower()}")
    _emit(payload, args.format, lines)
    if not all_equal:
        print("crosscheck: oracle and closed form disagree", file=sys.stderr)
        return 2
    return 0


def cmd_verma(args: argparse.Namespace) -> int:
    cartan = CartanSpec.from_name(args.type)
    lam = _parse_weight(args.lam, cartan)
    word1 = ReducedWord.parse(args.word)
    word2 = ReducedWord.parse(args.word2)
    for word in (word1, word2):
        if not validate_w0_word(word, cartan):
            raise InvalidWord(
                f"{','.join(map(str, word.letters))} is not a reduced word for w0 in {cartan.kind}"
            )
    m1 = xlambda(word1, lam, cartan)
    m2 = xlambda(word2, lam, cartan)
    equal = equal_by_pairing(m1, m2, cartan, max_words=args.max_words)
    payload = {
        "command": "verma",
        "type": args.type,
        "lambda": list(lam.coords),
        "word": list(word1.letters),
        "word2": list(word2.letters),
        "equal": equal,
    }
    lines = [f"equal  {str(equal).lower()}"]
    _emit(payload, args.format, lines)
    if not equal:
        print("verma: the two words give different monomials", file=sys.stderr)
        return 2
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="tightmono", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p: _Parser) -> None:
        p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("analyze", help="classify the monomial of one dominant weight")
    p.add_argument("--type", choices=TYPES, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="A1,A2,...")
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="closed-form sweep over a box of A5 weights")
    p.add_argument(
        "--lambda", dest="lam", required=True, metavar="B1,B2,...",
        help="inclusive per-coordinate upper bounds of the box",
    )
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("crosscheck", help="oracle vs closed form on A5 weights")
    p.add_argument(
        "--lambda", dest="lam", action="append", required=True, metavar="A1,A2,...",
        help="may be given multiple times",
    )
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)
    add_common(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("verma", help="test equality of the monomial along two w0 words")
    p.add_argument("--type", choices=TYPES, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="A1,A2,...")
    p.add_argument("--word", required=True, metavar="I1,I2,...")
    p.add_argument("--word2", required=True, metavar="I1,I2,...")
    p.add_argument("--max-words", type=int, default=DEFAULT_WORD_CAP)
    add_common(p)
    p.set_defaults(func=cmd_verma)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NonDominantWeight, InvalidWord, DegreeCapExceeded, WeightTooLarge) as exc:
        print(f"tightmono: {exc}", file=sys.stderr)
        return 1
    except a5.TightConditionsMismatch as exc:
        print(f"tightmono: internal disagreement: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
