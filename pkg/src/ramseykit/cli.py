"""``rw`` command line: verify, construct, derive and tabulate Ramsey bounds.

Exit codes: 0 success / valid, 1 usage or parse error, 2 semantic failure
(invalid witness, inconsistent bounds, DC contradiction).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import capacity, construct, engine
from .coloring import verify_witness
from .fileio import (
    ParseError,
    export_witness,
    load_kb,
    parse_partition_file,
    parse_witness_file,
    read_text,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _kb_from(args) -> engine.KnowledgeBase:
    assumptions = set()
    if getattr(args, "assume_dc", False):
        assumptions.add(engine.DC)
    if getattr(args, "strict_dc", False):
        assumptions |= {engine.DC, engine.DC_STRICT}
    return load_kb([read_text(p) for p in args.facts], assumptions)


def _rules(args) -> Optional[list[str]]:
    if not getattr(args, "rules", None):
        return None
    names = [r.strip() for r in args.rules.split(",") if r.strip()]
    bad = [r for r in names if r not in engine.RULES]
    if bad:
        raise UsageError(f"unknown rules {bad}; choose from {','.join(engine.RULES)}")
    return names


def _close(kb: engine.KnowledgeBase, args, targets=()) -> engine.ClosureStats:
    return engine.derive_closure(
        kb, _rules(args), max_r=args.max_r, max_k=args.max_k, targets=targets, es_even=args.es_even
    )


def _bound_line(kb: engine.KnowledgeBase, p) -> str:
    lo, up = engine.best_bounds(kb, p)
    cell = lambda x: "?" if x is None else str(x)  # noqa: E731
    return f"{engine.fmt_params(p)}  lower={cell(lo)}  upper={cell(up)}"


def render_table_r3(kb: engine.KnowledgeBase, r_max: int) -> str:
    """Fixed-width (r, lower, upper) rows for R_r(3), r = 2..r_max."""
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    rows = [("r", "lower", "upper")]
    for r in range(2, r_max + 1):
        lo, up = engine.best_bounds(kb, (3,) * r)
        rows.append((str(r), "?" if lo is None else str(lo), "?" if up is None else str(up)))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    return "".join(" ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n" for row in rows)


# --- subcommands -------------------------------------------------------------


def cmd_verify(args) -> int:
    c = parse_witness_file(read_text(args.witness))
    report = verify_witness(c, args.params)
    print(report)
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_builtin(args) -> int:
    _write(export_witness(construct.builtin_witness(args.name)), args.output)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "schur":
        if len(args.inputs) != 1:
            raise UsageError("construct schur takes exactly one partition file")
        p = parse_partition_file(read_text(args.inputs[0]))
        report = construct.validate_partition(p)
        if not report.valid:
            x, y, z, part = report.violation
            print(f"partition is not sum-free: {x} + {y} = {z} in part {part}", file=sys.stderr)
            return EXIT_FAIL
        c = construct.schur_coloring(p)
    else:
        if len(args.inputs) != 2:
            raise UsageError(f"construct {args.kind} takes two witness files")
        c1, c2 = (parse_witness_file(read_text(p)) for p in args.inputs)
        c = construct.abbott_product(c1, c2) if args.kind == "abbott" else construct.diagonal_product(c1, c2)
    _write(export_witness(c), args.output)
    return EXIT_OK


def cmd_derive(args) -> int:
    kb = _kb_from(args)
    targets = [engine.canonicalize(args.target)] if args.target else []
    stats = _close(kb, args, targets)
    if targets:
        print(_bound_line(kb, targets[0]))
    else:
        for p in sorted(kb.facts, key=lambda p: (len(p), p)):
            print(_bound_line(kb, p))
    print(
        f"# passes={stats.passes} updates={stats.updates} params={stats.universe} "
        f"out_of_budget={stats.out_of_budget}"
    )
    if kb.inconsistent:
        p, lo, up = kb.inconsistent
        print(f"inconsistent: {engine.fmt_params(p)} lower {lo} > upper {up}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_explain(args) -> int:
    kb = _kb_from(args)
    target = engine.canonicalize(args.target)
    _close(kb, args, [target])
    try:
        print(engine.explain(kb, target, args.kind))
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_table(args) -> int:
    kb = _kb_from(args)
    if args.derive:
        _close(kb, args)
    sys.stdout.write(render_table_r3(kb, args.max_r))
    return EXIT_OK


def _read_pairs(path: str) -> list[tuple[list[int], list[int]]]:
    pairs = []
    for lineno, raw in enumerate(read_text(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        left, sep, right = line.partition("|")
        if not sep:
            raise ParseError("expected 'k1,k2,... | k1,k2,...'", lineno)
        try:
            pairs.append((_int_list(left), _int_list(right)))
        except argparse.ArgumentTypeError as exc:
            raise ParseError(str(exc), lineno) from None
    return pairs


def cmd_check_dc(args) -> int:
    kb = _kb_from(args)
    pairs = _read_pairs(args.pairs) if args.pairs else None
    statuses = engine.check_dc(kb, pairs, max_r=args.max_r, max_k=args.max_k)
    cell = lambda x: "?" if x is None else str(x)  # noqa: E731
    for s in statuses:
        print(
            f"{engine.fmt_params(s.moved)} LB={cell(s.lower_moved)}  vs  "
            f"{engine.fmt_params(s.original)} LB={cell(s.lower_original)} UB={cell(s.upper_original)}  "
            f"{s.status}"
        )
    bad = sum(s.status == "contradiction" for s in statuses)
    print(f"# pairs={len(statuses)} contradictions={bad}")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_ratios(args) -> int:
    kb = _kb_from(args)
    if args.derive:
        _close(kb, args)
    print(engine.ratio_report(kb, args.k, args.max_r).format())
    return EXIT_OK


def cmd_capacity(args) -> int:
    g = capacity.parse_graph_literal(args.graph)
    probe = capacity.capacity_lower(g, args.power, vertex_budget=args.vertex_budget)
    for r, a in enumerate(probe.alphas, start=1):
        print(f"r={r} alpha={a} root={a ** (1.0 / r):.4f}")
    print(f"best {probe.value:.4f} at r={probe.power}")
    return EXIT_OK


def _closure_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--assume-dc", action="store_true", help="enable R-dc under the DC assumption")
    p.add_argument("--strict-dc", action="store_true", help="assume the strict form of DC")
    p.add_argument("--rules", help="comma-separated rule names (default: all)")
    p.add_argument("--es-even", action="store_true", help="two-color R-ES strengthening when both terms are even")


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-r", type=int, default=10)
    p.add_argument("--max-k", type=int, default=17)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check a witness coloring")
    p.add_argument("witness")
    p.add_argument("--params", type=_int_list, required=True, help="k1,k2,... in color order")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("builtin", help="export a classical witness")
    p.add_argument("name", choices=construct.BUILTIN_NAMES)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("construct", help="build product or Schur colorings")
    p.add_argument("kind", choices=("abbott", "diag", "schur"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("derive", help="close facts under the inference rules")
    p.add_argument("--facts", nargs="+", required=True)
    _closure_flags(p)
    _budget_flags(p)
    p.add_argument("--target", type=_int_list)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("explain", help="show the derivation of one bound")
    p.add_argument("--facts", nargs="+", required=True)
    p.add_argument("--target", type=_int_list, required=True)
    p.add_argument("--kind", choices=("lower", "upper"), required=True)
    _closure_flags(p)
    _budget_flags(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("table", help="render the R_r(3) bounds table")
    p.add_argument("which", choices=("r3",))
    p.add_argument("--facts", nargs="+", required=True)
    p.add_argument("--derive", action="store_true", help="close the facts first")
    _closure_flags(p)
    _budget_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check-dc", help="classify DC-adjacent pairs")
    p.add_argument("--facts", nargs="+", required=True)
    p.add_argument("--pairs", help="file of 'k1,k2,... | k1,k2,...' lines (moved | original)")
    _budget_flags(p)
    p.set_defaults(func=cmd_check_dc)

    p = sub.add_parser("ratios", help="(R_r(k) - 1)^(1/r) proxies")
    p.add_argument("--facts", nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--derive", action="store_true", help="close the facts first")
    _closure_flags(p)
    _budget_flags(p)
    p.set_defaults(func=cmd_ratios)

    p = sub.add_parser("capacity", help="independence numbers of strong powers")
    p.add_argument("--graph", required=True, help="cyclic:<m>:<d1,d2,...> or complete:<n>")
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--vertex-budget", type=int, default=capacity.DEFAULT_VERTEX_BUDGET)
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValueError, KeyError, OSError) as exc:
        print(f"rw: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
