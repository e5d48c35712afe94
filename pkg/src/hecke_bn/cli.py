"""
Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 rank outside
the supported range.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .cells import cell_module, cell_partition
from .kl import get_table
from .laurent import ASYMPTOTIC, parse_order
from .linalg import mat_str
from .signed_perm import MAX_RANK, from_word, generator_labels, word_string
from .specht import g_matrix, specht_matrices
from .tableaux import Bipartition, rs, type_of
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RANK = 0, 1, 2, 3
VERIFY_MAX = 3


class UsageError(Exception):
    pass


class RankError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke-bn", description="Kazhdan-Lusztig cells and Specht modules in type B_n")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True):
        sp.add_argument("--n", type=int, required=True, help="rank")
        if order:
            sp.add_argument("--order", default="asymptotic",
                            help="asymptotic | revlex | weighted:x,y (default asymptotic)")
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.add_argument("--force", action="store_true", help=f"allow ranks above {MAX_RANK}")
        sp.add_argument("--cache", metavar="PATH", help="directory for persisted KL tables")

    sp = sub.add_parser("cells", help="cell partition")
    common(sp)
    sp.add_argument("--side", choices=("left", "right", "two"), default="left")

    sp = sub.add_parser("cellmod", help="generator matrices of a left cell module")
    common(sp)
    sp.add_argument("--cell-of", required=True, metavar="WORD", help='e.g. "s2 t"')
    sp.add_argument("--basis", metavar="W1,W2,...", help="comma-separated basis order")

    sp = sub.add_parser("specht", help="G_lambda or Specht module matrices (asymptotic order)")
    common(sp, order=False)
    sp.add_argument("--lambda", dest="lam", required=True, metavar="L", help='bipartition, e.g. "1|2"')
    sp.add_argument("--emit", choices=("g", "matrices"), default="g")

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp, order=False)
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    sp.add_argument("--deep", action="store_true", help="allow n = 4")

    sp = sub.add_parser("rs", help="Robinson-Schensted bitableaux of an element")
    common(sp, order=False)
    sp.add_argument("--word", required=True, metavar="WORD")
    return p


def _check_rank(args) -> None:
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.n > MAX_RANK and not args.force:
        raise RankError(f"rank {args.n} exceeds the supported bound {MAX_RANK} (use --force)")


def _word(text: str, n: int):
    try:
        return from_word(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _fmt_matrix(m) -> list[str]:
    rows = mat_str(m)
    width = max((len(x) for r in rows for x in r), default=1)
    return ["  [ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows]


def cmd_cells(args) -> int:
    order = parse_order(args.order)
    table = get_table(args.n, order, cache_dir=args.cache)
    part = cell_partition(args.n, order, args.side, table)
    cells = []
    for c in part.cells:
        typ = str(type_of(c[0])) if order == ASYMPTOTIC and args.side == "left" else None
        if order == ASYMPTOTIC and args.side != "left":
            # right cells carry the P-shape, two-sided cells a common shape
            typ = str(rs(c[0])[0].shape)
        cells.append({"type": typ, "elements": [word_string(w) for w in c]})
    payload = {"n": args.n, "order": order.descriptor(), "side": args.side, "cells": cells}
    lines = [f"{len(cells)} {args.side} cells of W_{args.n} ({order.descriptor()})"]
    for k, c in enumerate(cells, 1):
        head = f"{k:3d}" + (f" [{c['type']}]" if c["type"] else "")
        lines.append(f"{head} {{{', '.join(c['elements'])}}}")
    _emit(args, payload, lines)
    return EXIT_OK


def _matrices_payload(mats: dict, n: int) -> dict[str, list[list[str]]]:
    labels = generator_labels(n)
    return {labels[i]: mat_str(m) for i, m in sorted(mats.items())}


def _matrices_text(mats: dict, n: int) -> list[str]:
    lines = []
    for label, m in _matrices_payload(mats, n).items():
        lines.append(f"T_{label} ->")
        lines += _fmt_matrix([[x for x in row] for row in m])
    return lines


def cmd_cellmod(args) -> int:
    order = parse_order(args.order)
    n = args.n
    table = get_table(n, order, cache_dir=args.cache)
    w = _word(args.cell_of, n)
    cell = cell_partition(n, order, "left", table).cell_of(w)
    basis = None
    if args.basis:
        basis = [_word(x.strip().strip('"'), n) for x in args.basis.split(",")]
    try:
        mod = cell_module(cell, table, basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "n": n, "order": order.descriptor(),
        "basis": [word_string(b) for b in mod.basis],
        "matrices": _matrices_payload(mod.matrices, n),
    }
    lines = [f"basis: {', '.join(payload['basis'])}"] + _matrices_text(mod.matrices, n)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_specht(args) -> int:
    n = args.n
    try:
        lam = Bipartition.parse(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lam.n != n:
        raise UsageError(f"{lam} is not a bipartition of {n}")
    table = get_table(n, ASYMPTOTIC, cache_dir=args.cache)
    g = g_matrix(lam, table)
    payload: dict = {"n": n, "lambda": str(lam), "tableaux": [str(t) for t in g.tableaux]}
    lines = [f"lambda = {lam}; standard bitableaux in order:"]
    lines += [f"  {k + 1}: {t}" for k, t in enumerate(g.tableaux)]
    if args.emit == "g":
        payload["g"] = mat_str(g.entries)
        lines += ["G_lambda ="] + _fmt_matrix(g.entries)
    else:
        mats = specht_matrices(lam, table)
        payload["matrices"] = _matrices_payload(mats, n)
        lines += _matrices_text(mats, n)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    limit = 4 if args.deep else VERIFY_MAX
    if args.n > limit:
        raise RankError(f"verify supports n <= {limit}" + ("" if args.deep else " (use --deep for n = 4)"))
    reports = run_suite(args.suite, args.n, cache_dir=args.cache)
    ok = all(r.ok for r in reports)
    payload = {
        "n": args.n, "suite": args.suite, "pass": ok,
        "reports": [
            {"suite": r.suite, "n": r.n, "pass": r.ok,
             "checks": [{"name": c.name, "pass": c.ok, "detail": c.detail} for c in r.checks]}
            for r in reports
        ],
    }
    lines = []
    for r in reports:
        if args.verbose:
            lines += r.lines()
        else:
            bad = r.first_failure()
            lines.append(r.lines()[-1])
            if bad is not None:
                lines.append(f"  first failure: {bad.name}" + (f" ({bad.detail})" if bad.detail else ""))
            elif r.suite == "counterexample":
                det_check = next(c for c in r.checks if c.name.startswith("det of intertwiner is not"))
                lines.append(f"  det(P) is not a unit of A ({det_check.detail})")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rs(args) -> int:
    w = _word(args.word, args.n)
    P, Q = rs(w)
    payload = {
        "n": args.n, "word": word_string(w), "window": str(w),
        "P": [list(map(list, P.first)), list(map(list, P.second))],
        "Q": [list(map(list, Q.first)), list(map(list, Q.second))],
        "shape": str(Q.shape),
    }
    lines = [f"w = {word_string(w)} = {w}", f"P = {P}", f"Q = {Q}", f"shape = {Q.shape}"]
    _emit(args, payload, lines)
    return EXIT_OK


COMMANDS = {"cells": cmd_cells, "cellmod": cmd_cellmod, "specht": cmd_specht,
            "verify": cmd_verify, "rs": cmd_rs}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _check_rank(args)
        if getattr(args, "order", None) is not None:
            try:
                parse_order(args.order)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK


if __name__ == "__main__":
    sys.exit(main())
