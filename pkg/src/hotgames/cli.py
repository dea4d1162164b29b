"""Command-line front end.

    hotgames eval "±{9|3}"               value report for an expression
    hotgames thermo "{5|2}" --format svg  thermograph as text/json/svg
    hotgames board domineering FILE       value report for a board
    hotgames tables snortpaths --max-n 10 recompute a published table
    hotgames verify snakes                run a named verification suite
    hotgames scan graphs --max-n 6        class scans / conjecture scans

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import class_scan, minimal_confusion_k
from .budget import Deadline
from .domineering import DomBoard, dom_game, snake_enumerate
from .dyadic import Dyadic
from .errors import (
    CgtError,
    NodeBudgetError,
    ParseError,
    TimeBudgetError,
)
from .games import Game, GameStore
from .notation import format_game, parse_expr
from .render import thermograph_svg
from .snort import SnortBoard, graph_enumerate, snort_game
from .tables import TABLES, snort_path_board
from .thermal import ell, stops, temp_mean, temperature, thermograph
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    command: str
    format: str = "text"
    max_n: int | None = None
    max_nodes: int | None = None
    time_budget_s: float | None = None
    epsilon: str = "up"
    step: str = "1/2"

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("--max-nodes must be positive")
        if self.time_budget_s is not None and self.time_budget_s <= 0:
            raise ValueError("--time-budget-s must be positive")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hotgames", description=__doc__.split("\n")[0])
    p.add_argument("--max-nodes", type=int, default=None, help="store node budget")
    p.add_argument(
        "--time-budget-s", type=float, default=None, help="wall-clock budget (seconds)"
    )
    sub = p.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("text", "json"), default="text")

    pe = sub.add_parser("eval", help="evaluate a game expression")
    pe.add_argument("expr")
    pe.add_argument("--format", **fmt)

    pt = sub.add_parser("thermo", help="thermograph of an expression")
    pt.add_argument("expr")
    pt.add_argument("--format", choices=("text", "json", "svg"), default="text")

    pb = sub.add_parser("board", help="evaluate a ruleset board")
    pb.add_argument("ruleset", choices=("domineering", "snort"))
    pb.add_argument("path", nargs="?", help="board file (omit with --text)")
    pb.add_argument("--text", help="inline board text")
    pb.add_argument("--format", **fmt)

    pta = sub.add_parser("tables", help="recompute a published temperature table")
    pta.add_argument("which", choices=sorted(TABLES))
    pta.add_argument("--max-n", type=int, default=None)
    pta.add_argument("--format", **fmt)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=sorted(SUITES) + ["all"])
    pv.add_argument("--format", **fmt)

    ps = sub.add_parser("scan", help="confusion-interval class scans")
    ps.add_argument(
        "which", choices=("snakes", "snortpaths", "integers", "graphs")
    )
    ps.add_argument("--max-n", type=int, default=None)
    ps.add_argument("--epsilon", choices=("up", "star", "zero"), default="up")
    ps.add_argument("--step", default="1/2", help="grid step for witness searches")
    ps.add_argument("--format", **fmt)

    return p


def _emit(payload, fmt: str, text_renderer) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text_renderer())


def _eval_report(g: Game) -> dict:
    ls, rs = stops(g)
    t, m = temp_mean(g)
    return {
        "canonical": format_game(g),
        "outcome": g.outcome().value,
        "left_stop": str(ls),
        "right_stop": str(rs),
        "ell": str(ell(g)),
        "temperature": str(t),
        "mean": str(m),
    }


def _print_eval(report: dict) -> str:
    rows = [
        ("canonical", report["canonical"]),
        ("outcome", report["outcome"]),
        ("left stop", report["left_stop"]),
        ("right stop", report["right_stop"]),
        ("ell", report["ell"]),
        ("temperature", report["temperature"]),
        ("mean", report["mean"]),
    ]
    return "\n".join(f"{k:12} {v}" for k, v in rows)


def cmd_eval(args, store: GameStore) -> int:
    g = parse_expr(args.expr, store)
    report = {"expression": args.expr, **_eval_report(g)}
    _emit(report, args.format, lambda: _print_eval(report))
    return EXIT_OK


def cmd_thermo(args, store: GameStore) -> int:
    g = parse_expr(args.expr, store)
    th = thermograph(g)
    if args.format == "svg":
        print(thermograph_svg(th, title=args.expr))
        return EXIT_OK
    payload = {"expression": args.expr, **th.to_json_dict()}

    def text():
        lines = [f"temperature  {th.temperature}", f"mast         {th.mast}"]
        for name, wall in (("left wall", th.left_wall), ("right wall", th.right_wall)):
            pts = "  ".join(f"(t={t}, x={x})" for t, x in wall)
            lines.append(f"{name:12} {pts}")
        return "\n".join(lines)

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_board(args, store: GameStore) -> int:
    if (args.path is None) == (args.text is None):
        raise ParseError("provide exactly one of a board file or --text")
    raw = args.text if args.text is not None else open(args.path).read()
    if args.ruleset == "domineering":
        board = DomBoard.parse(raw)
        g = dom_game(board, store)
        shown = board.format()
    else:
        board = SnortBoard.parse(raw)
        g = snort_game(board, store)
        shown = board.format()
    report = {"board": shown, **_eval_report(g)}
    _emit(report, args.format, lambda: shown + "\n" + _print_eval(report))
    return EXIT_OK


def cmd_tables(args, store: GameStore, deadline: Deadline) -> int:
    builder, default_n = TABLES[args.which]
    table = builder(store, args.max_n or default_n, deadline)
    _emit(table.to_json_dict(), args.format, table.render_text)
    return EXIT_BUDGET if table.truncated else EXIT_OK


def cmd_verify(args, store: GameStore) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = [SUITES[name](store) for name in names]
    payload = [r.to_json_dict() for r in results]
    _emit(payload, args.format, lambda: "\n".join(r.render_text() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def _scan_positions(which: str, max_n: int | None, store: GameStore):
    if which == "snakes":
        n = max_n or 8
        return (
            f"domineering snakes fitting 2x{n}",
            [dom_game(b, store) for b in snake_enumerate(n)],
        )
    if which == "snortpaths":
        n = max_n or 8
        boards = []
        for family in ("P", "LP", "LPL", "LPR"):
            for i in range(1, n + 1):
                b = snort_path_board(family, i)
                if b is not None:
                    boards.append(b)
        return (f"snort decorated paths, n <= {n}", [snort_game(b, store) for b in boards])
    if which == "integers":
        return ("integers -3..3", [store.number(i) for i in range(-3, 4)])
    raise AssertionError(which)


def cmd_scan(args, store: GameStore) -> int:
    if args.which == "graphs":
        return _cmd_scan_graphs(args, store)
    label, games = _scan_positions(args.which, args.max_n, store)
    report = class_scan(games, label)
    eps = {"up": store.up, "star": store.star, "zero": store.zero}[args.epsilon]
    step = Dyadic.parse(args.step)
    witness_k = max(
        (minimal_confusion_k(g, step=step, eps=eps) for g in games),
        default=Dyadic(0),
    )
    payload = report.to_json_dict()
    payload["max_minimal_witness_k"] = str(witness_k)
    payload["witness_epsilon"] = args.epsilon
    payload["witness_step"] = str(step)
    _emit(
        payload,
        args.format,
        lambda: "\n".join(
            [
                f"class            {report.class_label}",
                f"positions        {report.positions_scanned}",
                f"max ell (K)      {report.max_ell}",
                f"max option ell J {report.max_ell_options}",
                f"bound K/2 + J    {report.bp_bound}",
                f"max temperature  {report.max_observed_temp}",
                f"witness K (max)  {witness_k}"
                f"  [step {step}, epsilon {args.epsilon}]",
            ]
        ),
    )
    return EXIT_OK


def _cmd_scan_graphs(args, store: GameStore) -> int:
    """Degree-conjecture scan: is t(G) <= max degree on every connected
    graph? Counterexamples are findings, not failures."""
    n = args.max_n or 6
    scanned = 0
    findings = []
    for board in graph_enumerate(n, cap=max(n, 6)):
        scanned += 1
        t = temperature(snort_game(board, store))
        if not t <= Dyadic(board.degree()):
            findings.append(
                {"board": board.format(), "temperature": str(t), "degree": board.degree()}
            )
    payload = {
        "scan": f"snort temperature vs board degree, connected graphs <= {n} vertices",
        "graphs_scanned": scanned,
        "counterexamples": findings,
    }

    def text():
        lines = [payload["scan"], f"graphs scanned   {scanned}"]
        if findings:
            lines.append(f"counterexamples  {len(findings)} (conjecture fails)")
            for f in findings:
                lines.append(f"  t={f['temperature']} > degree {f['degree']}:")
                lines.append("    " + f["board"].replace("\n", "; "))
        else:
            lines.append("counterexamples  none")
        return "\n".join(lines)

    _emit(payload, args.format, text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig(
            command=args.command,
            format=getattr(args, "format", "text"),
            max_n=getattr(args, "max_n", None),
            max_nodes=args.max_nodes,
            time_budget_s=args.time_budget_s,
            epsilon=getattr(args, "epsilon", "up"),
            step=getattr(args, "step", "1/2"),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    store = GameStore(max_nodes=config.max_nodes)
    deadline = Deadline(config.time_budget_s)
    try:
        if args.command == "eval":
            return cmd_eval(args, store)
        if args.command == "thermo":
            return cmd_thermo(args, store)
        if args.command == "board":
            return cmd_board(args, store)
        if args.command == "tables":
            return cmd_tables(args, store, deadline)
        if args.command == "verify":
            return cmd_verify(args, store)
        if args.command == "scan":
            return cmd_scan(args, store)
        raise AssertionError(args.command)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NodeBudgetError, TimeBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CgtError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> int:
    return main()
