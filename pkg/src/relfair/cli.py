"""Command-line front end.

Exit codes: 0 pass, 1 violation (or a failed cross-check), 2 input
error, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional

from ._rat import Rat, as_rat, fmt_rat
from .axioms import RELATIVE_FAIR_AXIOMS, AxiomId, INCONCLUSIVE, VIOLATION
from .errors import RelfairError
from .jsonio import (
    dumps,
    dumps_line,
    load_json,
    point_from_json,
    problem_from_json,
    problem_to_json,
    rule_from_json,
    rule_to_json,
    value_to_json,
    verdict_to_json,
)
from .polyhedra import vertices

EXIT_PASS, EXIT_VIOLATION, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    seed: int = 0
    budget: int = 10_000
    h: Rat = Rat(1, 16)
    tol: Rat = Rat(1, 2**30)
    out: Optional[str] = None
    format: str = "text"


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_value(v) -> str:
    enc = value_to_json(v)
    if isinstance(enc, dict):
        return enc["real"]
    if isinstance(enc, list):
        return "(" + ", ".join(_fmt_value(c) for c in v) + ")"
    return str(enc)


def _fmt_point(p) -> str:
    return "(" + ",".join(fmt_rat(c) for c in p) + ")"


def _load_problem(path):
    return problem_from_json(load_json(path))


def _load_rule(path):
    return rule_from_json(load_json(path))


def _exit_for(statuses) -> int:
    if VIOLATION in statuses:
        return EXIT_VIOLATION
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


# -- commands ---------------------------------------------------------------


def cmd_solve(cfg: RunConfig) -> int:
    from .rules import solve

    X, rule = _load_problem(cfg.inputs[0]), _load_rule(cfg.inputs[1])
    cs = solve(rule, X)
    pieces = [vertices(P) for P in cs.pieces] if cs.pieces is not None else None
    if cfg.format == "json":
        _emit(cfg, dumps({
            "rule": rule_to_json(rule),
            "problem": problem_to_json(X),
            "value": value_to_json(cs.value),
            "witnesses": value_to_json(cs.witnesses),
            "mode": cs.mode,
            "complete": cs.complete,
            "pieces": None if pieces is None else [value_to_json(v) for v in pieces],
        }))
        return EXIT_PASS
    lines = [
        f"rule: {rule.label}",
        f"problem: {X!r}",
        f"value: {_fmt_value(cs.value) if cs.value is not None else '-'}",
        "witnesses: [" + ", ".join(_fmt_point(w) for w in cs.witnesses) + "]",
        f"mode: {cs.mode}" + (" (complete)" if cs.complete else ""),
    ]
    if pieces is not None:
        for k, vs in enumerate(pieces):
            lines.append(f"piece {k}: hull of " + ", ".join(_fmt_point(v) for v in vs))
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_PASS


def _parse_axioms(names):
    if not names:
        return list(RELATIVE_FAIR_AXIOMS)
    out = []
    for name in names:
        try:
            out.append(AxiomId(name))
        except ValueError:
            known = ", ".join(a.value for a in AxiomId)
            raise RelfairError(f"unknown axiom {name!r} (known: {known})") from None
    return out


def cmd_axioms(cfg: RunConfig) -> int:
    from .search import search_violation

    rule = _load_rule(cfg.inputs[0])
    axioms = _parse_axioms(cfg.inputs[1:])
    verdicts = [search_violation(rule, a, cfg.budget, cfg.seed) for a in axioms]
    if cfg.format == "json":
        _emit(cfg, dumps([verdict_to_json(rule, v) for v in verdicts]))
    else:
        lines = []
        for v in verdicts:
            lines.append(f"{v.axiom}: {v.status.upper()}  {v.note}")
            if v.violated:
                lines.append("  witness: " + dumps_line(verdict_to_json(rule, v)["witness"]))
        _emit(cfg, "\n".join(lines) + "\n")
    return _exit_for([v.status for v in verdicts])


def matrix_matches(cells) -> bool:
    """Each example rule violates exactly its designated axiom and nothing else."""
    from .search import EXPECTED_FAILURES

    for c in cells:
        expected = EXPECTED_FAILURES[c.rule.kind].value == c.axiom
        if expected != c.verdict.violated:
            return False
    return True


def cmd_matrix(cfg: RunConfig) -> int:
    from .search import axiom_matrix

    cells = axiom_matrix(budget=cfg.budget, seed=cfg.seed)
    ok = matrix_matches(cells)
    if cfg.format == "json":
        _emit(cfg, dumps({
            "seed": cfg.seed,
            "budget": cfg.budget,
            "matches_expected": ok,
            "cells": [verdict_to_json(c.rule, c.verdict) for c in cells],
        }))
    else:
        axioms = list(dict.fromkeys(c.axiom for c in cells))
        rules = list(dict.fromkeys(c.rule.label for c in cells))
        grid = {(c.rule.label, c.axiom): c.verdict.status for c in cells}
        width = max(len(r) for r in rules)
        lines = [" " * width + "  " + "  ".join(a for a in axioms)]
        for r in rules:
            cols = [grid[(r, a)].upper()[:4].ljust(len(a)) for a in axioms]
            lines.append(r.ljust(width) + "  " + "  ".join(cols))
        lines.append("matches expected assignment: " + ("yes" if ok else "no"))
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_PASS if ok else EXIT_VIOLATION


def cmd_oracle(cfg: RunConfig) -> int:
    from .oracle import GridSpec, compare_oracle

    X, rule = _load_problem(cfg.inputs[0]), _load_rule(cfg.inputs[1])
    rep = compare_oracle(rule, X, GridSpec(cfg.h))
    if cfg.format == "json":
        _emit(cfg, dumps({
            "rule": rule_to_json(rule),
            "problem": problem_to_json(X),
            "h": fmt_rat(cfg.h),
            "exact_value": value_to_json(rep.exact_value),
            "oracle_value": value_to_json(rep.oracle_value),
            "gap": value_to_json(rep.gap),
            "lipschitz_bound": fmt_rat(rep.bound),
            "within_bound": rep.within_bound,
            "argmax_count": rep.argmax_count,
            "argmax_chosen": rep.argmax_chosen,
            "not_chosen": value_to_json(rep.not_chosen),
        }))
    else:
        _emit(cfg, "\n".join([
            f"exact value:  {_fmt_value(rep.exact_value)}",
            f"oracle value: {_fmt_value(rep.oracle_value)}  (h={fmt_rat(cfg.h)})",
            f"gap: {_fmt_value(rep.gap)}  bound L*h: {fmt_rat(rep.bound)}",
            f"argmax points: {rep.argmax_count}, all chosen: {'yes' if rep.argmax_chosen else 'no'}",
        ]) + "\n")
    return EXIT_PASS if rep.ok else EXIT_VIOLATION


def _parse_point(text: str):
    return point_from_json([c.strip() for c in text.split(",")])


def cmd_eqeq(cfg: RunConfig) -> int:
    from .revealed import equal_equivalent

    rule = _load_rule(cfg.inputs[0])
    if len(cfg.inputs) < 2:
        raise RelfairError("eqeq needs at least one point, e.g. 2,4")
    rows = []
    for text in cfg.inputs[1:]:
        x = _parse_point(text)
        rows.append((x, equal_equivalent(rule, x, cfg.tol)))
    if cfg.format == "json":
        _emit(cfg, dumps({
            "rule": rule_to_json(rule),
            "tol": fmt_rat(cfg.tol),
            "results": [{"point": value_to_json(x), "equal_equivalent": fmt_rat(w)} for x, w in rows],
        }))
    else:
        _emit(cfg, "".join(f"{_fmt_point(x)} ~ {fmt_rat(w)} * 1  (tol {fmt_rat(cfg.tol)})\n" for x, w in rows))
    return EXIT_PASS


def cmd_plot(cfg: RunConfig) -> int:
    from .svg import render_svg

    X, rule = _load_problem(cfg.inputs[0]), _load_rule(cfg.inputs[1])
    _emit(cfg, render_svg(rule, X))
    return EXIT_PASS


COMMANDS = {
    "solve": (cmd_solve, ["problem", "rule"], "exact solution of a problem under a rule"),
    "axioms": (cmd_axioms, ["rule"], "search for axiom violations"),
    "matrix": (cmd_matrix, [], "independence matrix of the seven example rules"),
    "oracle": (cmd_oracle, ["problem", "rule"], "grid brute-force cross-check"),
    "eqeq": (cmd_eqeq, ["rule"], "equal-equivalent of points given as p1,p2,..."),
    "plot": (cmd_plot, ["problem", "rule"], "SVG picture of a two-person problem"),
}


def _rat_arg(text):
    try:
        v = as_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relfair", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, positional, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        for arg in positional:
            p.add_argument(arg, help=f"{arg} JSON file")
        if name == "axioms":
            p.add_argument("axioms", nargs="*", help="axiom names (default: the seven relative-fair axioms)")
        if name == "eqeq":
            p.add_argument("points", nargs="*", help="points such as 2,4 or 1/2,3")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=_positive_int, default=10_000)
        p.add_argument("--grid", type=_rat_arg, default=Rat(1, 16), help="oracle grid spacing h")
        p.add_argument("--tol", type=_rat_arg, default=Rat(1, 2**30), help="bisection tolerance")
        p.add_argument("--format", choices=("text", "json", "svg"), default="svg" if name == "plot" else "text")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def config_from_args(args) -> RunConfig:
    positional = COMMANDS[args.command][1]
    inputs = [getattr(args, k) for k in positional]
    inputs += list(getattr(args, "axioms", []) or []) + list(getattr(args, "points", []) or [])
    return RunConfig(args.command, inputs, args.seed, args.budget, args.grid, args.tol, args.out, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    cfg = config_from_args(args)
    if cfg.format == "svg" and cfg.command != "plot":
        print("error: --format svg is only available for plot", file=sys.stderr)
        return EXIT_INPUT
    if cfg.command == "plot" and cfg.format != "svg":
        print("error: plot only writes svg", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[cfg.command][0](cfg)
    except (RelfairError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
