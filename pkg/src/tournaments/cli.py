"""Command-line front end.

Exit codes: 0 success, 1 infeasible / not a member / disconnected,
2 usage or format error, 3 oracle order out of range, 4 move violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .connectivity import find_path
from .construct import InfeasibleError, build, build_hankel, build_skew_hankel, format_chain
from .core import (
    BinaryMatrix,
    TournamentClass,
    format_matrix,
    format_scores,
    is_member,
    member_classes,
    parse_matrix,
    parse_scores,
    score_vector,
)
from .feasibility import exists
from .oracle import OracleRangeError, census, enumerate_class, switch_graph
from .switches import MoveError, parse_moves, replay

OK, INFEASIBLE, USAGE, RANGE, MOVE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep argparse from exiting the interpreter
        raise UsageError(f"{self.prog}: {message}")


def _class(text: str) -> TournamentClass:
    try:
        return TournamentClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tournaments", description="Tournaments with prescribed score vectors.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def with_class(sp, required=True):
        sp.add_argument("--class", dest="cls", type=_class, required=required,
                        help="plain, loopy, hankel, skewhankel, hankelloopy, skewhankelloopy, "
                             "skewhankeldoublyloopy")

    sp = sub.add_parser("check", help="decide whether a score vector is realizable")
    with_class(sp)
    sp.add_argument("scores", nargs="*", type=int)
    sp.add_argument("--file", help="read the score vector from a file")

    sp = sub.add_parser("build", help="construct a realization")
    with_class(sp)
    sp.add_argument("scores", nargs="*", type=int)
    sp.add_argument("--file", help="read the score vector from a file")
    sp.add_argument("--trace", action="store_true", help="print the reduction chain to stderr")

    sp = sub.add_parser("verify", help="report class memberships and the score vector")
    with_class(sp, required=False)
    sp.add_argument("--file", help="read the matrix from a file instead of stdin")

    sp = sub.add_parser("apply", help="replay moves with per-step validation")
    with_class(sp)
    sp.add_argument("--moves", required=True, help="file with one move per line")
    sp.add_argument("--file", help="read the matrix from a file instead of stdin")

    sp = sub.add_parser("path", help="switch path between two matrices")
    with_class(sp)
    sp.add_argument("t1")
    sp.add_argument("t2")

    sp = sub.add_parser("enum", help="stream all class members (oracle)")
    with_class(sp)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--score", nargs="+", type=int)

    sp = sub.add_parser("census", help="count members per score vector (oracle)")
    with_class(sp)
    sp.add_argument("-n", type=int, required=True)

    sp = sub.add_parser("connect", help="switch-graph connectivity and diameter (oracle)")
    with_class(sp)
    sp.add_argument("--score", nargs="+", type=int)
    sp.add_argument("--file", help="read the score vector from a file")
    return p


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _scores(args, positional: Sequence[int] | None) -> tuple[int, ...]:
    if args.file:
        if positional:
            raise UsageError("give the score vector either as arguments or with --file")
        return parse_scores(_read(args.file))
    if not positional:
        raise UsageError("missing score vector")
    return tuple(positional)


def _matrix(args, stdin: TextIO) -> BinaryMatrix:
    text = _read(args.file) if args.file else stdin.read()
    return parse_matrix(text)


def _cmd_check(args, out, err, stdin) -> int:
    rep = exists(_scores(args, args.scores), args.cls)
    out.write(rep.summary() + "\n")
    return OK if rep.feasible else INFEASIBLE


def _cmd_build(args, out, err, stdin) -> int:
    r = _scores(args, args.scores)
    if args.cls.is_reduction_only:
        raise UsageError(f"{args.cls.value} has no constructor")
    trace: list = []
    try:
        if args.cls is TournamentClass.HANKEL:
            m = build_hankel(r, trace)
        elif args.cls is TournamentClass.SKEW_HANKEL:
            m = build_skew_hankel(r, trace)
        else:
            m = build(r, args.cls)
    except InfeasibleError as exc:
        err.write(f"infeasible: {exc}\n")
        return INFEASIBLE
    if args.trace and trace:
        err.write(format_chain(r, trace) + "\n")
    out.write(format_matrix(m))
    return OK


def _cmd_verify(args, out, err, stdin) -> int:
    m = _matrix(args, stdin)
    classes = member_classes(m)
    out.write("classes: " + (" ".join(c.value for c in classes) or "none") + "\n")
    out.write("score: " + format_scores(score_vector(m)) + "\n")
    if args.cls is not None and not is_member(m, args.cls):
        return INFEASIBLE
    return OK


def _cmd_apply(args, out, err, stdin) -> int:
    moves = parse_moves(_read(args.moves))
    cur = _matrix(args, stdin)
    if not is_member(cur, args.cls):
        raise UsageError(f"input matrix is not a {args.cls.value} tournament")
    try:
        for cur in replay(cur, moves, args.cls):
            pass
    except MoveError as exc:
        err.write(f"move violation at {exc}\n")
        return MOVE
    out.write(format_matrix(cur))
    return OK


def _cmd_path(args, out, err, stdin) -> int:
    t1 = parse_matrix(_read(args.t1))
    t2 = parse_matrix(_read(args.t2))
    path = find_path(t1, t2, args.cls)
    out.write(path.to_text())
    return OK


def _cmd_enum(args, out, err, stdin) -> int:
    for m in enumerate_class(args.n, args.cls, args.score):
        out.write(format_matrix(m))
    return OK


def _cmd_census(args, out, err, stdin) -> int:
    out.write(census(args.n, args.cls).to_text())
    return OK


def _cmd_connect(args, out, err, stdin) -> int:
    rep = switch_graph(_scores(args, args.score), args.cls)
    out.write(rep.summary() + "\n")
    return OK if rep.connected else INFEASIBLE


_COMMANDS = {
    "check": _cmd_check,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "apply": _cmd_apply,
    "path": _cmd_path,
    "enum": _cmd_enum,
    "census": _cmd_census,
    "connect": _cmd_connect,
}


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
        return _COMMANDS[args.cmd](args, out, err, stdin)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return USAGE
    except OracleRangeError as exc:
        err.write(f"out of range: {exc}\n")
        return RANGE
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
