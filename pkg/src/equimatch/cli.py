"""Batch command line over graph6 streams; every report is JSON lines on stdout.

Exit codes: 0 success, 1 a property check failed, 2 usage or input error.
The worker count comes from ``--workers`` or else ``EQUIMATCH_WORKERS``.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, TextIO

from . import graph6
from .canon import isomorphic
from .census import CapabilityError, classify_census, default_workers, iter_connected_regular, verify_characterization
from .classify import audit_isolation_remainders, classify_regular, is_equimatchable
from .decomposition import (
    DecompositionError,
    audit_decomposition,
    audit_graph,
    build_decomposition,
)
from .families import FamilySpec, build_family
from .graph import Graph, is_connected, iter_bits, regularity
from .independence import independence_number, iter_maximum_independent_sets
from .matching import is_factor_critical

OK, CHECK_FAILED, USAGE = 0, 1, 2


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so ``run`` can return the usage exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


def _open_input(path: str, stdin: TextIO):
    if path == "-":
        return nullcontext(stdin)
    return open(path, encoding="ascii", errors="replace")


def _graph_lines(path: str, stdin: TextIO) -> Iterator[tuple[int, str]]:
    with _open_input(path, stdin) as fh:
        for k, line in enumerate(graph6.read_lines(fh), start=1):
            yield k, line


def _first_graph(path: str, stdin: TextIO) -> Graph:
    for _, line in _graph_lines(path, stdin):
        return graph6.decode(line)
    raise graph6.Graph6Error(f"{path}: no graph found")


# -- check ---------------------------------------------------------------------


def check_record(line: str) -> dict:
    try:
        g = graph6.decode(line)
    except graph6.Graph6Error as exc:
        return {"g6": line, "error": str(exc)}
    alpha, _ = independence_number(g)
    return {
        "g6": line,
        "n": g.n,
        "regularity": regularity(g),
        "connected": is_connected(g),
        "equimatchable": is_equimatchable(g).equimatchable,
        "factor_critical": is_factor_critical(g),
        "alpha": alpha,
        "regular_class": str(classify_regular(g)),
    }


def _cmd_check(args, stdin, out) -> int:
    lines = [line for _, line in _graph_lines(args.file, stdin)]
    if args.workers > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            records = list(pool.map(check_record, lines))
    else:
        records = [check_record(line) for line in lines]
    for k, rec in enumerate(records, start=1):
        rec["line"] = k
        out.write(_dump(rec) + "\n")
    if records and all("error" in r for r in records):
        return USAGE
    return OK


# -- construct -----------------------------------------------------------------


def _cmd_construct(args, stdin, out) -> int:
    given = {k: getattr(args, k) for k in ("n", "a", "b", "r") if getattr(args, k) is not None}
    text = ",".join([args.family] + [f"{k}={v}" for k, v in given.items()])
    try:
        g = build_family(FamilySpec.parse(text))
    except ValueError as exc:
        out.write(_dump({"error": str(exc)}) + "\n")
        sys.stderr.write(f"construct: {exc}\n")
        return USAGE
    out.write(graph6.encode(g) + "\n")
    return OK


# -- census / verify -------------------------------------------------------------


def _cmd_census(args, stdin, out) -> int:
    try:
        if args.classify:
            for rec in classify_census(args.n, args.r, args.workers):
                out.write(_dump(rec.to_json()) + "\n")
        else:
            for g in iter_connected_regular(args.n, args.r):
                out.write(graph6.encode(g) + "\n")
    except ValueError as exc:
        out.write(_dump({"error": str(exc)}) + "\n")
        return USAGE
    return OK


def _cmd_verify(args, stdin, out) -> int:
    try:
        report = verify_characterization(args.r, args.nmax, args.workers)
    except ValueError as exc:
        out.write(_dump({"error": str(exc)}) + "\n")
        return USAGE
    out.write(_dump(report.to_json()) + "\n")
    return OK if report.match else CHECK_FAILED


# -- decompose -------------------------------------------------------------------


def _decompose_one(g: Graph, args, out, line: int) -> bool:
    """Write audit records for one graph; returns True when nothing failed."""
    base = {"line": line}
    if args.all_max_independent_sets:
        full = audit_graph(g, args.cap, args.matchings, args.samples, args.seed)
        for rep in full.reports:
            for text in rep.json_lines():
                rec = json.loads(text)
                rec.update(base)
                out.write(_dump(rec) + "\n")
        for (I, Ip, u), res in full.obstruction:
            out.write(_dump({
                **base,
                "check_id": "odd-clique-obstruction-pair",
                "I": I, "Iprime": Ip, "u": u,
                "clique": sorted(res.clique) if res.clique is not None else None,
                "hypotheses_hold": res.hypotheses_hold,
                "status": ("fail" if res.clique is not None else "pass") if res.hypotheses_hold
                else "skipped-hypothesis-unmet",
            }) + "\n")
        split = full.partition
        out.write(_dump({
            **base,
            "check_id": "apex-balanced-bipartition",
            "found": None if split.found is None
            else {"u": split.found[0], "X": sorted(split.found[1]), "Y": sorted(split.found[2])},
            "hypotheses_hold": split.hypotheses_hold,
        }) + "\n")
        return not full.failures and not full.obstruction_failures
    imask = next(iter_maximum_independent_sets(g))
    I = sorted(iter_bits(imask))
    d = build_decomposition(g, I, I[0])
    out.write(_dump({**base, "decomposition": d.summary()}) + "\n")
    rep = audit_decomposition(g, d, args.samples, args.seed)
    for text in rep.json_lines():
        rec = json.loads(text)
        rec.update(base)
        out.write(_dump(rec) + "\n")
    return rep.passed


def _cmd_decompose(args, stdin, out) -> int:
    failed = errors = total = 0
    for k, line in _graph_lines(args.file, stdin):
        total += 1
        try:
            g = graph6.decode(line)
            if not _decompose_one(g, args, out, k):
                failed += 1
        except DecompositionError as exc:
            errors += 1
            out.write(_dump({"line": k, "g6": line, "error": str(exc)}) + "\n")
        except graph6.Graph6Error as exc:
            errors += 1
            out.write(_dump({"line": k, "g6": line, "error": str(exc)}) + "\n")
    if total and errors == total:
        return USAGE
    return CHECK_FAILED if failed else OK


# -- remainder audit ---------------------------------------------------------------


def _cmd_audit_remainders(args, stdin, out) -> int:
    failed = errors = total = 0
    for k, line in _graph_lines(args.file, stdin):
        total += 1
        try:
            g = graph6.decode(line)
            rep = audit_isolation_remainders(g, args.cap)
        except ValueError as exc:
            errors += 1
            out.write(_dump({"line": k, "g6": line, "error": str(exc)}) + "\n")
            continue
        failed += not rep.passed
        out.write(_dump({
            "line": k,
            "g6": line,
            "passed": rep.passed,
            "matchings_checked": rep.matchings_checked,
            "empty_remainders": rep.empty_remainders,
            "truncated_vertices": rep.truncated_vertices,
            "counterexamples": [
                {"v": v, "matching": [list(e) for e in m], "shape": str(s)}
                for v, m, s in rep.counterexamples
            ],
        }) + "\n")
    if total and errors == total:
        return USAGE
    return CHECK_FAILED if failed else OK


# -- iso ---------------------------------------------------------------------------


def _cmd_iso(args, stdin, out) -> int:
    try:
        g = _first_graph(args.file_a, stdin)
        h = _first_graph(args.file_b, stdin)
    except (graph6.Graph6Error, OSError) as exc:
        out.write(_dump({"error": str(exc)}) + "\n")
        return USAGE
    same = isomorphic(g, h)
    out.write(_dump({"isomorphic": same}) + "\n")
    return OK if same else CHECK_FAILED


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equimatch", description="Equimatchable graph toolkit.")
    parser.add_argument("--workers", type=int, default=None, help="worker processes (default: EQUIMATCH_WORKERS or CPU count)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("check", help="classify each graph6 line")
    p.add_argument("file", help="graph6 file, or - for stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="emit a named graph as graph6")
    p.add_argument("--family", required=True)
    for name in ("n", "a", "b", "r"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("census", help="connected r-regular graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="compare the census against the known characterisation")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decompose", help="build and audit I/W/T decompositions")
    p.add_argument("file")
    p.add_argument("--all-max-independent-sets", action="store_true")
    p.add_argument("--cap", type=int, default=50)
    p.add_argument("--matchings", type=int, default=20)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser(
        "audit-remainders",
        aliases=["audit-thm11"],
        help="check remainders of minimal isolating matchings",
    )
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=200)
    p.set_defaults(func=_cmd_audit_remainders)

    p = sub.add_parser("iso", help="exit 0 iff the first graphs of two files are isomorphic")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_iso)
    return parser


def run(argv: Sequence[str], stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        stderr.write(str(exc))
        return USAGE
    if args.command is None:
        stderr.write(parser.format_usage())
        return USAGE
    if args.workers is None:
        args.workers = default_workers()
    try:
        return args.func(args, stdin, stdout)
    except OSError as exc:
        stdout.write(_dump({"error": str(exc)}) + "\n")
        return USAGE


@dataclass
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str

    def records(self) -> list[dict]:
        return [json.loads(line) for line in self.stdout.splitlines() if line.startswith("{")]


def invoke(argv: Sequence[str], stdin_text: str = "") -> CommandResult:
    """Run in-process with captured streams."""
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin_text), out, err)
    return CommandResult(code, out.getvalue(), err.getvalue())


def main() -> None:
    sys.exit(run(sys.argv[1:]))
