"""Command-line front end.

Exit codes: 0 analysis completed, 2 parse error, 3 domain error,
4 table diff failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Optional

from . import __version__
from . import corpus, numeric
from .analysis import (
    FEquivalenceWitness,
    Reason,
    Verdict,
    detectors_of,
    discriminant_set,
    f_equivalent,
    verdict,
)
from .errors import DomainError, ParseError, UnknownTable
from .mcs import McsId
from .pauli import GbsSet, diff_set

REPORT_VERSION = 1
EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_TABLE = 0, 2, 3, 4


def parse_set(text: str) -> list[tuple[int, int]]:
    """Parse ``"m,n;m,n;..."``."""
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ParseError(f"malformed pair {chunk!r}; expected m,n")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"malformed pair {chunk!r}; expected integers") from None
    if not pairs:
        raise ParseError("empty set specification")
    return pairs


def load_set_file(path: str) -> tuple[int, list[tuple[int, int]]]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        d = int(doc["d"])
        pairs = [(int(m), int(n)) for m, n in doc["set"]]
    except (KeyError, TypeError, ValueError):
        raise ParseError(f"{path}: expected {{\"d\": int, \"set\": [[m, n], ...]}}") from None
    return d, pairs


def _witness_json(w) -> Any:
    if isinstance(w, McsId):
        return w.render()
    if isinstance(w, FEquivalenceWitness):
        return asdict(w)
    return w


def _verdict_json(v: Verdict) -> dict:
    return {"status": v.status.value, "reason": v.reason.value, "witness": _witness_json(v.witness)}


@dataclass
class AnalysisReport:
    input_set: list[str]
    d: int
    diff_set: list[str]
    discriminant_set: list[str]
    detector_set: list[str]
    f_equivalence: dict
    verdict: dict
    numeric: Optional[dict] = None
    report_version: int = REPORT_VERSION
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return asdict(self)


def _numeric_section(s: GbsSet, v: Verdict, detectors, args) -> dict:
    section: dict[str, Any] = {"seed": args.seed}
    if args.verify:
        if detectors:
            eb = numeric.common_eigenbasis(detectors[0], s.d, seed=args.seed)
            residual = max(numeric.protocol_verify(s, eb.basis[:, k]) for k in range(s.d))
            section["verify"] = {
                "state": f"common eigenbasis of {detectors[0].render()}",
                "eigenbasis_residual": eb.residual,
                "protocol_residual": residual,
                "passed": bool(residual < numeric.PROTOCOL_TOL and eb.residual < numeric.EIGEN_TOL),
            }
        elif v.reason is Reason.SPECIAL_DIFF_SET_33:
            residual = numeric.protocol_verify(s, numeric.half_shift_witness(s.d))
            section["verify"] = {
                "state": "(|0>+|1>)/sqrt(2)",
                "eigenbasis_residual": None,
                "protocol_residual": residual,
                "passed": bool(residual < numeric.PROTOCOL_TOL),
            }
        else:
            section["verify"] = {"state": None, "eigenbasis_residual": None,
                                 "protocol_residual": None, "passed": None,
                                 "note": "no detector or explicit witness to verify"}
    if args.search:
        rep = numeric.feasibility_search(s, restarts=args.restarts, iters=args.iters,
                                         seed=args.seed, tol=args.tol)
        section["feasibility"] = {
            "best_residual": rep.best_residual,
            "best_restart": rep.best_restart,
            "restarts": rep.restarts,
            "iterations_per_restart": rep.iterations_per_restart,
            "seed": rep.seed,
            "tolerance": rep.tolerance,
            "outcome": rep.label,
            "witness": [[float(c.real), float(c.imag)] for c in rep.witness],
        }
    return section


def analyze(args) -> AnalysisReport:
    if args.file:
        d, pairs = load_set_file(args.file)
        if args.d is not None and args.d != d:
            raise DomainError(f"--d {args.d} disagrees with d={d} in {args.file}")
    else:
        if args.d is None:
            raise ParseError("--d is required with --set")
        d, pairs = args.d, parse_set(args.set)
    s = GbsSet(d, pairs)
    v = verdict(s, assume_small_sets=args.assume_small_sets)
    detectors = detectors_of(s)
    rep = AnalysisReport(
        input_set=[g.render() for g in s],
        d=d,
        diff_set=[g.render() for g in sorted(diff_set(s))],
        discriminant_set=[g.render() for g in sorted(discriminant_set(s))],
        detector_set=[m.render() for m in detectors],
        f_equivalence=asdict(f_equivalent(s)),
        verdict=_verdict_json(v),
    )
    if args.verify or args.search:
        rep.numeric = _numeric_section(s, v, detectors, args)
    return rep


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], rows)
    elif isinstance(value, list):
        rows.append((prefix, " ".join(
            ",".join(repr(x) for x in v) if isinstance(v, list) else str(v) for v in value)))
    else:
        rows.append((prefix, "" if value is None else value))


def _fmt_set(items: list[str]) -> str:
    return " ".join(items) if items else "∅"


def render_text(rep: AnalysisReport) -> str:
    fe = rep.f_equivalence
    v = rep.verdict
    lines = [
        f"d = {rep.d}",
        f"set: {_fmt_set(rep.input_set)}",
        f"difference set ({len(rep.diff_set)}): {_fmt_set(rep.diff_set)}",
        f"discriminant set ({len(rep.discriminant_set)}): {_fmt_set(rep.discriminant_set)}",
        f"detectors ({len(rep.detector_set)}): {_fmt_set(rep.detector_set)}",
        "F-equivalent: " + (f"yes (alpha={fe['alpha']}, beta={fe['beta']})" if fe["found"] else "no"),
        f"verdict: {v['status']} ({v['reason']})"
        + (f", witness {v['witness']}" if v["witness"] is not None else ""),
    ]
    if rep.numeric:
        lines.append(f"seed: {rep.numeric['seed']}")
        ver = rep.numeric.get("verify")
        if ver:
            if ver["protocol_residual"] is None:
                lines.append(f"verify: {ver['note']}")
            else:
                lines.append(f"verify: state {ver['state']}, protocol residual "
                             f"{ver['protocol_residual']:.3e}"
                             + (f", eigenbasis residual {ver['eigenbasis_residual']:.3e}"
                                if ver["eigenbasis_residual"] is not None else "")
                             + (" [ok]" if ver["passed"] else " [FAILED]"))
        fs = rep.numeric.get("feasibility")
        if fs:
            lines.append(f"search: best residual {fs['best_residual']:.3e} over {fs['restarts']} "
                         f"restarts x {fs['iterations_per_restart']} iterations: {fs['outcome']}")
    return "\n".join(lines)


def render_json(rep: AnalysisReport) -> str:
    return json.dumps(rep.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def render_csv(rep: AnalysisReport) -> str:
    rows: list = []
    _flatten("", rep.to_dict(), rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["field", "value"])
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def tables(args) -> int:
    ids = corpus.TABLE_IDS if args.id == "all" else (args.id,)
    for t in ids:
        if t not in corpus.TABLE_IDS:
            raise UnknownTable(f"unknown table: {t}")
    diffs = [corpus.reproduce_table(t, seed=args.seed, apply_errata=args.errata) for t in ids]
    if args.json:
        out = [{
            "table": df.table_id, "cells": df.cells, "corrected": df.corrected, "ok": df.ok,
            "mismatches": [{
                "row": m.row, "col": m.col, "expected": m.expected, "actual": m.actual,
                "erratum": m.erratum.reason if m.erratum else None,
            } for m in df.mismatches],
        } for df in diffs]
        print(json.dumps(out, indent=2, ensure_ascii=False))
    else:
        for df in diffs:
            print(df.summary())
            for m in df.mismatches:
                note = f"  [known erratum: {m.erratum.reason}]" if m.erratum else ""
                print(f"  {m.row}|{m.col}: expected {m.expected!r}, got {m.actual!r}{note}")
    return EXIT_OK if all(df.ok for df in diffs) else EXIT_TABLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gbsdetect", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one GBS set")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--set", help='semicolon-separated pairs, e.g. "0,0;0,1;3,0"')
    src.add_argument("--file", help='JSON document {"d": 6, "set": [[0,0],[0,1]]}')
    a.add_argument("--d", type=int)
    a.add_argument("--verify", action="store_true", help="eigenbasis and protocol check")
    a.add_argument("--search", action="store_true", help="run the witness-state optimizer")
    a.add_argument("--restarts", type=int, default=64)
    a.add_argument("--iters", type=int, default=2000)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--tol", type=float, default=numeric.FEASIBILITY_TOL)
    a.add_argument("--assume-small-sets", action=argparse.BooleanOptionalAction, default=True,
                   help="treat sets of at most 3 states as distinguishable")
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    t = sub.add_parser("tables", help="recompute the reference tables and diff them")
    t.add_argument("--id", default="all", help="I..VI or all")
    t.add_argument("--errata", action="store_true", help="apply documented corrections")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tables":
            return tables(args)
        rep = analyze(args)
    except (ParseError, UnknownTable) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        print(render_json(rep))
    elif args.csv:
        print(render_csv(rep))
    else:
        print(render_text(rep))
    return EXIT_OK
