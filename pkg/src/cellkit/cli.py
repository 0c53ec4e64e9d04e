"""Command-line front end: ``cellkit {enumerate,cells,verify,conjecture,oracle-dump}``.

Every command prints one JSON report (or a CSV table for the classification
commands).  Exit codes: 0 when every verdict passes or the command only
reports, 1 when a verdict fails, 2 for usage errors, 3 when a rank bound is hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Any, Optional, Sequence

from cellkit.coset_matrices import (
    CosetMatrix,
    enumerate_Pi,
    length_formula,
    sigma,
    special_key,
    two_sided_classify,
    y_of_matrix,
)
from cellkit.errors import CellkitError, ParityError, ResourceLimitError
from cellkit.hecke.algebra import HeckeAlgebra, OracleConfig, WeightFunction
from cellkit.hecke.laurent import format_laurent
from cellkit.hecke.schur import (
    SchurOracle,
    cell_key,
    classify_via_hecke,
    domino_comparison,
    left_cells_per_two_sided,
    matrix_kind,
)
from cellkit.signed_perm import format_word, parse_word, reduced_word, from_word
from cellkit.symbols import format_symbol, scan_s0_invariance
from cellkit.verify import EXAMPLE_IDS, load_golden, verify_example

DEFAULT_MAX_D = 3
HARD_MAX_D = 4

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def oracle_max_rank(override: Optional[int]) -> int:
    if override is not None:
        limit = override
    else:
        raw = os.environ.get("CELLKIT_MAX_D", str(DEFAULT_MAX_D))
        try:
            limit = int(raw)
        except ValueError:
            raise UsageError(f"CELLKIT_MAX_D must be an integer, got {raw!r}")
    if limit < 1:
        raise UsageError("the oracle rank cap must be positive")
    return min(limit, HARD_MAX_D)


def oracle_config(d: int, override: Optional[int]) -> OracleConfig:
    limit = oracle_max_rank(override)
    if d > limit:
        raise ResourceLimitError(
            f"oracle rank {d} exceeds the cap {limit} (set CELLKIT_MAX_D or --max-rank-override)"
        )
    return OracleConfig(max_rank=limit, table_max_rank=min(limit, 3))


def _matrix_row(t: int, a: CosetMatrix) -> dict:
    y = y_of_matrix(a)
    return {
        "index": t + 1,
        "matrix": [list(r) for r in a.rows],
        "ro": list(a.ro().parts),
        "co": list(a.co().parts),
        "y": format_word(reduced_word(y)),
        "y_window": list(y.window),
        "length": length_formula(a),
        "sigma": list(sigma(a)),
    }


def _matrices(n: int, d: int, kind: str) -> list[CosetMatrix]:
    try:
        return enumerate_Pi(n, d, matrix_kind(kind))
    except ParityError as exc:
        raise UsageError(str(exc))


def _cell_table(cells: Sequence[frozenset], order: list[CosetMatrix], kind: str) -> list[dict]:
    position = {a: t for t, a in enumerate(order)}
    rows = []
    for cell in cells:
        members = sorted(cell, key=position.__getitem__)
        key = cell_key(cell, kind)
        rows.append({
            "key": [list(p) for p in key] if kind == "i-tilde" else list(key),
            "size": len(members),
            "members": [position[a] + 1 for a in members],
        })
    rows.sort(key=lambda r: r["members"])
    return rows


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args: argparse.Namespace) -> tuple[dict, list[dict], list[dict]]:
    pi = _matrices(args.n, args.d, args.kind)
    rows = [_matrix_row(t, a) for t, a in enumerate(pi)]
    return {"count": len(rows), "matrices": rows}, [], rows


def cmd_cells(args: argparse.Namespace) -> tuple[dict, list[dict], list[dict]]:
    pi = _matrices(args.n, args.d, args.kind)
    result: dict[str, Any] = {"count": len(pi)}
    verdicts: list[dict] = []
    combinatorial = oracle = None
    if args.method in ("combinatorial", "both"):
        if args.kind == "i-tilde":
            oracle_obj = SchurOracle(args.n, args.d, args.kind, oracle_config(args.d, args.max_rank_override))
            combinatorial = sorted(classify_via_hecke(args.n, args.d, args.kind, oracle=oracle_obj)["two_sided"],
                                   key=lambda c: min(pi.index(a) for a in c))
        else:
            combinatorial = list(two_sided_classify(args.n, args.d, matrix_kind(args.kind)).values())
        result["combinatorial"] = _cell_table([frozenset(c) for c in combinatorial], pi, args.kind)
    if args.method in ("oracle", "both"):
        schur = SchurOracle(args.n, args.d, args.kind, oracle_config(args.d, args.max_rank_override))
        decomposition = schur.cells()
        oracle = decomposition.two_sided
        result["oracle"] = _cell_table(oracle, pi, args.kind)
        result["left_cells_per_two_sided"] = [
            {"key": [list(p) for p in k] if args.kind == "i-tilde" else list(k), "left_cells": v}
            for k, v in left_cells_per_two_sided(decomposition, args.kind).items()
        ]
    if combinatorial is not None and oracle is not None:
        same = {frozenset(c) for c in combinatorial} == set(oracle)
        verdicts.append({"name": "two-sided cells agree", "expected": True, "actual": same, "passed": same})
    table = result.get("oracle", result.get("combinatorial"))
    result["cells"] = len(table)
    flat = [{"key": " ".join(map(str, r["key"])), "size": r["size"],
             "members": " ".join(map(str, r["members"]))} for r in table]
    return result, verdicts, flat


def cmd_verify(args: argparse.Namespace) -> tuple[dict, list[dict], list[dict]]:
    if args.example not in EXAMPLE_IDS:
        raise UsageError(f"unknown example {args.example!r}; choose from {', '.join(EXAMPLE_IDS)}")
    verdicts = [v.to_json() for v in verify_example(args.example)]
    example = load_golden()[args.example]["example"]
    summary = {"example": example, "checked": len(verdicts), "failed": sum(not v["passed"] for v in verdicts)}
    return summary, verdicts, []


def cmd_conjecture(args: argparse.Namespace) -> tuple[dict, list[dict], list[dict]]:
    if args.id == "c6.13":
        scan = scan_s0_invariance(args.d)
        result = {
            "d": args.d,
            "checked": scan.checked,
            "counterexamples": [
                {"w": format_word(reduced_word(w)), "sym_s0w": format_symbol(a), "sym_w": format_symbol(b)}
                for w, a, b in scan.counterexamples
            ],
            "exact_symbol_mismatches": scan.exact_mismatches,
        }
        if args.d >= 2:
            result["worked_identities"] = [
                {"name": v.name, "passed": v.passed} for v in verify_example("ex-6.14")
                if v.name.startswith("sym equality")
            ]
        return result, [], []
    kind = "j" if args.id == "c3.19" else "i"
    if args.n is None:
        raise UsageError(f"{args.id} needs --n")
    _matrices(args.n, args.d, kind)
    oracle_config(args.d, args.max_rank_override)
    rows = domino_comparison(args.n, args.d, kind)
    return {"n": args.n, "d": args.d, "kind": kind, "table": rows}, [], rows


def cmd_oracle_dump(args: argparse.Namespace) -> tuple[dict, list[dict], list[dict]]:
    config = oracle_config(args.d, args.max_rank_override)
    weight = WeightFunction.named(args.weight, args.d)
    H = HeckeAlgebra(args.d, weight, config)
    xs = [from_word(args.d, parse_word(args.x))] if args.x else H.elements
    ys = [from_word(args.d, parse_word(args.y))] if args.y else H.elements
    entries = []
    for x in xs:
        for y in ys:
            terms = H.structure_constants(x, y)
            entries.append({
                "x": format_word(reduced_word(x)),
                "y": format_word(reduced_word(y)),
                "terms": {format_word(reduced_word(z)): format_laurent(p) for z, p in terms.items()},
            })
    return {"d": args.d, "weight": weight.name, "entries": entries}, [], []


# ---------------------------------------------------------------------------
# parsing and output

REPORT_ONLY = {"conjecture", "oracle-dump", "enumerate"}
CSV_COMMANDS = {"enumerate", "cells"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--max-rank-override", type=int, default=None,
                        help="oracle rank cap (default: CELLKIT_MAX_D or 3; at most 4)")

    parser = argparse.ArgumentParser(prog="cellkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the coset matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("j", "i", "i-tilde"), default="j")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cells", parents=[common], help="two-sided cells of the matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("j", "i", "i-tilde"), default="j")
    p.add_argument("--method", choices=("combinatorial", "oracle", "both"), default="combinatorial")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("verify", parents=[common], help="recompute a stored worked example")
    p.add_argument("example", help=", ".join(EXAMPLE_IDS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common], help="report-only conjecture scans")
    p.add_argument("id", choices=("c3.19", "c5.10", "c6.13"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("oracle-dump", parents=[common], help="export Hecke structure constants")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--weight", choices=("equal", "ell_a"), default="equal")
    p.add_argument("--x", default=None, help="restrict to one left factor, e.g. 's0 s1'")
    p.add_argument("--y", default=None, help="restrict to one right factor")
    p.set_defaults(func=cmd_oracle_dump)
    return parser


def _params(args: argparse.Namespace) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _status(command: str, verdicts: list[dict]) -> str:
    if not verdicts:
        return "report-only" if command in REPORT_ONLY else "ok"
    return "pass" if all(v["passed"] for v in verdicts) else "fail"


def render_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in row.items()})
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command not in CSV_COMMANDS:
        parser.error(f"--format csv is only available for {', '.join(sorted(CSV_COMMANDS))}")
    start = time.perf_counter()
    try:
        result, verdicts, flat = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ResourceLimitError as exc:
        print(json.dumps({"command": " ".join(argv), "status": "error", "error": str(exc)}, indent=2))
        return EXIT_LIMIT
    except (CellkitError, ValueError) as exc:
        print(json.dumps({"command": " ".join(argv), "status": "error", "error": str(exc)}, indent=2))
        return EXIT_FAIL
    elapsed = time.perf_counter() - start
    status = _status(args.command, verdicts)
    if args.format == "csv":
        sys.stdout.write(render_csv(flat))
    else:
        report = {
            "command": " ".join(["cellkit", *argv]),
            "params": _params(args),
            "result": result,
            "timing": {"seconds": round(elapsed, 4)},
            "verdicts": verdicts,
            "status": status,
        }
        print(json.dumps(report, indent=2))
    return EXIT_FAIL if status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
