"""Command-line interface: compute, verify, tabulate, and dump fixtures.

All output is deterministic: polynomials print in ascending graded-lex
order with explicit separators, and JSON uses the canonical encoding with
sorted keys.  Exit codes: 0 success, 2 verification mismatch, 3 capacity
guard, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction as Q
from typing import List, Optional

from .errors import CapacityError, StructureError, TutteKitError
from .finitefield import tutte_via_interpolation
from .genfun import DEFAULT_ORDER, GenFunRequest, extract_polynomial
from .invariants import InvariantReport, derive_all
from .poly import MultiPoly
from .root_systems import RootSystemSpec, build_config, parse_system
from .signed_graphs import graph_dictionary_tutte
from .tables import (
    all_rows,
    characteristic_fixture,
    ehrhart_fixture,
    weight_tutte_fixture,
)
from .tutte import TuttePolynomial, arithmetic_tutte_bruteforce
from .verify import FAIL, verify_system

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_CAPACITY = 3
EXIT_USAGE = 4

METHODS = ("bruteforce", "genfun", "finitefield", "graphs", "all")


def format_poly(poly: MultiPoly) -> str:
    """Ascending graded-lex rendering with explicit separators."""
    if poly.is_zero():
        return "0"
    parts: List[str] = []
    for exps, coeff in reversed(poly.sorted_terms()):
        factors = []
        for var, e in zip(poly.vars, exps):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        mono = "".join(factors)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+" if coeff > 0 else "-") + body)
    return "".join(parts)


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _compute_one(spec: RootSystemSpec, method: str, order: int) -> TuttePolynomial:
    if method == "bruteforce":
        return arithmetic_tutte_bruteforce(build_config(spec))
    if method == "genfun":
        req = GenFunRequest(spec.family, spec.lattice_kind, max(order, spec.n))
        return extract_polynomial(req, spec.n)
    if method == "finitefield":
        return tutte_via_interpolation(build_config(spec))
    if method == "graphs":
        return graph_dictionary_tutte(spec.family, spec.n, spec.lattice_kind)
    raise StructureError(f"unknown method {method!r}")


def _tutte_payload(spec: RootSystemSpec, method: str, t: TuttePolynomial) -> dict:
    return {
        "system": str(spec),
        "method": method,
        "flavor": t.flavor,
        "rank": t.rank,
        "ambient_rank": t.ambient_rank,
        "polynomial": t.poly.to_json_dict(),
    }


def cmd_compute(args) -> int:
    spec = parse_system(args.system)
    if args.method == "all":
        methods = ["bruteforce", "genfun", "graphs", "finitefield"]
        computed = {}
        for m in methods:
            try:
                computed[m] = _compute_one(spec, m, args.order)
            except CapacityError:
                continue
        if not computed:
            raise CapacityError("no method could run within its capacity guard")
        polys = {m: t.poly for m, t in computed.items()}
        reference = next(iter(polys.values()))
        agree = all(p == reference for p in polys.values())
        first_method = next(iter(computed))
        if args.output == "json":
            payload = _tutte_payload(spec, "all", computed[first_method])
            payload["methods_run"] = sorted(computed)
            payload["agreement"] = agree
            print(_json_dump(payload))
        else:
            print(f"{spec} [{', '.join(sorted(computed))}]")
            print(f"M(x,y) = {format_poly(reference)}")
            print(f"agreement: {'yes' if agree else 'NO'}")
        return EXIT_OK if agree else EXIT_MISMATCH

    t = _compute_one(spec, args.method, args.order)
    if args.output == "json":
        print(_json_dump(_tutte_payload(spec, args.method, t)))
    else:
        print(f"{spec} [{args.method}]")
        print(f"M(x,y) = {format_poly(t.poly)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = parse_system(args.system)
    results = verify_system(spec, order=args.order, prime_count=args.primes)
    if args.output == "json":
        print(
            _json_dump(
                {
                    "system": str(spec),
                    "checks": [
                        {"name": r.name, "status": r.status, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
    else:
        for r in results:
            line = f"{spec}  {r.name}: {r.status}"
            if r.detail:
                line += f" ({r.detail})"
            print(line)
    return EXIT_MISMATCH if any(r.status == FAIL for r in results) else EXIT_OK


def cmd_table(args) -> int:
    reports = [r.strip() for r in args.report.split(",")]
    for r in reports:
        if r not in ("tutte", "char", "ehrhart"):
            raise StructureError(f"unknown report {r!r}")
    rows = []
    for family in "ABCD":
        for n in range(2, args.max_n + 1):
            req = GenFunRequest(family, args.lattice, max(DEFAULT_ORDER, n))
            t = extract_polynomial(req, n)
            entry = {"row": f"{family}{n}"}
            if "tutte" in reports:
                entry["tutte"] = t
            if "char" in reports or "ehrhart" in reports:
                rep = derive_all(t)
                if "char" in reports:
                    entry["char"] = rep.characteristic
                if "ehrhart" in reports:
                    entry["ehrhart"] = rep.ehrhart
            rows.append(entry)
    if args.output == "json":
        out = []
        for entry in rows:
            item = {"row": entry["row"]}
            if "tutte" in entry:
                item["tutte"] = entry["tutte"].poly.to_json_dict()
            if "char" in entry:
                item["characteristic"] = entry["char"].to_json_dict()
            if "ehrhart" in entry:
                item["ehrhart"] = entry["ehrhart"].to_json_dict()
            out.append(item)
        print(_json_dump({"lattice": args.lattice, "rows": out}))
    else:
        for entry in rows:
            cells = [entry["row"]]
            if "tutte" in entry:
                cells.append(format_poly(entry["tutte"].poly))
            if "char" in entry:
                cells.append(format_poly(entry["char"]))
            if "ehrhart" in entry:
                cells.append(format_poly(entry["ehrhart"]))
            print("\t".join(cells))
    return EXIT_OK


def cmd_invariants(args) -> int:
    spec = parse_system(args.system)
    t = arithmetic_tutte_bruteforce(build_config(spec))
    rep = derive_all(t)
    if args.output == "json":
        print(
            _json_dump(
                {
                    "system": str(spec),
                    "characteristic": rep.characteristic.to_json_dict(),
                    "ehrhart": rep.ehrhart.to_json_dict(),
                    "poincare": rep.poincare.to_json_dict(),
                    "volume": rep.volume,
                    "lattice_points": rep.lattice_points,
                    "interior_points": rep.interior_points,
                    "toric_regions": rep.toric_regions,
                    "dm_dimension": rep.dm_dimension,
                    "dpv_dimension": rep.dpv_dimension,
                }
            )
        )
    else:
        print(f"{spec}")
        print(f"characteristic: {format_poly(rep.characteristic)}")
        print(f"ehrhart: {format_poly(rep.ehrhart)}")
        print(f"poincare: {format_poly(rep.poincare)}")
        print(f"volume: {rep.volume}")
        print(f"lattice_points: {rep.lattice_points}")
        print(f"interior_points: {rep.interior_points}")
        print(f"toric_regions: {rep.toric_regions}")
        print(f"dm_dimension: {rep.dm_dimension}")
        print(f"dpv_dimension: {rep.dpv_dimension}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    entries = []
    for row in all_rows():
        for kind, fx in (
            ("weight-tutte", weight_tutte_fixture(row)),
            ("characteristic", characteristic_fixture(row)),
            ("ehrhart", ehrhart_fixture(row)),
        ):
            entries.append(
                {
                    "row": row,
                    "kind": kind,
                    "source": fx.source,
                    "printed": fx.printed,
                    "partial": fx.partial,
                    "note": fx.note,
                    "polynomial": fx.poly.to_json_dict(),
                }
            )
    if args.output == "json":
        print(_json_dump({"fixtures": entries}))
    else:
        for e in entries:
            flag = " [partial]" if e["partial"] else ""
            print(f"{e['row']} {e['kind']}{flag}: {e['printed']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuttekit",
        description="Exact arithmetic Tutte polynomials of classical root systems",
    )
    default_threads = int(os.environ.get("TUTTEKIT_THREADS", "1"))
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=default_threads)

    p = sub.add_parser("compute", help="compute one Tutte polynomial")
    p.add_argument("--system", required=True, help="family:n:lattice, e.g. C:2:integer")
    p.add_argument("--method", choices=METHODS, default="bruteforce")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run all cross-checks for a system")
    p.add_argument("--system", required=True)
    p.add_argument("--method", choices=METHODS, default="all")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--primes", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="emit reference-style tables")
    p.add_argument("--lattice", choices=("integer", "root", "weight"), default="weight")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--report", default="tutte", help="comma list of tutte,char,ehrhart")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("invariants", help="derived invariants of one system")
    p.add_argument("--system", required=True)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("fixtures", help="dump the embedded fixture data")
    common(p)
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except StructureError as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TutteKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
