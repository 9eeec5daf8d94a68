"""Command line front end.

    sextactic catalog nodal|fermat [--json] [--pairs]
    sextactic certify nodal 1 2 [--json] [--no-timing]
    sextactic certify fermat P1:0 P2:0 [--json] [--no-timing]
    sextactic paper-check [--json] [--only ANCHOR] [--no-timing] [--slow]

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arrangements import (
    ArrangementError,
    ConicId,
    catalog_json,
    fermat_arrangement,
    fermat_catalog,
    nodal_arrangement,
    nodal_catalog,
    pair_orbits,
)
from .checks import anchors, run_checks
from .polyring import format_poly
from .singularities import arrangement_census
from .syzygy import certify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(data, as_json: bool, lines: list[str]):
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_catalog(args) -> int:
    if args.pairs:
        if args.curve != "fermat":
            print("--pairs is only defined for the fermat catalog", file=sys.stderr)
            return EXIT_USAGE
        orbs = pair_orbits()
        data = [{"pair": [str(a) for a in o.pair], "size": o.size, "same_fiber": o.same_fiber} for o in orbs]
        lines = [f"{len(orbs)} orbits of unordered conic pairs under G'"]
        lines += [f"  {o.pair[0]} + {o.pair[1]}  size {o.size}{'  same fiber' if o.same_fiber else ''}" for o in orbs]
        _emit(data, args.json, lines)
        return EXIT_OK
    if args.json:
        print(catalog_json(args.curve))
        return EXIT_OK
    if args.curve == "nodal":
        cat = nodal_catalog()
        lines = [f"E: {format_poly(cat.E)}"]
        for i, (s, q) in enumerate(zip(cat.sextactic, cat.conics), 1):
            lines.append(f"s{i} = {s}")
            lines.append(f"Q{i}: {format_poly(q)}")
    else:
        cat = fermat_catalog()
        lines = [f"F: {format_poly(cat.F)}"]
        for j, p in enumerate(cat.base_points, 1):
            lines.append(f"P{j} (base point p{j} = {p})")
            for slot in range(3):
                cid = ConicId(j, slot)
                lines.append(f"  {cid}  sextactic {cat.sextactic[cid]}")
                lines.append(f"        {format_poly(cat.conics[cid])}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        if args.curve == "nodal":
            arr = nodal_arrangement([int(s) for s in args.conics])
        else:
            arr = fermat_arrangement([ConicId.parse(s) for s in args.conics])
    except (ValueError, ArrangementError) as exc:
        print(f"invalid selection: {exc}", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    cert = certify(arr.product)
    cen = arrangement_census(arr.components)
    seconds = time.perf_counter() - t0
    data = {
        "command": "certify",
        "inputs": {"curve": args.curve, "conics": list(args.conics)},
        "certificate": cert.to_dict(),
        "census": cen.to_dict(),
    }
    if not args.no_timing:
        data["seconds"] = round(seconds, 2)
    lines = [
        f"arrangement: {args.curve} + {' '.join(args.conics)}  (degree {cert.degree})",
        f"verdict: {cert.verdict}",
        f"exponents: {tuple(cert.exponents)}",
        f"mdr: {cert.mdr}",
        f"tjurina: {cert.tjurina}",
        f"generator degrees: {list(cert.generator_degrees)}",
        "singularities:",
    ]
    for r in cen.reports:
        lines.append(f"  {r.point}  {r.type_tag}  tau={r.tjurina} mu={r.milnor} mult={r.multiplicity}")
    if cen.residual_nodes:
        lines.append(f"  {cen.residual_nodes} transversal intersection point(s) outside K (A1)")
    lines.append(f"census: {dict(sorted(cen.counts().items()))}  (sum of tau = {cen.tjurina_sum})")
    if not args.no_timing:
        lines.append(f"time: {seconds:.2f}s")
    _emit(data, args.json, lines)
    return EXIT_OK


def cmd_paper_check(args) -> int:
    if args.only is not None and args.only not in anchors() and not args.only.isdigit():
        print(f"unknown anchor {args.only!r}; choose from {', '.join(anchors())}", file=sys.stderr)
        return EXIT_USAGE
    results = run_checks(args.only, slow=args.slow)
    if not results:
        print("no checks selected", file=sys.stderr)
        return EXIT_USAGE
    timing = not args.no_timing
    if args.json:
        print(json.dumps([r.to_dict(timing) for r in results], indent=2, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f"  ({r.seconds:.1f}s)" if timing else ""
            print(f"[{status}] {r.number:2d} {r.anchor}: {r.title}{suffix}")
            if r.error:
                print(f"       error: {r.error}")
            for label, ok, detail in r.items:
                if not ok:
                    print(f"       failed: {label}: {detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sextactic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list sextactic points and hyperosculating conics")
    p.add_argument("curve", choices=["nodal", "fermat"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--pairs", action="store_true", help="G'-orbit representatives of conic pairs")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("certify", help="certify an arrangement as free, nearly free or m-syzygy")
    p.add_argument("curve", choices=["nodal", "fermat"])
    p.add_argument("conics", nargs="+", help="nodal: 1 2 3; fermat: Pj:slot")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("paper-check", help="run every acceptance check")
    p.add_argument("--json", action="store_true")
    p.add_argument("--only", metavar="ANCHOR", help="run only checks with this anchor or number")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--slow", action="store_true", help="exhaustive variants of sampled checks")
    p.set_defaults(func=cmd_paper_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
