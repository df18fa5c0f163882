"""Command-line interface.

Subcommands: solids, paths, unfold, zip, dedupe, verify, report, svg.
Exit codes: 0 success, 1 reference-value mismatch or failed verification,
2 usage error, 3 data error. JSON output is byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import congruence, foldverify, hampath, report as report_mod, solids, svg as svg_mod, unfold as unfold_mod
from .zipper import enumerate_zippings, report_to_json_dict

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(data) -> str:
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def _load_net(args) -> unfold_mod.Net:
    if args.net:
        try:
            with open(args.net) as fh:
                d = json.load(fh)
            prov = d.get("provenance", d)
            return unfold_mod.net_from_provenance(prov["solid"], prov["path"])
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as e:
            raise SystemExit(f"bad net file {args.net}: {e}") from e
    return unfold_mod.net_from_provenance(args.solid, [int(v) for v in args.path.split(",")])


def cmd_solids(args) -> int:
    p = solids.build_solid(args.solid)
    _emit(
        _json(
            {
                "name": p.name,
                "vertices": [list(v) for v in p.vertices],
                "faces": [list(f) for f in p.faces],
                "edges": [list(e) for e in p.edges],
            }
        ),
        args.out,
    )
    return EXIT_OK


def cmd_paths(args) -> int:
    p = solids.build_solid(args.solid)
    if args.between:
        u, v = (int(x) for x in args.between.split(","))
        paths = hampath.enumerate_paths_between(p, u, v)
    else:
        paths = hampath.enumerate_paths(p)
    _emit(_json({"solid": args.solid, "count": len(paths), "paths": [list(c.vertices) for c in paths]}), args.out)
    return EXIT_OK


def cmd_unfold(args) -> int:
    net = _load_net(args)
    _emit(_json(unfold_mod.net_to_json_dict(net)), args.out)
    return EXIT_OK


def cmd_zip(args) -> int:
    net = _load_net(args)
    rep = enumerate_zippings(net)
    data = report_to_json_dict(rep)
    if not args.dump_rejected:
        data.pop("rejections")
    _emit(_json(data), args.out)
    return EXIT_OK


def cmd_dedupe(args) -> int:
    p = solids.build_solid(args.solid)
    nets = [unfold_mod.unfold(p, cp) for cp in hampath.enumerate_paths(p)]
    classes = congruence.dedupe(nets)
    _emit(_json(congruence.dedupe_report_dict(classes)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = []
    if args.spec:
        try:
            specs.append(foldverify.load_foldspec(args.spec))
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as e:
            print(f"data error: {e}", file=sys.stderr)
            return EXIT_DATA
    else:
        specs = foldverify.shipped_foldspecs()
    all_ok = True
    lines = []
    for spec in specs:
        rep = foldverify.verify_fold(spec)
        lines.append(rep.summary())
        all_ok &= rep.passed
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_report(args) -> int:
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    rows = report_mod.build_report(args.scope, jobs=jobs)
    if args.format == "csv":
        _emit(report_mod.rows_to_csv(rows), args.out)
    elif args.format == "json":
        _emit(_json([r.as_dict() for r in rows]), args.out)
    else:
        width = max(len(r.metric) for r in rows)
        lines = []
        for r in rows:
            mark = "pass" if r.passed else "FAIL"
            lines.append(
                f"[{mark}] {r.solid:<12} {r.metric:<{width}} expected={r.expected!r} computed={r.computed!r}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_MISMATCH


def cmd_svg(args) -> int:
    if args.spec:
        try:
            spec = foldverify.load_foldspec(args.spec)
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as e:
            print(f"data error: {e}", file=sys.stderr)
            return EXIT_DATA
        _emit(svg_mod.fold_svg(spec), args.out)
    else:
        net = _load_net(args)
        _emit(svg_mod.net_svg(net), args.out)
    return EXIT_OK


def _add_net_args(sp):
    sp.add_argument("--solid", choices=solids.SOLID_NAMES, help="solid name")
    sp.add_argument("--path", help="comma-separated vertex indices of the cut path")
    sp.add_argument("--net", help="net JSON file with a provenance record")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zipfold", description=__doc__)
    ap.add_argument("--out", help="write output to this file instead of stdout")
    ap.add_argument(
        "--tolerance-override",
        type=float,
        metavar="EPS",
        help="testing only: replace the glued-angle slack (default 1e-9 rad)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solids", help="export a solid model as JSON")
    sp.add_argument("solid", choices=solids.SOLID_NAMES)
    sp.set_defaults(func=cmd_solids)

    sp = sub.add_parser("paths", help="enumerate Hamiltonian cut paths")
    sp.add_argument("solid", choices=solids.SOLID_NAMES)
    sp.add_argument("--between", help="u,v endpoint pair")
    sp.set_defaults(func=cmd_paths)

    sp = sub.add_parser("unfold", help="develop a cut solid into a planar net")
    _add_net_args(sp)
    sp.set_defaults(func=cmd_unfold)

    sp = sub.add_parser("zip", help="enumerate the perimeter-halving refoldings of a net")
    _add_net_args(sp)
    sp.add_argument("--dump-rejected", action="store_true", help="include rejected anchor candidates")
    sp.set_defaults(func=cmd_zip)

    sp = sub.add_parser("dedupe", help="group a solid's nets into congruence classes")
    sp.add_argument("solid", choices=solids.SOLID_NAMES)
    sp.set_defaults(func=cmd_dedupe)

    sp = sub.add_parser("verify", help="check flat-folding certificates")
    sp.add_argument("--spec", help="certificate JSON file (default: all shipped certificates)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="recompute every reference value with pass/fail rows")
    sp.add_argument("scope", nargs="?", default="all", choices=("all",) + solids.SOLID_NAMES)
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sp.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("svg", help="draw a net or a fold certificate")
    _add_net_args(sp)
    sp.add_argument("--spec", help="fold certificate to draw instead of a net")
    sp.set_defaults(func=cmd_svg)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if getattr(args, "command", None) in ("unfold", "zip", "svg") and not (
        getattr(args, "net", None) or getattr(args, "spec", None) or (args.solid and args.path)
    ):
        print("need --net FILE or --solid NAME --path LIST (or --spec for svg)", file=sys.stderr)
        return EXIT_USAGE
    if args.tolerance_override is not None:
        from . import zipper

        zipper.ANGLE_SLACK = args.tolerance_override
    try:
        return args.func(args)
    except SystemExit as e:
        print(str(e), file=sys.stderr)
        return EXIT_DATA
    except (ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
