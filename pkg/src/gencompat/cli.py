"""Command-line front end.

Exit codes: 0 all checks pass, 1 some check fails, 2 usage or input error.
Output is plain text or JSON, never colored, and depends only on the inputs.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from .catalog import CATALOG_NAMES, DEFAULT_SAMPLES, catalog_get, verify_entry
from .exactla import to_rational
from .extended import (
    CurveSpec,
    build_extended,
    curve_point,
    eigenspace_involutivity,
    nijenhuis_integrability,
    verify_algebraic,
)
from .fileio import (
    FormatError,
    dump_algebra,
    dump_metric,
    dump_structure,
    load_algebra,
    load_metric,
    load_structure,
    read_json,
    write_json,
)
from .liealg import cotangent_algebra
from .report import Report

log = logging.getLogger("gencompat")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# rationals like -1/3 and lists like -3,1/2 are values, not flags
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*,?$")


class UsageError(Exception):
    pass


def _emit(rep: Report, fmt: str, out):
    out.write((rep.to_json() if fmt == "json" else rep.to_text()) + "\n")


def _samples(text):
    try:
        return tuple(to_rational(t) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"bad sample list {text!r}") from None


def _rational_arg(text):
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def verify_files(algebra_file, metric_file, structure_file) -> Report:
    L = load_algebra(read_json(algebra_file))
    metric = load_metric(read_json(metric_file))
    S = load_structure(read_json(structure_file), metric)
    if L.dim != metric.m:
        raise FormatError(f"algebra has dim {L.dim} but the metric has dim {metric.m}")
    E = build_extended(metric, S.k)
    rep = Report(f"verify ({S.lam},{S.ell})-structure", info={"m": metric.m, "signature": list(metric.signature)})
    alg = verify_algebraic(S, E)
    rep.extend(alg)
    T = cotangent_algebra(L)
    if not alg.passed:
        rep.info["integrability"] = "skipped: algebraic axioms fail"
        return rep
    nij = nijenhuis_integrability(T, S)
    rep.info["nijenhuis_pairs_checked"] = nij.info["pairs_checked"]
    rep.extend(nij)
    if S.lam == 1:
        for delta in (1, -1):
            res = eigenspace_involutivity(T, S, delta)
            rep.add(f"D({delta:+d}) involutive", res.involutive, f"dim {len(res.eigenbasis.vectors)}",
                    {} if res.involutive else {"pair": res.pair, "residual": res.residual})
    return rep


def cmd_verify(args, out) -> int:
    rep = verify_files(args.algebra, args.metric, args.structure)
    _emit(rep, args.report, out)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _entry(name):
    try:
        return catalog_get(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def cmd_catalog(args, out) -> int:
    if args.all == (args.name is not None):
        raise UsageError("give exactly one of NAME or --all")
    names = CATALOG_NAMES if args.all else (args.name,)
    samples = args.curve_samples if args.curve_samples is not None else DEFAULT_SAMPLES
    reps = []
    for name in names:
        log.info("verifying %s", name)
        reps.append(verify_entry(_entry(name), samples))
    if len(reps) == 1:
        rep = reps[0]
    else:
        rep = Report("catalog --all", info={"entries": len(reps),
                                            "passed": sum(r.passed for r in reps)})
        for r in reps:
            rep.extend(r, r.title.split()[-1] + ": ")
    _emit(rep, args.report, out)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_interpolate(args, out) -> int:
    entry = _entry(args.entry)
    if not entry.curves:
        raise UsageError(f"catalog entry {args.entry!r} has no curve of structures")
    if args.epsilon not in entry.curves:
        raise UsageError(f"epsilon must be one of {sorted(entry.curves)}")
    spec = entry.curves[args.epsilon]
    S = curve_point(CurveSpec(spec.R, spec.Q, args.s))
    E = entry.extended
    T = cotangent_algebra(entry.algebra)
    rep = Report(f"{entry.name} curve eps={args.epsilon:+d} at s={args.s}",
                 info={"lambda": S.lam, "ell": S.ell, "S": S.S})
    rep.extend(verify_algebraic(S, E))
    dims = {}
    if S.lam == 1:
        for delta in (1, -1):
            res = eigenspace_involutivity(T, S, delta)
            dims[f"D({delta:+d})"] = len(res.eigenbasis.vectors)
            rep.add(f"D({delta:+d}) involutive", res.involutive, f"dim {dims[f'D({delta:+d})']}")
    rep.info["eigenspace_dims"] = dims
    rep.extend(nijenhuis_integrability(T, S))
    _emit(rep, args.report, out)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def export_entry(name, outdir) -> list:
    """Write algebra/metric/structure files for a catalog entry; returns the paths."""
    entry = _entry(name)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def put(fname, data):
        path = outdir / fname
        write_json(path, data)
        written.append(path)

    put("algebra.json", dump_algebra(entry.algebra, entry.salamon))
    if entry.gram_basis is not None:
        put("metric.json", dump_metric(entry.metric, *entry.gram_basis))
    else:
        put("metric.json", dump_metric(entry.metric))
    if entry.classical is not None:
        put("structure.json", dump_structure(entry.structure, entry.classical))
    for eps, spec in sorted(entry.curves.items(), reverse=True):
        if eps == 1:
            put("structure_R.json", dump_structure(spec.R))
        put(f"structure_Q{eps:+d}.json", dump_structure(spec.Q))
    return written


def cmd_export(args, out) -> int:
    for path in export_entry(args.name, args.out):
        out.write(f"{path}\n")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomised steps (current commands are deterministic)")
    common.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")

    p = argparse.ArgumentParser(prog="gencompat", description="Exact verification of generalized "
                                "(para)complex structures compatible with a metric on a Lie algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="verify a structure given by three JSON files")
    v.add_argument("algebra")
    v.add_argument("metric")
    v.add_argument("structure")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", parents=[common], help="reproduce the built-in examples")
    c.add_argument("name", nargs="?", choices=CATALOG_NAMES)
    c.add_argument("--all", action="store_true")
    c.add_argument("--curve-samples", type=_samples, default=None, metavar="a,b,c",
                   help="rational parameters s = tan(t/2) for curve entries")
    c.set_defaults(func=cmd_catalog)

    i = sub.add_parser("interpolate", parents=[common], help="evaluate a curve of structures at s = tan(t/2)")
    i.add_argument("entry")
    i.add_argument("s", type=_rational_arg)
    i.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    i.set_defaults(func=cmd_interpolate)

    e = sub.add_parser("export", parents=[common], help="write a catalog entry as JSON files")
    e.add_argument("name", choices=CATALOG_NAMES)
    e.add_argument("--out", default=".", help="output directory")
    e.set_defaults(func=cmd_export)
    for parser in (p, v, c, i, e):
        parser._negative_number_matcher = _NEGATIVE_VALUE
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_entry():
    sys.exit(main())
