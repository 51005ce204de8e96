"""Command line interface.

Exit codes: 0 success, 1 identity failure, 2 bad flags or arguments,
3 partition is not neighborly, 4 brute force and DP disagree.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from . import cache
from .hilbert import hp_P_ri, hp_quotient_J
from .hypergraph import build_H_lambda, truncate_H_infinity
from .partitions import ClassKind, Interpretation, Partition, PartitionClass, enumerate_class, is_neighborly
from .qseries import (
    TruncatedSeries,
    andrews_gordon_product_side,
    andrews_gordon_sum_side,
    class_series,
    product_side,
)
from .signature import Method, neighborly_signed_series, signature_bruteforce, signature_fast
from .verify import IDENTITIES, run_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_NEIGHBORLY, EXIT_DISAGREE = 0, 1, 2, 3, 4

SERIES = (
    "neighborly-signed",
    "product",
    "ag-sum",
    "ag-product",
    "gordon-b",
    "gordon-a",
    "distinct-r-signed",
    "hp-p",
    "hp-j",
)


class UsageError(Exception):
    pass


def _interp(args) -> Interpretation:
    return Interpretation(args.interp)


def _make_class(args) -> PartitionClass:
    kind = ClassKind(args.cls)
    if kind is ClassKind.ALL:
        return PartitionClass.all()
    return PartitionClass(kind, args.r, args.i, _interp(args))


def cmd_enumerate(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    cls = _make_class(args)
    members = enumerate_class(args.n, cls)
    if args.format == "json":
        doc = {
            "n": args.n,
            "class": args.cls,
            "r": args.r if cls.kind is not ClassKind.ALL else None,
            "i": args.i if cls.kind is not ClassKind.ALL else None,
            "interp": args.interp,
            "count": len(members),
            "partitions": [list(lam.parts) for lam in members],
        }
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for lam in members:
            w.writerow(lam.parts)
        out.write(buf.getvalue())
    else:
        for lam in members:
            out.write(f"{lam}\n")
        out.write(f"count: {len(members)}\n")
    return EXIT_OK


def cmd_signature(args, out) -> int:
    try:
        lam = Partition.parse(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    interp = _interp(args)
    if not is_neighborly(lam, args.r, args.i, interp):
        sys.stderr.write(f"error: {lam} is not ({args.r},{args.i})-neighborly ({interp.value})\n")
        return EXIT_NOT_NEIGHBORLY
    results = []
    if args.method in ("dp", "both"):
        results.append(signature_fast(lam, args.r, args.i, interp))
    if args.method in ("brute", "both"):
        results.append(signature_bruteforce(build_H_lambda(lam, args.r, args.i, interp)))
    agree = len({res.value for res in results}) == 1
    if args.format == "json":
        doc = {
            "partition": list(lam.parts),
            "r": args.r,
            "i": args.i,
            "interp": interp.value,
            "delta": results[0].value,
            "results": [res.to_dict() for res in results],
            "agree": agree,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"partition: {lam}\n")
        out.write(f"r={args.r} i={args.i} interp={interp.value}\n")
        for res in results:
            line = f"delta[{res.method.value}] = {res.value}  (edges: {res.edge_count}"
            if res.spanning_subset_count is not None:
                line += f", spanning subsets: {res.spanning_subset_count}"
            out.write(line + ")\n")
        if agree:
            out.write(f"delta = {results[0].value}\n")
    if not agree:
        sys.stderr.write("error: brute force and DP disagree\n")
        return EXIT_DISAGREE
    return EXIT_OK


def _series_builder(args) -> Callable[[], TruncatedSeries]:
    r, i, n = args.r, args.i, args.trunc
    interp = _interp(args)
    which = args.which
    builders = {
        "neighborly-signed": lambda: neighborly_signed_series(r, i, n, interp),
        "product": lambda: product_side(r, i, n),
        "ag-sum": lambda: andrews_gordon_sum_side(r, i, n),
        "ag-product": lambda: andrews_gordon_product_side(r, i, n),
        "gordon-b": lambda: class_series(PartitionClass.gordon_b(r, i), n),
        "gordon-a": lambda: class_series(PartitionClass.gordon_a(r, i), n),
        "distinct-r-signed": lambda: class_series(PartitionClass.distinct_r(r, i), n, signed=True),
        "hp-p": lambda: hp_P_ri(r, i, n, interp, route=args.route),
        "hp-j": lambda: hp_quotient_J(r, i, n),
    }
    return builders[which]


def cmd_series(args, out) -> int:
    if args.trunc < 0:
        raise UsageError("--trunc must be >= 0")
    cache_dir = cache.resolve_cache_dir(args.cache_dir)
    key = args.which if args.which != "hp-p" else f"hp-p-{args.route}"
    series = cache.cached(cache_dir, key, args.r, args.i, args.trunc, args.interp, _series_builder(args))
    if args.format == "csv":
        out.write(series.to_csv())
    else:
        out.write(series.to_json() + "\n")
    return EXIT_OK


def cmd_hypergraph(args, out) -> int:
    if args.infinite:
        if args.max_level < 1:
            raise UsageError("--max-level must be >= 1")
        H = truncate_H_infinity(args.r, args.i, args.max_level)
    else:
        if args.partition is None:
            raise UsageError("give --partition or --infinite")
        try:
            lam = Partition.parse(args.partition)
            H = build_H_lambda(lam, args.r, args.i, _interp(args))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(H.to_json() + "\n")
    else:
        out.write(H.paoh())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.trunc < 0:
        raise UsageError("--trunc must be >= 0")
    if args.identity in ("gordon", "andrews-gordon", "polarization") and args.r < 2:
        raise UsageError(f"--identity {args.identity} needs r >= 2")
    report = run_identity(args.identity, args.r, args.i, args.trunc, _interp(args), args.samples, args.seed)
    if args.format == "json":
        out.write(report.to_json(args.timing) + "\n")
    else:
        out.write(report.to_text(args.timing))
    if not report.passed:
        sys.stderr.write(f"identity {args.identity} fails at n={report.first_failure}\n")
        return EXIT_FAIL
    return EXIT_OK


def _add_ri(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--interp", choices=[x.value for x in Interpretation], default=Interpretation.INDUCED.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gordonlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the partitions of n in a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=[k.value for k in ClassKind], default="all")
    _add_ri(p)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("signature", help="signature of a neighborly partition")
    p.add_argument("--partition", required=True, help='comma-separated parts, e.g. "2,1,1,1"; "" for the empty partition')
    _add_ri(p)
    p.add_argument("--method", choices=["brute", "dp", "both"], default="both")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("series", help="dump a truncated q-series")
    p.add_argument("--which", choices=SERIES, required=True)
    _add_ri(p)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--route", choices=["signature", "numerator"], default="signature", help="hp-p computation route")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--cache-dir", default=None, help=f"persist series here (overridden by ${cache.ENV_VAR})")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("hypergraph", help="show H_lambda or a truncation of H^inf")
    p.add_argument("--partition")
    p.add_argument("--infinite", action="store_true")
    p.add_argument("--max-level", type=int, default=3)
    _add_ri(p)
    p.add_argument("--format", choices=["paoh", "json"], default="paoh")
    p.set_defaults(func=cmd_hypergraph)

    p = sub.add_parser("verify", help="check an identity coefficient by coefficient")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    _add_ri(p)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--samples", type=int, default=50, help="hilbert-prop: number of random hypergraphs")
    p.add_argument("--seed", type=int, default=0, help="hilbert-prop: RNG seed")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timing", action="store_true", help="include wall-clock time (output is then not reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
