"""Command line front end: ``plethysm {coeff,sequence,fit,verify,cache}``.

Exit codes: 0 success, 1 verification failed, 2 invalid input (e.g. size
mismatch), 3 resource guard tripped, 4 fitting failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cache import ValueCache, default_cache_dir
from .errors import FitError, InvalidInputError, ResourceLimitError
from .partitions import format_partition, parse_partition, partitions_of
from .quasipoly import (DEFAULT_MAX_PERIOD, fit_with_report, read_csv, samples_needed,
                        write_csv)
from .sequences import SequenceTable
from .verify import default_generic_bounds, verify_instance

EXIT_FAILED, EXIT_INVALID, EXIT_RESOURCE, EXIT_FIT = 1, 2, 3, 4


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _cache(args) -> Optional[ValueCache]:
    return None if args.no_cache else ValueCache(default_cache_dir())


def cmd_coeff(args) -> int:
    from .symfunc import plethysm_coefficient, plethysm_coefficient_fast, tensor_multiplicity

    mu, pi = args.mu, args.pi
    if (args.k is None) == (args.inner is None):
        raise InvalidInputError("give exactly one of --k and --lambda")
    if args.inner is not None:
        if args.engine != "symfunc":
            raise InvalidInputError("the hwv engine needs --k")
        if sum(pi) != sum(mu) * sum(args.inner):
            raise InvalidInputError(f"|pi| = {sum(pi)} but |mu|*|lambda| = {sum(mu) * sum(args.inner)}")
        value = plethysm_coefficient(mu, args.inner, pi)
        record = {"mu": list(mu), "lambda": list(args.inner), "pi": list(pi), "a": value}
        _emit(args, record, str(value))
        return 0
    p, k = sum(mu), args.k
    if sum(pi) != p * k:
        raise InvalidInputError(f"|pi| = {sum(pi)} but |mu|*k = {p * k}")
    if args.engine == "hwv":
        from .hwv import multiplicity_by_character

        value = multiplicity_by_character(pi, p, k, mu, budget=args.term_budget) if len(pi) <= p else 0
    else:
        value = plethysm_coefficient_fast(mu, k, pi)
    record = {"mu": list(mu), "k": k, "pi": list(pi), "a": value, "engine": args.engine}
    text = str(value)
    if args.c:
        record["c"] = tensor_multiplicity(pi, p, k)
        text += f"\nc={record['c']}"
    _emit(args, record, text)
    return 0


def _requests(args, p: int):
    mus = [args.mu] if args.mu is not None else list(partitions_of(p))
    if args.mu is not None and sum(args.mu) != p:
        raise InvalidInputError(f"mu must be a partition of p={p}")
    out = []
    if args.what in ("c", "both"):
        out.append(("c", None))
    if args.what in ("a", "both"):
        out += [("a", mu) for mu in mus]
    return out


def _label(kind: str, mu) -> str:
    return "c" if kind == "c" else f"a[{format_partition(mu)}]"


def cmd_sequence(args) -> int:
    table = SequenceTable(args.inner, args.p, args.k, cache=_cache(args), jobs=args.jobs)
    requests = _requests(args, args.p)
    data = table.fetch(requests, args.dmax)
    if args.json:
        record = {"lambda": list(table.la), "p": args.p, "k": args.k, "dmax": args.dmax,
                  "sequences": {_label(kind, mu): values for (kind, mu), values in data.items()}}
        print(json.dumps(record, sort_keys=True))
        return 0
    if len(requests) == 1:
        sys.stdout.write(write_csv(enumerate(data[requests[0]])))
        return 0
    if args.out is None:
        raise InvalidInputError("several sequences requested: use --json, --out DIR, or a single --mu with --what a|c")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for (kind, mu), values in data.items():
        name = "c" if kind == "c" else "a_" + format_partition(mu).replace(",", ".")
        (out_dir / f"{name}.csv").write_text(write_csv(enumerate(values)))
        print(out_dir / f"{name}.csv")
    return 0


def cmd_fit(args) -> int:
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        samples = read_csv(text)
        max_degree = 6 if args.max_degree is None else args.max_degree
        max_period = DEFAULT_MAX_PERIOD if args.max_period is None else args.max_period
    else:
        if args.inner is None or args.p is None or args.k is None:
            raise InvalidInputError("give --input CSV or --lambda/--p/--k to generate a sequence")
        if args.what == "a" and args.mu is None:
            raise InvalidInputError("--what a needs --mu")
        max_degree, max_period = default_generic_bounds(args.inner, args.p, args.k,
                                                        args.max_degree, args.max_period)
        dmax = args.dmax if args.dmax is not None else samples_needed(max_degree, max_period) - 1
        table = SequenceTable(args.inner, args.p, args.k, cache=_cache(args), jobs=args.jobs)
        values = table.c(dmax) if args.what == "c" else table.a(args.mu, dmax)
        samples = list(enumerate(values))
    try:
        report = fit_with_report(samples, max_degree, max_period, args.drop_prefix)
    except FitError as exc:
        record = {"error": type(exc).__name__, "message": str(exc),
                  "tried": list(exc.tried) if exc.tried else None,
                  "bounds": {"max_degree": max_degree, "max_period": max_period},
                  "samples": len(samples)}
        _emit(args, record, f"fit failed: {exc}")
        return EXIT_FIT
    record = report.to_json()
    _emit(args, record, json.dumps(record, sort_keys=True, indent=2))
    return 0


def cmd_verify(args) -> int:
    report = verify_instance(args.inner, args.p, args.k, args.dmax,
                             max_degree=args.max_degree, max_period=args.max_period,
                             cache=_cache(args), jobs=args.jobs)
    if args.json:
        print(json.dumps(report.to_json(timing=args.timing), sort_keys=True))
    else:
        print(report.summary())
        if args.timing:
            print(f"time: {report.seconds:.3f}s")
    return 0 if report.passed else EXIT_FAILED


def cmd_cache(args) -> int:
    cache = ValueCache(default_cache_dir())
    if args.action == "clear":
        cache.clear()
        _emit(args, {"cleared": str(cache.root)}, f"cleared {cache.root}")
    elif args.action == "path":
        _emit(args, {"path": str(cache.root)}, str(cache.root))
    else:
        info = cache.info()
        _emit(args, info, f"{info['path']}: {info['files']} files, {info['bytes']} bytes")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sampling d")

    parser = argparse.ArgumentParser(prog="plethysm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", parents=[common], help="one plethysm coefficient")
    c.add_argument("--mu", type=_partition_arg, required=True)
    c.add_argument("--pi", type=_partition_arg, required=True)
    c.add_argument("--k", type=int, help="inner h_k (fast path)")
    c.add_argument("--lambda", dest="inner", type=_partition_arg, help="inner Schur function s_lambda")
    c.add_argument("--engine", choices=("symfunc", "hwv"), default="symfunc")
    c.add_argument("--c", action="store_true", help="also print c^pi_{|mu|,k}")
    c.add_argument("--term-budget", type=int, default=10**7,
                   help="hwv engine: refuse h_T with more signed terms than this")
    c.set_defaults(func=cmd_coeff)

    s = sub.add_parser("sequence", parents=[common], help="sample c and/or a for d = 0..dmax")
    s.add_argument("--lambda", dest="inner", type=_partition_arg, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mu", type=_partition_arg)
    s.add_argument("--dmax", type=int, default=10)
    s.add_argument("--what", choices=("a", "c", "both"), default="both")
    s.add_argument("--out", help="directory for one CSV file per sequence")
    s.set_defaults(func=cmd_sequence)

    f = sub.add_parser("fit", parents=[common], help="fit a quasi-polynomial")
    f.add_argument("--input", help="CSV file with header d,value ('-' for stdin)")
    f.add_argument("--lambda", dest="inner", type=_partition_arg)
    f.add_argument("--p", type=int)
    f.add_argument("--k", type=int)
    f.add_argument("--mu", type=_partition_arg)
    f.add_argument("--what", choices=("a", "c"), default="c")
    f.add_argument("--dmax", type=int)
    f.add_argument("--max-degree", type=int)
    f.add_argument("--max-period", type=int)
    f.add_argument("--drop-prefix", type=int, default=0)
    f.set_defaults(func=cmd_fit)

    v = sub.add_parser("verify", parents=[common], help="check the asymptotic statement for one instance")
    v.add_argument("--lambda", dest="inner", type=_partition_arg, required=True)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--dmax", type=int)
    v.add_argument("--max-degree", type=int)
    v.add_argument("--max-period", type=int)
    v.add_argument("--timing", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("cache", parents=[common], help="inspect or clear the value cache")
    k.add_argument("action", choices=("info", "clear", "path"), nargs="?", default="info")
    k.set_defaults(func=cmd_cache)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
