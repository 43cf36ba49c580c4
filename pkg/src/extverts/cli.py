"""Command-line front end.

    extverts jack 2,1 [--theta 1/2]
    extverts verify pieri --max-size 4 [--report out.json] [--case "2|1"]
    extverts nekrasov --order 4 [--m 0] [--t1 1] [--t2 2]
    extverts ext-char 2,1 3
    extverts matrix-element 1 2
    extverts cache stats|clear|path

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
import warnings
from pathlib import Path

from . import cache as jack_cache
from .algebra import QSeries, ratfun_equal, ratfun_to_json, rational_from_str, substitute
from .geometry import (
    euler_class, ext_character_hooks, ext_character_ratfun, nekrasov_product, nekrasov_sum,
)
from .partitions import Partition
from .symfunc import format_symfunc, jack
from .verify import SUITES, run_suite
from .vertex import w_matrix_element

DEFAULT_CACHE = Path.home() / ".cache" / "extverts"


class UsageError(Exception):
    pass


def _partition(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _rational(text):
    try:
        return rational_from_str(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(out, text_lines, payload, fmt, rows=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2), file=out)
    elif fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line, file=out)


def cmd_jack(args, out):
    lam = _partition(args.partition)
    j = jack(lam)
    if args.theta is not None:
        j = j.subs({"theta": _rational(args.theta)})
    payload = {
        "partition": str(lam),
        "theta": args.theta or "symbolic",
        "coeffs": [{"partition": str(nu), "coeff": str(c), "coeff_json": ratfun_to_json(c)}
                   for nu, c in sorted(j.terms.items(), reverse=True)],
    }
    rows = [["partition", "coeff"]] + [[str(nu), str(c)] for nu, c in sorted(j.terms.items(), reverse=True)]
    _emit(out, [format_symfunc(j)], payload, args.format, rows)
    return 0


def cmd_verify(args, out):
    if args.max_size < 0 or (args.order is not None and args.order < 0):
        raise UsageError("sizes must be nonnegative")
    if args.max_size > 6:
        warnings.warn(f"max-size {args.max_size} > 6 may take a long time", RuntimeWarning)
    keys = args.case or None
    start = time.perf_counter()
    try:
        results = run_suite(args.suite, args.max_size, args.order, keys=keys, jobs=args.jobs)
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError(f"bad case: {exc}") from exc
    duration = time.perf_counter() - start
    passed = all(r["passed"] for r in results)
    report = {
        "command": ["extverts"] + list(args.argv),
        "parameters": {"suite": args.suite, "max_size": args.max_size, "order": args.order,
                       "cases": args.case},
        "cases": results,
        "passed": passed,
        "n_cases": len(results),
        "n_failed": sum(not r["passed"] for r in results),
        "duration_s": round(duration, 3),
    }
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2))
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {args.suite} {r['key']}" for r in results]
    for r in results:
        if not r["passed"]:
            lines.append(f"  witness {r['key']}: lhs={r['witness']['lhs']} rhs={r['witness']['rhs']}")
    lines.append(f"{args.suite}: {len(results) - report['n_failed']}/{len(results)} passed in {duration:.2f}s")
    rows = [["suite", "key", "passed"]] + [[args.suite, r["key"], int(r["passed"])] for r in results]
    _emit(out, lines, report, args.format, rows)
    return 0 if passed else 1


def cmd_nekrasov(args, out):
    if args.order < 0:
        raise UsageError("order must be nonnegative")
    values = {k: _rational(v) for k, v in (("m", args.m), ("t1", args.t1), ("t2", args.t2)) if v is not None}
    if values.get("t1") == 0 or values.get("t2") == 0:
        raise UsageError("specialization must not annihilate t1*t2")
    fixed, prod = nekrasov_sum(args.order), nekrasov_product(args.order)

    def spec(s):
        return QSeries([substitute(c, values) for c in s.coeffs], s.order)

    fixed, prod = spec(fixed), spec(prod)
    agree = fixed == prod
    payload = {
        "order": args.order,
        "specialize": {k: str(v) for k, v in values.items()},
        "fixed_point_sum": [str(c) for c in fixed.coeffs],
        "product": [str(c) for c in prod.coeffs],
        "agree": agree,
    }
    lines = [f"sum:     {fixed!r}", f"product: {prod!r}"]
    if not agree:
        lines.append("MISMATCH between fixed-point sum and product")
    rows = [["n", "fixed_point_sum", "product"]] + [
        [n, str(a), str(b)] for n, (a, b) in enumerate(zip(fixed.coeffs, prod.coeffs))
    ]
    _emit(out, lines, payload, args.format, rows)
    return 0 if agree else 1


def cmd_ext_char(args, out):
    lam, mu = _partition(args.lam), _partition(args.mu)
    hooks = ext_character_hooks(lam, mu)
    via_ratfun = ext_character_ratfun(lam, mu)
    e = euler_class(hooks, mass_on=True)
    payload = {
        "lambda": str(lam), "mu": str(mu),
        "character": hooks.to_json(),
        "routes_agree": hooks == via_ratfun,
        "euler_class": e.to_json(),
        "euler_value": str(e.value()),
    }
    lines = [f"[E] = {hooks!r}", f"routes agree: {hooks == via_ratfun}", f"e(E) = {e.value()}"]
    rows = [["e1", "e2", "mult"]] + [[a, b, k] for (a, b), k in hooks.items()]
    _emit(out, lines, payload, args.format, rows)
    return 0 if hooks == via_ratfun else 1


def cmd_matrix_element(args, out):
    lam, mu = _partition(args.lam), _partition(args.mu)
    w = w_matrix_element(lam, mu)
    zpow = mu.size - lam.size
    value = w.at(zpow)
    payload = {"lambda": str(lam), "mu": str(mu), "zpower": zpow,
               "value": ratfun_to_json(value), "value_text": str(value)}
    expected = euler_class(ext_character_hooks(lam, mu)).value()
    ok = w.support() == [zpow] and ratfun_equal(value, expected)
    rows = [["lambda", "mu", "zpower", "value"], [str(lam), str(mu), zpow, str(value)]]
    _emit(out, [f"<Gamma f_{lam}, f_{mu}> = ({value}) z^{zpow}",
                f"matches Euler class: {ok}"], payload, args.format, rows)
    return 0 if ok else 1


def cmd_cache(args, out):
    c = jack_cache.default_cache()
    if args.action == "path":
        print(c.path, file=out)
    elif args.action == "clear":
        c.clear()
        print(f"cleared {c.path}", file=out)
    else:
        st = c.stats()
        if args.format == "json":
            print(json.dumps(st), file=out)
        else:
            print(f"entries: {st['entries']}\nmax degree: {st['max_degree']}\npath: {st['path']}", file=out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting values given before it
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help=f"Jack cache directory (overrides ${jack_cache.ENV_VAR})")
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="extverts", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jack", parents=[common], help="Jack polynomial in the power-sum basis")
    p.add_argument("partition")
    p.add_argument("--theta", help="exact rational value for theta (default symbolic)")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--order", type=int, help="q-order for the trace suite (default: max-size)")
    p.add_argument("--case", action="append", help="run only this case key (repeatable)")
    p.add_argument("--report", help="write the JSON report to this path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nekrasov", parents=[common], help="instanton partition function, sum and product")
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--m")
    p.add_argument("--t1")
    p.add_argument("--t2")
    p.set_defaults(func=cmd_nekrasov)

    for name, func, helptext in (("ext-char", cmd_ext_char, "Ext character at a fixed pair"),
                                 ("matrix-element", cmd_matrix_element, "<Gamma f_lam, f_mu>")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("lam", help='partition, e.g. "2,1" ("" or 0 for empty)')
        p.add_argument("mu")
        p.set_defaults(func=func)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the Jack cache")
    p.add_argument("action", choices=("stats", "clear", "path"))
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None, out=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    args.format = getattr(args, "format", "text")
    directory = getattr(args, "cache_dir", None) or os.environ.get(jack_cache.ENV_VAR) or DEFAULT_CACHE
    jack_cache.configure(directory)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"extverts: error: {exc}", file=sys.stderr)
        return 2
    except jack_cache.CacheError as exc:
        print(f"extverts: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
