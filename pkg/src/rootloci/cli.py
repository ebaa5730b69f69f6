"""Command-line front end.

Every computation is exposed as a subcommand with deterministic output
in json, csv, or plain text.  Rational flags are written as "p/q"
strings; no floating point anywhere.  Exit codes: 0 success, 1
verification failure, 2 usage error (argparse default).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import partitions as pt
from .ideals import (dual_ring_spanning, generator_degrees,
                     hilbert_series_theorem, ideal_dimension,
                     ideal_dimension_mod)
from .interp import interp_jack, modified_interp_jack
from .jack import jack, modified_jack, specialize_theta
from .macdonald import macdonald, modified_macdonald, specialize_q
from .patterns import double_diagonal, pfold
from .sympoly import to_json_dict
from .verify import CRITERIA, VerifyConfig


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _t0_value(text: str) -> Fraction:
    value = _fraction(text)
    if value in (0, 1, -1):
        raise argparse.ArgumentTypeError("t0 must avoid 0, 1, -1")
    return value


def _partition(text: str) -> tuple:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from exc
    if any(a < b for a, b in zip(parts[1:], parts)):
        pass  # checked below; argparse message would hide detail
    return parts


def _prime(text: str) -> int:
    value = int(text)
    if value <= 2 ** 30:
        raise argparse.ArgumentTypeError("prime must exceed 2^30")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootloci")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, degree=False, max_degree=False):
        p.add_argument("--n", type=int, required=True)
        if degree:
            p.add_argument("--degree", type=int, required=True)
        if max_degree:
            p.add_argument("--max-degree", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--out", default=None)

    p = sub.add_parser("admissible", help="list admissible partitions")
    common(p, degree=True)

    p = sub.add_parser("hilbert", help="series vs kernel dimensions")
    common(p, max_degree=True)
    p.add_argument("--mod-prime", type=_prime, default=None)

    p = sub.add_parser("jack", help="emit a (modified) polynomial")
    common(p)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--theta", type=_fraction, default=None,
                   help='specialize, e.g. "-1/2" (default: symbolic)')
    p.add_argument("--modified", action="store_true")

    p = sub.add_parser("macdonald", help="emit a (modified) polynomial")
    common(p)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--t0", type=_t0_value, action="append", required=True)
    p.add_argument("--q0", type=_fraction, default=None,
                   help="specialize q (default: symbolic)")
    p.add_argument("--modified", action="store_true")

    p = sub.add_parser("interp", help="emit an interpolation polynomial")
    common(p)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--theta", type=_fraction, default=None)
    p.add_argument("--modified", action="store_true")

    p = sub.add_parser("gendeg", help="generator-degree multiset")
    common(p, max_degree=True)
    p.add_argument("--p", type=int, default=None,
                   help="p-fold pattern instead of the double diagonal")

    p = sub.add_parser("companions", help="exhaustive collision search")
    common(p, degree=True)

    p = sub.add_parser("dualring", help="dual-ring spanning table")
    common(p, max_degree=True)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--t0", type=_t0_value, action="append", default=None)
    p.add_argument("--theta", type=_fraction, default=Fraction(-1, 2))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    return ap


def _emit_rows(header, rows, fmt, sink):
    if fmt == "json":
        doc = {"schema": 1, "columns": list(header),
               "rows": [list(r) for r in rows]}
        sink.write(json.dumps(doc, indent=2, default=str) + "\n")
    elif fmt == "csv":
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow(r)
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows
                  else len(str(h)) for i, h in enumerate(header)]
        sink.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            sink.write("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _emit_poly(f, args, sink, extra=None):
    doc = to_json_dict(f, extra)
    if args.format == "json":
        sink.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(("partition", "num", "den"))
        for t in doc["terms"]:
            w.writerow((" ".join(map(str, t["partition"])), t["num"], t["den"]))
    else:
        for t in doc["terms"]:
            sink.write(f"m[{','.join(map(str, t['partition']))}]  "
                       f"({t['num']}) / ({t['den']})\n")


def _cmd_admissible(args, sink):
    rows = []
    for lam in pt.admissible_partitions(args.n, args.degree):
        tag = pt.classify(lam)
        rows.append((",".join(map(str, lam)), tag.case.value,
                     ",".join(map(str, tag.companion)) if tag.companion else ""))
    _emit_rows(("partition", "case", "companion"), rows, args.format, sink)
    return 0


def _cmd_hilbert(args, sink):
    series = hilbert_series_theorem(args.n, args.max_degree)
    rows = []
    ok = True
    for d in range(args.max_degree + 1):
        spec = double_diagonal(args.n)
        dim = ideal_dimension(spec, d)
        cnt = len(pt.admissible_partitions(args.n, d))
        match = dim == series[d] == cnt
        if args.mod_prime:
            match = match and ideal_dimension_mod(spec, d, args.mod_prime) == dim
        ok = ok and match
        rows.append((args.n, d, dim, cnt, series[d], "yes" if match else "NO"))
    _emit_rows(("n", "d", "dim", "admissible_count", "series_coeff", "match"),
               rows, args.format, sink)
    return 0 if ok else 1


def _cmd_jack(args, sink):
    lam = pt.check_partition(args.partition + (0,) * (args.n - len(args.partition)))
    f = modified_jack(lam, args.n) if args.modified else jack(lam, args.n)
    if args.theta is not None:
        f = specialize_theta(f, args.theta)
    _emit_poly(f, args, sink)
    return 0


def _cmd_macdonald(args, sink):
    lam = pt.check_partition(args.partition + (0,) * (args.n - len(args.partition)))
    t0 = args.t0[0]
    f = (modified_macdonald(lam, args.n, t0) if args.modified
         else macdonald(lam, args.n, t0))
    if args.q0 is not None:
        f = specialize_q(f, args.q0)
    _emit_poly(f, args, sink, extra={"t0": str(t0)})
    return 0


def _cmd_interp(args, sink):
    lam = pt.check_partition(args.partition + (0,) * (args.n - len(args.partition)))
    f = (modified_interp_jack(lam, args.n) if args.modified
         else interp_jack(lam, args.n))
    if args.theta is not None:
        f = specialize_theta(f, args.theta)
    _emit_poly(f, args, sink)
    return 0


def _cmd_gendeg(args, sink):
    spec = pfold(args.n, args.p) if args.p else double_diagonal(args.n)
    degrees = generator_degrees(spec, args.max_degree)
    if args.format == "json":
        sink.write(json.dumps({"schema": 1, "n": args.n,
                               "p": args.p, "max_degree": args.max_degree,
                               "degrees": degrees}) + "\n")
    else:
        _emit_rows(("degree",), [(d,) for d in degrees], args.format, sink)
    return 0


def _cmd_companions(args, sink):
    rows = []
    for lam in pt.enumerate_partitions(args.n, args.degree):
        if not pt.is_admissible(lam):
            continue
        found = pt.companions_bruteforce(lam)
        rows.append((",".join(map(str, lam)),
                     ";".join(",".join(map(str, mu)) for mu in found)))
    _emit_rows(("partition", "collision_partners"), rows, args.format, sink)
    return 0


def _cmd_dualring(args, sink):
    rows = []
    ok = True
    for d in range(args.max_degree + 1):
        quotient, admissible = dual_ring_spanning(args.n, d)
        ok = ok and quotient == admissible
        rows.append((args.n, d, quotient, admissible,
                     "yes" if quotient == admissible else "NO"))
    _emit_rows(("n", "d", "quotient_dim", "admissible_count", "match"),
               rows, args.format, sink)
    return 0 if ok else 1


def _cmd_verify(args, sink):
    cfg = VerifyConfig(seed=args.seed)
    if args.t0:
        cfg.t0_list = list(args.t0)
    all_ok = True
    for num, name, fn in CRITERIA:
        ok, detail = fn(cfg)
        all_ok = all_ok and ok
        sink.write(f"criterion {num:2d} ({name}): "
                   f"{'PASS' if ok else 'FAIL'} - {detail}\n")
        sink.flush()
    sink.write("ALL PASS\n" if all_ok else "FAILURES PRESENT\n")
    return 0 if all_ok else 1


_COMMANDS = {
    "admissible": _cmd_admissible,
    "hilbert": _cmd_hilbert,
    "jack": _cmd_jack,
    "macdonald": _cmd_macdonald,
    "interp": _cmd_interp,
    "gendeg": _cmd_gendeg,
    "companions": _cmd_companions,
    "dualring": _cmd_dualring,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    code = _COMMANDS[args.command](args, buf)
    text = buf.getvalue()
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
