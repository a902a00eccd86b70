"""Command-line surface.

Exit codes: 0 success / verified, 1 a verification refuted, 2 invalid input.
Tables are for humans; csv and json-lines are the machine contract (all
integers serialized as decimal strings).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cache as seqcache
from .congruence import (
    density_scan,
    good_check,
    predict,
    verify_congruence,
)
from .habiro import fishburn, hikami_sequence
from .lfunc import (
    PeriodicChi,
    ThetaDatum,
    h_sequence,
    h_via_stirling,
    hikami_datum,
)

SCHEMA = "fishcong/1"


class CliError(Exception):
    pass


def load_chi_file(path) -> PeriodicChi:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read character file {path}: {exc}")
    if not isinstance(data, dict) or "period" not in data or "values" not in data:
        raise CliError(f"character file {path} needs 'period' and 'values'")
    period, values = data["period"], data["values"]
    if (not isinstance(period, int) or not isinstance(values, list)
            or len(values) != period
            or not all(isinstance(v, int) for v in values)):
        raise CliError(f"character file {path}: 'values' must be a list of "
                       f"{period} integers")
    try:
        return PeriodicChi(values)
    except ValueError as exc:
        raise CliError(f"character file {path}: {exc}")


def emit_sequence(values, fmt, out=None):
    out = out or sys.stdout
    if fmt == "table":
        width = max(len(str(len(values) - 1)), 1)
        for n, v in enumerate(values):
            print(f"{n:>{width}}  {v}", file=out)
    elif fmt == "csv":
        print("n,value", file=out)
        for n, v in enumerate(values):
            print(f"{n},{v}", file=out)
    else:
        for n, v in enumerate(values):
            print(json.dumps({"schema": SCHEMA, "n": n, "value": str(v)}),
                  file=out)


def _sequence_for(args, count):
    """Resolve the sequence source for verify/strange style commands."""
    if getattr(args, "sequence_file", None):
        try:
            lines = Path(args.sequence_file).read_text().split()
            seq = [int(v) for v in lines]
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot read sequence file: {exc}")
        return seq
    source = args.source
    if source == "fishburn":
        return seqcache.get_sequence(args.cache_dir, "fishburn", count,
                                     lambda n: fishburn(n))
    m, alpha = args.m, args.alpha
    if m is None or alpha is None:
        raise CliError("--source hikami requires --m and --alpha")
    key = f"hikami_m{m}_a{alpha}"
    return seqcache.get_sequence(args.cache_dir, key, count,
                                 lambda n: hikami_sequence(m, alpha, n))


def cmd_fishburn(args):
    values = seqcache.get_sequence(args.cache_dir, "fishburn", args.count,
                                   lambda n: fishburn(n))
    emit_sequence(values, args.format)
    return 0


def cmd_hikami(args):
    key = f"hikami_m{args.m}_a{args.alpha}"
    values = seqcache.get_sequence(
        args.cache_dir, key, args.count,
        lambda n: hikami_sequence(args.m, args.alpha, n))
    emit_sequence(values, args.format)
    return 0


def cmd_hsequence(args):
    chi = load_chi_file(args.chi_file)
    datum = ThetaDatum(args.a, args.b, chi)
    if args.method in ("lvalue", "both"):
        primary = h_sequence(datum, args.count).values
    else:
        primary = h_via_stirling(datum, args.count).values
    if args.method == "both":
        other = h_via_stirling(datum, args.count).values
        diffs = [x - y for x, y in zip(primary, other)]
        emit_sequence(primary, args.format)
        print(f"# stirling-path max |difference|: {max(map(abs, diffs))}")
        return 0 if not any(diffs) else 1
    emit_sequence(primary, args.format)
    return 0


def cmd_predict(args):
    chi = load_chi_file(args.chi_file)
    datum = ThetaDatum(args.a, args.b, chi)
    claims = predict(datum, args.pmax)
    if args.format == "table":
        print(f"{'p':>6} {'B':>4}  source")
        for c in claims:
            print(f"{c.p:>6} {c.B:>4}  {c.source}")
    else:
        for c in claims:
            print(json.dumps({"schema": SCHEMA, **c.as_record()}))
    return 0


def cmd_verify(args):
    if args.claims_file:
        try:
            records = json.loads(Path(args.claims_file).read_text())
            triples = [(int(r["p"]), int(r["A"]), int(r["B"]))
                       for r in records]
        except (OSError, ValueError, TypeError, KeyError) as exc:
            raise CliError(f"cannot read claims file: {exc}")
    elif args.p is not None and args.A is not None and args.B is not None:
        triples = [(args.p, args.A, args.B)]
    else:
        raise CliError("need either --claims-file or all of --p/--A/--B")
    needed = max(p ** a * args.nmax - b for p, a, b in triples) + 1
    seq = _sequence_for(args, needed)
    refuted = False
    for p, a, b in triples:
        try:
            claim = verify_congruence(seq, p, a, b, args.nmax)
        except ValueError as exc:
            raise CliError(str(exc))
        print(json.dumps({"schema": SCHEMA, **claim.as_record()}))
        refuted = refuted or claim.status == "refuted"
    return 1 if refuted else 0


def cmd_goodcheck(args):
    chi = load_chi_file(args.chi_file)
    try:
        result = good_check(chi)
    except ValueError as exc:
        raise CliError(str(exc))
    if result.good:
        print("good")
        for u, v, c in result.pairs:
            print(f"  +1 at {u} pairs -1 at {v} via C = {c}")
        return 0
    print(f"not good: {result.reason}")
    return 1


def cmd_density(args):
    report = density_scan(args.a, args.b, args.pmax)
    print(json.dumps({
        "schema": SCHEMA,
        "fraction": report.fraction,
        "primes_considered": report.total_primes,
        "minus_count": len(report.minus_primes),
        "claim_count": len(report.claim_primes),
        "residue_classes": list(report.residue_classes),
        "guaranteed": report.guaranteed,
        "note": report.note,
    }))
    return 0


def cmd_strange(args):
    try:
        datum = hikami_datum(args.m, args.alpha)
        key = f"hikami_m{args.m}_a{args.alpha}"
        xi = seqcache.get_sequence(
            args.cache_dir, key, args.count,
            lambda n: hikami_sequence(args.m, args.alpha, n))
    except ValueError as exc:
        raise CliError(str(exc))
    hs = h_sequence(datum, args.count).values
    constant = Fraction(hs[0], xi[0]) if xi[0] else None
    if constant is None:
        raise CliError("leading sequence value is zero; cannot detect ratio")
    deviation = max(abs(h - constant * x) for h, x in zip(hs, xi))
    print(json.dumps({
        "schema": SCHEMA,
        "m": args.m,
        "alpha": args.alpha,
        "count": args.count,
        "constant": str(constant),
        "max_deviation": str(deviation),
    }))
    return 0 if deviation == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fishcong",
        description="Exact Fishburn-type sequences, their L-value twins, "
                    "and prime-power congruence prediction/verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True, fmt=True):
        if cache:
            p.add_argument("--cache-dir", default=None,
                           help="sequence cache directory "
                                "(default: $FISHCONG_CACHE_DIR or ~/.fishcong)")
        if fmt:
            p.add_argument("--format", choices=("table", "csv", "json-lines"),
                           default="table")

    p = sub.add_parser("fishburn", help="print Fishburn numbers")
    p.add_argument("--count", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_fishburn)

    p = sub.add_parser("hikami", help="print a nested-sum sequence")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_hikami)

    p = sub.add_parser("hsequence", help="Taylor coefficients via L-values")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--chi-file", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--method", choices=("lvalue", "stirling", "both"),
                   default="lvalue")
    common(p, cache=False)
    p.set_defaults(func=cmd_hsequence)

    p = sub.add_parser("predict", help="emit congruence claims")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--chi-file", required=True)
    p.add_argument("--pmax", type=int, required=True)
    common(p, cache=False)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="verify congruence claims empirically")
    p.add_argument("--p", type=int)
    p.add_argument("--A", type=int)
    p.add_argument("--B", type=int)
    p.add_argument("--claims-file")
    p.add_argument("--source", choices=("fishburn", "hikami"),
                   default="fishburn")
    p.add_argument("--m", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--sequence-file")
    p.add_argument("--nmax", type=int, default=20)
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("goodcheck", help="decompose a character into "
                                         "indicator-difference pairs")
    p.add_argument("--chi-file", required=True)
    p.set_defaults(func=cmd_goodcheck)

    p = sub.add_parser("density", help="scan Legendre-symbol density")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("strange", help="detect the proportionality constant "
                                       "between the two sequence routes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--precision", type=int, default=60)
    common(p, fmt=False)
    p.set_defaults(func=cmd_strange)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cache_dir", None) is None and hasattr(args, "cache_dir"):
        args.cache_dir = seqcache.default_cache_dir()
    if getattr(args, "count", 1) < 1:
        print("error: --count must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():  # console script
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
