"""Command-line interface.

Exit status: 0 on success, 1 when an input violates a map's domain
(the message names the failed predicate), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, orbit, qseries
from .partition import (
    DomainError,
    ParseError,
    PartitionError,
    enumerate_partitions,
    format_partition,
    is_distinct,
    is_regular,
    parse,
    to_json_obj,
)
from .selftest import run_checks

GF_KINDS = {
    "regular-distinct": qseries.gf_regular_distinct,
    "regular-regular": qseries.gf_regular_regular,
    "theorem9": qseries.gf_theorem9,
}


class UsageError(Exception):
    pass


def _modulus(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if m < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {m}")
    return m


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {n}")
    return n


def _order(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime order {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="regdistinct",
        description="Bijections between s-regular t-distinct and t-regular s-distinct partitions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, moduli=True):
        if moduli:
            p.add_argument("--s", type=_modulus, required=True)
            p.add_argument("--t", type=_modulus, required=True)
        p.add_argument("--json", action="store_true", help="machine-readable output")

    for name, help_ in (("map", "apply the bijection"), ("invert", "apply the inverse bijection")):
        p = sub.add_parser(name, help=help_)
        common(p)
        p.add_argument("--order", type=_order, help="comma-separated order of the shared primes")
        p.add_argument("--variant", choices=[v.value for v in bijection.Variant],
                       default=bijection.Variant.PRIME_BASE.value)
        p.add_argument("partition")

    p = sub.add_parser("orbit", help="iterate phi_s o phi_t from a partition")
    common(p)
    p.add_argument("--max-iter", type=_nonneg)
    p.add_argument("partition")

    p = sub.add_parser("census", help="orbit statistics over all s-regular t-distinct partitions of n")
    common(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--max-iter", type=_nonneg)

    p = sub.add_parser("count", help="count partitions of n by brute-force enumeration")
    common(p, moduli=False)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--regular", type=_modulus, action="append", default=[])
    p.add_argument("--distinct", type=_modulus, action="append", default=[])

    p = sub.add_parser("gf", help="expand a generating function")
    common(p, moduli=False)
    p.add_argument("--spec", required=True, help='e.g. "regular-distinct 9 15"')
    p.add_argument("--N", type=_nonneg, default=qseries.DEFAULT_DEGREE)

    p = sub.add_parser("selftest", help="check the worked examples")
    common(p, moduli=False)
    return ap


def _parse_partition(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}")


def _cmd_map(args, out) -> int:
    p = _parse_partition(args.partition)
    mp = bijection.analyze(args.s, args.t)
    try:
        primes = mp.ordered(args.order)
    except ValueError as exc:
        raise UsageError(str(exc))
    cfg = bijection.BijectionConfig(args.order, bijection.Variant(args.variant))
    fn = bijection.forward if args.command == "map" else bijection.inverse
    image = fn(p, args.s, args.t, cfg)
    order = [sp.p for sp in primes]
    if args.json:
        json.dump({"command": args.command, "s": args.s, "t": args.t, "prime_order": order,
                   "variant": cfg.variant.value, "input": to_json_obj(p),
                   "output": to_json_obj(image)}, out)
        out.write("\n")
    else:
        out.write(format_partition(image) + "\n")
    return 0


def _cmd_orbit(args, out) -> int:
    report = orbit.classify_orbit(_parse_partition(args.partition), args.s, args.t, args.max_iter)
    if args.json:
        json.dump(report.to_json_obj(), out)
        out.write("\n")
    else:
        out.write(report.render() + "\n")
    return 0


def _cmd_census(args, out) -> int:
    c = orbit.census(args.n, args.s, args.t, args.max_iter)
    if args.json:
        json.dump(c.to_json_obj(), out)
        out.write("\n")
    else:
        out.write(c.render() + "\n")
    return 0


def _cmd_count(args, out) -> int:
    count = sum(
        1 for p in enumerate_partitions(args.n)
        if all(is_regular(p, m) for m in args.regular) and all(is_distinct(p, m) for m in args.distinct)
    )
    if args.json:
        json.dump({"n": args.n, "regular": args.regular, "distinct": args.distinct, "count": count}, out)
        out.write("\n")
    else:
        out.write(f"{count}\n")
    return 0


def _cmd_gf(args, out) -> int:
    words = args.spec.split()
    if len(words) != 3 or words[0] not in GF_KINDS:
        raise UsageError(f"--spec must be '{{{'|'.join(GF_KINDS)}}} S T', got {args.spec!r}")
    try:
        s, t = _modulus(words[1]), _modulus(words[2])
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc))
    series = GF_KINDS[words[0]](s, t, args.N)
    if args.json:
        json.dump({"kind": words[0], "s": s, "t": t, "N": args.N, "coefficients": list(series)}, out)
        out.write("\n")
    else:
        out.write(qseries.render(series) + "\n")
    return 0


def _cmd_selftest(args, out) -> int:
    results = run_checks()
    if args.json:
        json.dump({"checks": [{"name": n, "passed": ok} for n, ok in results],
                   "passed": all(ok for _, ok in results)}, out)
        out.write("\n")
    else:
        for name, ok in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    return 0 if all(ok for _, ok in results) else 1


COMMANDS = {
    "map": _cmd_map,
    "invert": _cmd_map,
    "orbit": _cmd_orbit,
    "census": _cmd_census,
    "count": _cmd_count,
    "gf": _cmd_gf,
    "selftest": _cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{parser.prog}: error: {exc}\n")
        return 2
    except (DomainError, PartitionError, ValueError) as exc:
        err.write(f"{parser.prog}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
