"""Command-line front end: ``pattern-ideals <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 network or cache error.
"""

import argparse
import json
import sys

from .monomials import (
    WeightConfig,
    alexander_dual,
    count_standard_monomials,
    dual_of_family,
    family_ideal,
)
from .oeis import BUNDLED, OEISError, fetch_bfile, match_sequence, validate_id
from .parking import (
    FAMILY_CLASS,
    family_members,
    lambda_parking_functions,
    restricted_parking_functions,
)
from .permclasses import avoiders
from .posets import POSET_KINDS, build_poset, chain_sum_dimension, export_dot, family_poset, hilbert_numerator_check
from .verify import SUITES, run_suite

FAMILY_TAGS = ("W", "S1", "S2", "S3", "T1", "T2", "U", "PERM")
PARKING_OF = {cls: pf for pf, cls in FAMILY_CLASS.items()}

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NETWORK = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text):
    """``"5"`` -> [5]; ``"1..5"`` -> [1, 2, 3, 4, 5]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 1 <= a <= b")
    return list(range(lo, hi + 1))


def parse_weights(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from None


def weight_config(args, n):
    """Weights from ``--u`` / ``--b`` / ``--c``; ``None`` means the standard ones."""
    c = args.c if args.c is not None else 1
    if args.u is not None:
        if len(args.u) != n:
            raise UsageError(f"--u has {len(args.u)} entries but n = {n}")
        return WeightConfig(args.u, c, args.b)
    if args.b is not None or args.c is not None:
        return WeightConfig.arithmetic(n, args.b or 1, c)
    return None


def _needs_standard(args, family):
    if family not in ("W", "PERM") and any(v is not None for v in (args.u, args.b, args.c)):
        raise UsageError(f"family {family} is only defined for u = (1..n), c = 1")


def family_count(family, n, cfg=None, method="box"):
    """Number of standard monomials of the dual, by one of three routes."""
    if method == "box":
        return count_standard_monomials(dual_of_family(family, n, cfg))
    if method == "chain":
        return chain_sum_dimension(family, n, cfg)
    if method == "parking":
        cfg_ = cfg or WeightConfig.standard(n)
        if family == "W":
            return len(restricted_parking_functions(cfg_))
        if family == "PERM":
            return len(lambda_parking_functions(cfg_.lam()))
        return len(family_members(PARKING_OF[family], n))
    raise UsageError(f"unknown method {method!r}")


def _emit(args, obj, text):
    print(json.dumps(obj) if args.json else text)


def cmd_perms(args):
    for n in args.n:
        perms = avoiders(n, args.family)
        if args.json:
            print(json.dumps({"family": args.family, "n": n, "permutations": [list(p) for p in perms]}))
            continue
        sep = "" if n < 10 else " "
        for p in perms:
            print(sep.join(str(x) for x in p))
    return EXIT_OK


def cmd_dual(args):
    _needs_standard(args, args.family)
    for n in args.n:
        cfg = weight_config(args, n)
        if args.method == "closed":
            ideal = dual_of_family(args.family, n, cfg)
        else:
            cfg_ = cfg or WeightConfig.standard(n)
            ideal = alexander_dual(family_ideal(args.family, n, cfg_.u), cfg_.corner)
        if args.json:
            print(ideal.to_json())
        else:
            for g in ideal.generators:
                print(" ".join(str(e) for e in g))
    return EXIT_OK


def _counts(args):
    _needs_standard(args, args.family)
    return [(n, family_count(args.family, n, weight_config(args, n), args.method)) for n in args.n]


def cmd_count(args):
    rows = _counts(args)
    if args.csv:
        for n, v in rows:
            print(f"{args.family},{n},{v}")
    elif args.json:
        print(json.dumps([{"family": args.family, "n": n, "count": v} for n, v in rows]))
    else:
        for _, v in rows:
            print(v)
    return EXIT_OK


def cmd_sequence(args):
    rows = _counts(args)
    if args.csv:
        print("family,n,count")
        for n, v in rows:
            print(f"{args.family},{n},{v}")
    else:
        _emit(args, {"family": args.family, "values": [[n, v] for n, v in rows]}, ", ".join(str(v) for _, v in rows))
    return EXIT_OK


def cmd_verify(args):
    res = run_suite(args.suite, args.max_n, offline=args.offline, cache=args.cache_dir)
    if args.json:
        print(json.dumps({"suite": res.name, "ok": res.ok, "lines": res.lines}))
    else:
        for line in res.lines:
            print(line)
        print(f"{res.name}: {'ok' if res.ok else 'FAILED'}")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_hilbert(args):
    _needs_standard(args, args.family)
    ok = True
    for n in args.n:
        good = hilbert_numerator_check(args.family, n, weight_config(args, n))
        ok = ok and good
        print(f"{args.family} n={n}: {'PASS' if good else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oeis(args):
    ids = args.candidates or list(BUNDLED)
    for seq_id in ids:
        validate_id(seq_id)
    rows = _counts(args)
    bfiles = [fetch_bfile(seq_id, offline=args.offline, cache=args.cache_dir) for seq_id in ids]
    report = match_sequence(rows, bfiles, family=args.family)
    if args.json:
        print(json.dumps({
            "family": report.family,
            "values": [[n, v] for n, v in report.values],
            "candidates": [{"id": m.id, "shift": m.shift, "length": m.length, "full": m.full} for m in report.candidates],
        }))
    else:
        for line in report.lines():
            print(line)
    return EXIT_OK


def cmd_export_poset(args):
    n = args.n[0]
    if args.kind:
        poset = build_poset(args.kind, n, weight_config(args, n))
    else:
        _needs_standard(args, args.family)
        poset = family_poset(args.family, n, weight_config(args, n))
    sys.stdout.write(export_dot(poset))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILY_TAGS, default="W")
    common.add_argument("--n", type=parse_range, default=[3], help="an integer or a range a..b")
    common.add_argument("--u", type=parse_weights, help="weights u_1 < ... < u_n as a comma list")
    common.add_argument("--b", type=int, help="step of an arithmetic weight vector")
    common.add_argument("--c", type=int, help="shift c >= 1")
    common.add_argument("--json", action="store_true")
    common.add_argument("--csv", action="store_true", help="rows family,n,count")

    counting = argparse.ArgumentParser(add_help=False)
    counting.add_argument("--method", choices=("box", "chain", "parking"), default="box")

    network = argparse.ArgumentParser(add_help=False)
    network.add_argument("--offline", action="store_true", help="use only the cache and bundled snapshots")
    network.add_argument("--cache-dir", help="b-file cache directory")

    parser = argparse.ArgumentParser(prog="pattern-ideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("perms", parents=[common], help="list a pattern class").set_defaults(func=cmd_perms)
    p = sub.add_parser("dual", parents=[common], help="print dual generators")
    p.add_argument("--method", choices=("generic", "closed"), default="closed")
    p.set_defaults(func=cmd_dual)
    sub.add_parser("count", parents=[common, counting], help="count standard monomials").set_defaults(func=cmd_count)
    sub.add_parser("sequence", parents=[common, counting], help="counts over a range of n").set_defaults(func=cmd_sequence)
    p = sub.add_parser("verify", parents=[network], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    sub.add_parser("hilbert", parents=[common], help="check the Hilbert numerator identity").set_defaults(func=cmd_hilbert)
    p = sub.add_parser("oeis", parents=[common, counting, network], help="match counts against b-files")
    p.add_argument("--candidates", type=lambda s: [x.strip() for x in s.split(",") if x.strip()])
    p.set_defaults(func=cmd_oeis)
    p = sub.add_parser("export-poset", parents=[common], help="DOT Hasse diagram")
    p.add_argument("--kind", choices=POSET_KINDS)
    p.set_defaults(func=cmd_export_poset)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except OEISError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
