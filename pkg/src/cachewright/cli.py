"""Command-line front end.

Subcommands: roundtrip (push one file through a scheme end to end), verify
(exhaustive decode check over D), tradeoff (CSV of the known curve), and
converse (generate and check a lower-bound certificate). Exit codes: 0 all
checks passed, 1 a verification or certificate check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from . import baselines, coded_placement
from .converse import (
    case1_certificate,
    case2_certificate,
    check_certificate,
    in_case1_range,
    in_case2_range,
    serialize_certificate,
)
from .converse.tightness import tightness_check
from .errors import CachewrightError, DemandNotInD
from .model import NetworkConfig, in_demand_set, split_file, surjection_count
from .tradeoff import assemble_known_curve, emit_csv
from .verify import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CACHEWRIGHT_JOBS", "1")))
    except ValueError:
        return 1


def _parse_demand(text: str, k: int) -> tuple[int, ...]:
    try:
        demand = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise CachewrightError(f"demand {text!r} is not comma-separated integers") from exc
    if len(demand) != k:
        raise CachewrightError(f"demand {text!r} does not list {k} file indices")
    return demand


def _filler(matching: bytes, index: int) -> bytes:
    rng = random.Random(f"cachewright-filler-{index}")
    return bytes(rng.randrange(256) for _ in range(len(matching)))


def cmd_roundtrip(args) -> int:
    cfg = NetworkConfig(args.n, args.k, args.prime or 0)
    demand = _parse_demand(args.demand, args.k)
    user = args.user
    if not 1 <= user <= args.k:
        raise CachewrightError(f"--user {user} outside [1, {args.k}]")
    with open(args.input, "rb") as fh:
        payload = fh.read()
    wanted = demand[user - 1]
    blobs = [payload if n == wanted else _filler(payload, n) for n in range(1, args.n + 1)]

    if args.scheme == "new":
        if not in_demand_set(demand, cfg):
            raise DemandNotInD(f"demand {demand} does not request every file")
        library = [split_file(b, cfg) for b in blobs]
        caches = coded_placement.place(library, cfg)
        broadcast = coded_placement.deliver(library, demand, cfg)
        decoded = coded_placement.decode(caches[user - 1], broadcast, cfg)
        f_sym = cfg.subfiles_per_file * library[0].subfile_len
        memory = Fraction(caches[user - 1].symbol_count, f_sym)
        rate = Fraction(broadcast.symbol_count, f_sym)
    else:
        library = [baselines.man_split(b, cfg) for b in blobs]
        caches = baselines.man_place(library, cfg)
        packet = baselines.man_deliver(library, demand, cfg)
        decoded = baselines.man_decode(caches[user - 1], packet, demand, cfg)
        f_sym = cfg.k * library[0].subfile_len
        memory = Fraction(caches[user - 1].symbol_count, f_sym)
        rate = Fraction(len(packet), f_sym)

    with open(args.out, "wb") as fh:
        fh.write(decoded)
    print(f"M = {memory}")
    print(f"R = {rate}")
    if decoded != payload:
        print("roundtrip FAILED: decoded bytes differ from input", file=sys.stderr)
        return EXIT_FAIL
    print(f"roundtrip OK: user {user} recovered file {wanted} "
          f"({len(payload)} bytes)")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.k > 8 and not args.force:
        raise CachewrightError(
            f"K = {args.k} would enumerate {surjection_count(args.n, args.k)} demands; "
            "pass --force to run anyway")
    report = run_verification(args.n, args.k, args.scheme, jobs=args.jobs,
                              p=args.prime)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_tradeoff(args) -> int:
    curve = assemble_known_curve(args.n, args.k)
    text = emit_csv(curve, args.samples)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --theorem keys map onto the two bound families by their case number
_FAMILIES = {"2": (1, case1_certificate, in_case1_range),
             "4": (2, case2_certificate, in_case2_range)}


def cmd_converse(args) -> int:
    if args.theorem == "auto":
        chosen = [key for key, (_, _, in_range) in _FAMILIES.items()
                  if in_range(args.n, args.k)]
        if not chosen:
            raise CachewrightError(f"({args.n}, {args.k}) fits neither bound family")
    else:
        chosen = [args.theorem]

    ok = True
    dumps = []
    for key in chosen:
        case, generate, _ = _FAMILIES[key]
        cert = generate(args.n, args.k)
        report = check_certificate(cert)
        tight = tightness_check(args.n, args.k)
        entry = next(e for e in tight.entries if e.case == case)
        print(f"{cert.target_text()} {report.verdict}; "
              f"tight at M={entry.memory}: bound {entry.bound_rate} vs "
              f"achievable {entry.achievable_rate}; axioms={report.axiom_count}")
        if not report.ok:
            print(f"  reason: {report.reason}", file=sys.stderr)
            ok = False
        dumps.append(serialize_certificate(cert))
    if args.dump:
        with open(args.dump, "w", encoding="utf-8", newline="") as fh:
            fh.write("".join(dumps))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cachewright",
        description="Coded-caching schemes, tradeoff curves, and converse certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scheme=False):
        p.add_argument("--n", type=int, required=True, help="number of files")
        p.add_argument("--k", type=int, required=True, help="number of users")
        p.add_argument("--prime", type=int, default=None,
                       help="field modulus (default: auto)")
        if scheme:
            p.add_argument("--scheme", choices=("new", "man"), default="new")

    p = sub.add_parser("roundtrip", help="split, place, deliver, decode one file")
    common(p, scheme=True)
    p.add_argument("input", help="path of the file to push through the scheme")
    p.add_argument("--demand", required=True, help="comma-separated file indices")
    p.add_argument("--user", type=int, default=1, help="which user decodes")
    p.add_argument("--out", required=True, help="where to write the decoded bytes")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("verify", help="decode every demand in D, every user")
    common(p, scheme=True)
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="parallel workers (env CACHEWRIGHT_JOBS)")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.add_argument("--force", action="store_true",
                   help="lift the K <= 8 enumeration guard")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tradeoff", help="emit the known rate-memory curve as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=33)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("converse", help="generate and check a lower-bound certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theorem", choices=("2", "4", "auto"), default="auto",
                   help="2: many-files bound, 4: few-files bound")
    p.add_argument("--dump", default=None, help="write the certificate text here")
    p.set_defaults(func=cmd_converse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CachewrightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
