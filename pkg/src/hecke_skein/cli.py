"""Command line driver: ``skein verify ...`` and ``skein compute ...``."""

from __future__ import annotations

import argparse
import sys

from . import verify as V
from .annulus import pi_sum, power_sum
from .closure import braid_trace, writhe
from .hecke import validate_word
from .scalars import qint, v
from .threading_map import thread_braid


def parse_braid(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        letters = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"braid must be comma-separated integers, got {text!r}") from exc
    if any(x == 0 for x in letters):
        raise argparse.ArgumentTypeError("braid letters must be nonzero")
    return letters


def _min_strands(letters: list[int]) -> int:
    return max((abs(x) for x in letters), default=0) + 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skein", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH", help="write line-delimited JSON records here")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised property checks")

    verify = sub.add_parser("verify", help="run identity checks")
    checks = verify.add_subparsers(dest="check", required=True)
    p = checks.add_parser("braidsum", parents=[common])
    p.add_argument("--m-max", type=int, default=8)
    p = checks.add_parser("murphy", parents=[common])
    p.add_argument("--bound", type=int, default=7, help="largest n + m")
    p = checks.add_parser("mirror", parents=[common])
    p.add_argument("--degree", type=int, default=8)
    p = checks.add_parser("adiff", parents=[common])
    p.add_argument("--degree", type=int, default=8)
    p = checks.add_parser("ah", parents=[common])
    p.add_argument("--bound", type=int, default=6, help="largest n + m")
    p = checks.add_parser("centrality", parents=[common])
    p.add_argument("--bound", type=int, default=6)
    p = checks.add_parser("affine", parents=[common])
    p.add_argument("--n-max", type=int, default=5)
    p = checks.add_parser("derived", parents=[common])
    p.add_argument("--alpha-max", type=int, default=4)
    p.add_argument("--pm-max", type=int, default=6)
    p = checks.add_parser("structure", parents=[common])
    p.add_argument("--trials", type=int, default=100)
    checks.add_parser("all", parents=[common])

    compute = sub.add_parser("compute", help="print a single quantity")
    things = compute.add_subparsers(dest="thing", required=True)
    p = things.add_parser("pm", help="P_m in h-coordinates")
    p.add_argument("--m", type=int, required=True)
    p = things.add_parser("thread", help="psi_n of a closed braid")
    p.add_argument("--braid", type=parse_braid, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strands", type=int, default=None)
    p = things.add_parser("trace", help="framed Homfly polynomial of a braid closure")
    p.add_argument("--braid", type=parse_braid, required=True)
    p.add_argument("--strands", type=int, default=None)
    return parser


def _plan(args) -> list:
    check = args.check
    if check == "braidsum":
        return V.plan_braidsum(args.m_max)
    if check == "murphy":
        return V.plan_murphy(args.bound)
    if check == "mirror":
        return V.plan_mirror(args.degree)
    if check == "adiff":
        return V.plan_adiff(args.degree)
    if check == "ah":
        return V.plan_ah(args.bound)
    if check == "centrality":
        return V.plan_centrality(args.bound)
    if check == "affine":
        return V.plan_affine(args.n_max)
    if check == "derived":
        return V.plan_derived(args.alpha_max, args.pm_max)
    if check == "structure":
        return V.plan_structure(args.seed, args.trials)
    return V.plan_all(args.seed)


def run_verify(args) -> int:
    reports = V.run_cases(_plan(args), args.jobs)
    if args.report:
        V.write_report(reports, args.report)
    print(V.summary_table(reports))
    return 1 if any(r.status == V.FAIL for r in reports) else 0


def run_compute(args) -> int:
    if args.thing == "pm":
        if args.m < 1:
            print("error: --m must be at least 1", file=sys.stderr)
            return 2
        p_m = power_sum(args.m)
        print(f"P_{args.m} = {p_m}")
        certified = pi_sum(args.m).exact_div(qint(args.m)) == p_m
        print(f"Pi_{args.m} / [{args.m}] equals P_{args.m}: {certified}")
        return 0 if certified else 1
    strands = args.strands if args.strands is not None else _min_strands(args.braid)
    try:
        validate_word(max(strands, 1), args.braid)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.thing == "thread":
        print(thread_braid(args.braid, strands, args.n))
        return 0
    framed = braid_trace(args.braid, strands)
    print(f"framed:   {framed}")
    # each positive kink contributes v^-1, so v^writhe removes the framing dependence
    print(f"unframed: {framed * v ** writhe(args.braid)}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return run_verify(args)
    return run_compute(args)


if __name__ == "__main__":
    sys.exit(main())
