"""Command line front end: ``psingular <command> ...`` or ``python -m psingular``."""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from . import verify as V
from .blocks import blocks_symmetric, check_block_bounds
from .characters import census_an, census_sn
from .padic import dl_sylow_classical_p2, dl_sylow_gl, dl_sylow_symmetric, is_prime
from .partitions import Partition, p_core_and_weight


def _primes(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    bad = [p for p in ps if not is_prime(p)]
    if bad:
        raise argparse.ArgumentTypeError(f"not prime: {bad}")
    return ps


def _eps(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError("eps must be +1 or -1")


def _dump(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_core(args) -> int:
    lam = Partition.parse(args.partition)
    cw = p_core_and_weight(lam, args.p)
    _dump({"partition": str(lam), "p": args.p, "core": str(cw.core), "weight": cw.weight})
    return 0


def cmd_census(args) -> int:
    if args.group == "sn":
        np_sn, cdp = census_sn(args.n, args.p)
        obj = {"n": args.n, "p": args.p, "np_sn": np_sn, "cdp_sn": [str(d) for d in sorted(cdp)]}
        if args.json:
            _dump(obj)
        else:
            print(f"S_{args.n} p={args.p}: n_p={np_sn} |cd_p|={len(cdp)}")
        return 0
    cen = census_an(args.n, args.p)
    if args.json:
        _dump(cen.to_json())
    else:
        note = " (S_6-orbits; Aut(A_6) is larger)" if cen.aut_caveat else ""
        print(f"A_{args.n} p={args.p}: n_p(S_n)={cen.np_sn} n_p={cen.np_an} "
              f"n_p*={cen.np_star_an} |cd_p|={len(cen.cdp_an)}{note}")
    return 0


def cmd_blocks(args) -> int:
    reports = [check_block_bounds(b) for b in blocks_symmetric(args.n, args.p)]
    _dump({"n": args.n, "p": args.p, "blocks": [r.to_json() for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def cmd_sylow_dl(args) -> int:
    fam, n, p = args.family, args.n, args.p
    out = {"family": fam, "n": n, "p": p}
    if fam == "sym":
        out["dl"] = dl_sylow_symmetric(n, p)
    elif fam in ("gl", "gu"):
        if args.q is None:
            raise SystemExit("--q is required for gl/gu")
        out["q"] = args.q
        out["dl"] = dl_sylow_gl(n, args.q, 1 if fam == "gl" else -1, p)
    else:
        if args.q is None:
            raise SystemExit(f"--q is required for {fam}")
        if p != 2:
            raise SystemExit(f"{fam} is only covered for p = 2")
        r = dl_sylow_classical_p2(fam.upper().replace("-", "_"), n, args.q)
        out["q"] = args.q
        out["dl"] = {"lo": r.lo, "hi": r.hi, "exact": r.exact}
    _dump(out)
    return 0


def cmd_verify(args) -> int:
    what = args.what
    if what == "sporadic":
        res = V.verify_sporadic(args.data)
    elif what == "alternating":
        res = V.verify_alternating(args.n_min, args.n_max, args.primes, args.exact_dl_max)
    elif what == "blocks":
        res = V.verify_blocks(args.n_max, args.primes)
    elif what == "lemma44":
        res = V.verify_lemma44_checks(args.p, args.k, args.q, args.eps)
    elif what == "families":
        res = V.verify_families(args.n_min, args.n_max, args.primes, corrected=args.corrected)
    elif what == "growth":
        res = V.verify_growth(args.n_max)
    else:
        res = V.verify_all(corrected_families=args.corrected)
    text = V.to_csv(res) if args.format == "csv" else V.to_jsonl(res)
    sys.stdout.write(text)
    failures = sum(not r.passed for r in res)
    if failures:
        logging.getLogger("psingular").warning("%d of %d checks failed", failures, len(res))
    return min(failures, 255)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psingular", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("core", help="p-core and p-weight of a partition")
    c.add_argument("partition", help='e.g. "5,4,1" or "5,1^3"')
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_core)

    c = sub.add_parser("census", help="p-singular characters of S_n or A_n")
    c.add_argument("group", choices=["sn", "an"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("blocks", help="p-blocks of S_n with statistics and checks")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_blocks)

    c = sub.add_parser("sylow-dl", help="derived length of a Sylow subgroup")
    c.add_argument("--family", required=True, choices=["sym", "gl", "gu", "sp", "so-odd", "so-even"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_sylow_dl)

    v = sub.add_parser("verify", help="run checks and print one result per line")
    vs = v.add_subparsers(dest="what", required=True)

    def fmt(pp):
        pp.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
        pp.set_defaults(func=cmd_verify)
        return pp

    pp = fmt(vs.add_parser("sporadic"))
    pp.add_argument("--data", help="CSV file; default is the shipped table")
    pp = fmt(vs.add_parser("alternating"))
    pp.add_argument("--n-min", type=int, required=True)
    pp.add_argument("--n-max", type=int, required=True)
    pp.add_argument("--primes", type=_primes)
    pp.add_argument("--exact-dl-max", type=int, default=48)
    pp = fmt(vs.add_parser("blocks"))
    pp.add_argument("--n-max", type=int, required=True)
    pp.add_argument("--primes", type=_primes, default=[2, 3, 5, 7])
    pp = fmt(vs.add_parser("lemma44"))
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--k", type=int, required=True)
    pp.add_argument("--q", type=int, required=True)
    pp.add_argument("--eps", type=_eps, required=True)
    pp = fmt(vs.add_parser("families"))
    pp.add_argument("--n-min", type=int, required=True)
    pp.add_argument("--n-max", type=int, required=True)
    pp.add_argument("--primes", type=_primes, default=[2, 3, 5, 7, 11, 13])
    pp.add_argument("--corrected", action="store_true",
                    help="use (n-2-3k, 3k+1, 1) for the p = 3, n = 2 mod 3 beta family")
    pp = fmt(vs.add_parser("growth"))
    pp.add_argument("--n-max", type=int, required=True)
    pp = fmt(vs.add_parser("all"))
    pp.add_argument("--corrected", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
