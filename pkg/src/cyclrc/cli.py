"""Command-line front end. JSON goes to stdout, human summaries to stderr.

Exit codes: 0 success, 1 a bound was violated, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .analysis import analyze, search_defining_sets
from .bounds import (
    disjoint_d6_dimension_bound,
    disjoint_d10_dimension_bound,
    f4_hamming_size_bound,
    lrc_singleton_bound,
)
from .constructions import ConstructionError, construct
from .cyclic import DEFAULT_BUDGET, DEFAULT_SEED, CodeError, code_to_dict, load_code
from .gf import FieldError, make_field
from .locality import AvailabilityError, verify_availability
from .repair import ErasureDecodingError, choose_repair_set, erasure_decode, local_repair

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _err(msg: str):
    print(msg, file=sys.stderr)


def _field(args):
    poly = int(args.primitive_poly, 16) if args.primitive_poly else None
    return make_field(args.m, poly)


def cmd_construct(args) -> int:
    res = construct(args.family, args.m, args.r, field=_field(args))
    data = code_to_dict(res.code, **res.metadata())
    text = json.dumps(data, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    _err(res.summary())
    return EXIT_OK


def cmd_analyze(args) -> int:
    code, data = load_code(args.code_file)
    r = args.r if args.r is not None else int(data.get("locality_r", 2))
    t = args.t if args.t is not None else int(data.get("availability_t", 1))
    report = analyze(code, r=r, t=t, budget=args.budget, seed=args.seed)
    if args.format == "table":
        d = report["distance"]
        dtxt = str(d["lower"]) if d["exact"] else f"{d['lower']}..{d['upper']}"
        print(f"[{report['n']}, {report['k']}, {dtxt}]  bch={report['bch_bound']}  "
              f"r={r}:{report['locality']['certified']}  t={t}:{report['availability']['certified']}")
        for name, verdict in report["bounds"]["verdicts"].items():
            print(f"  {name:12s} {verdict}")
    else:
        print(json.dumps(report, indent=2))
    return EXIT_VIOLATION if report["bounds"]["violated"] else EXIT_OK


def cmd_bounds(args) -> int:
    out = {}
    if args.n is not None and args.k is not None:
        out["singleton_d_max"] = lrc_singleton_bound(args.n, args.k, args.r or 2)
    if args.m is not None:
        out["thm1_k_max"] = disjoint_d6_dimension_bound(args.m)
        out["thm2_k_max_even"] = disjoint_d10_dimension_bound(args.m, True)
        out["thm2_k_max_any"] = disjoint_d10_dimension_bound(args.m, False)
        n_prime = ((1 << args.m) - 1) // 3
        out["f4_hamming_log2_d3"] = f4_hamming_size_bound(n_prime, 3)
        out["f4_hamming_log2_d5"] = f4_hamming_size_bound(n_prime, 5)
    if not out:
        _err("give --n/--k (and --r) and/or --m")
        return EXIT_USAGE
    print(json.dumps(out))
    return EXIT_OK


def cmd_repair(args) -> int:
    code, data = load_code(args.code_file)
    r = args.r if args.r is not None else int(data.get("locality_r", 2))
    t = args.t if args.t is not None else int(data.get("availability_t", 1))
    rng = np.random.default_rng(args.seed)
    msg = int(rng.integers(0, 2, size=code.k) @ (1 << np.arange(code.k, dtype=object)))
    word = code.encode(msg)
    erased = sorted(set(args.erase)) if args.erase else [0]
    busy = set(args.busy or ())
    try:
        cert = verify_availability(code, r, t)
    except AvailabilityError as e:
        _err(f"no availability certificate: {e}")
        cert = None
    damaged = word
    for i in erased:
        damaged &= ~(1 << i)
    status = EXIT_OK
    for i in erased:
        check = choose_repair_set(cert, i, busy, erased) if cert else None
        if check is not None:
            trace = local_repair(damaged, i, check, erased)
            line = {**trace.to_dict(), "method": "local"}
        else:
            try:
                fixed = erasure_decode(code, damaged, erased)
            except ErasureDecodingError as e:
                line = {"coordinate": i, "reads": None, "value": None, "method": "failed",
                        "witness": [j for j in range(code.n) if e.witness >> j & 1]}
                print(json.dumps(line))
                status = EXIT_VIOLATION
                continue
            line = {"coordinate": i, "reads": [j for j in range(code.n) if j not in erased],
                    "value": fixed >> i & 1, "method": "global"}
        line["ok"] = line["value"] == (word >> i & 1)
        print(json.dumps(line))
    return status


def cmd_search(args) -> int:
    field = _field(args)
    if args.m > 8:
        _err("exhaustive search is limited to m <= 8")
        return EXIT_USAGE
    results, complete = search_defining_sets(
        field, r=args.r or 2, require_locality=args.require_locality,
        budget=args.budget, seed=args.seed, max_sets=args.max_sets,
    )
    for s in results:
        if args.format == "table":
            d = s.distance
            dtxt = str(d.lower) if d.exact else f"{d.lower}..{d.upper}"
            flag = "*" if s.pareto else " "
            print(f"{flag} [{s.n}, {s.k}, {dtxt}] r={s.locality_r} t={s.availability_t} zeros={list(s.zeros)}")
        else:
            print(json.dumps({**s.to_dict(), "seed": args.seed, "budget": args.budget, "partial": not complete}))
    if not complete:
        _err("search stopped at --max-sets; results are partial")
    return EXIT_VIOLATION if any(s.bound_verdicts.violated for s in results) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclrc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, m_required=False):
        sp.add_argument("--m", type=int, required=m_required)
        sp.add_argument("--r", type=int)
        sp.add_argument("--t", type=int)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--primitive-poly", help="hex coefficient mask, LSB = constant term")
        sp.add_argument("--out")
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("construct", help="build one of the code families and write a code file")
    sp.add_argument("family", choices=("c1", "c2", "d10", "avail"))
    common(sp, m_required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("analyze", help="certify distance, locality, availability and bounds")
    sp.add_argument("code_file")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("repair", help="erase coordinates of a random codeword and repair them")
    sp.add_argument("code_file")
    sp.add_argument("--erase", type=int, action="append")
    sp.add_argument("--busy", type=int, action="append")
    common(sp)
    sp.set_defaults(func=cmd_repair)

    sp = sub.add_parser("search", help="sweep every 2-closed defining set of length 2^m - 1")
    sp.add_argument("--require-locality", action="store_true")
    sp.add_argument("--max-sets", type=int)
    common(sp, m_required=True)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConstructionError, FieldError, CodeError, ValueError, OSError) as e:
        _err(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
