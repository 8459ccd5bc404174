"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 unknown subcommand,
3 invalid input.  Every randomized subcommand requires an explicit --seed;
there is no wall-clock default, so runs are reproducible by construction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance, formulas, search, sphere, twovantage
from .arrangement2d import a_S
from .constructions import (
    PLATONIC_NAMES,
    concyclic_equal,
    concyclic_equal_sphere,
    deficit_config,
    doubled_free,
    equally_spaced_line,
    free_config,
    gap_config_1d,
    platonic,
    sphere_rectangle,
    trapezoid_gadget,
    circle_gadget,
    parallel_lines_gadget,
)
from .geometry import (
    PointConfig,
    Weights,
    config_from_text,
    config_to_text,
    count_orderings_1d,
    distinct_midpoints_1d,
    ordering_from_vantage,
    ordering_weighted,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


def _read_config_arg(path: str) -> PointConfig:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        return config_from_text(text)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read configuration {path!r}: {exc}")


def _parse_tuple(text: str, dim: int):
    parts = text.split(",")
    if len(parts) != dim:
        raise InputError(f"expected {dim} comma-separated values, got {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except ValueError as exc:
        raise InputError(str(exc))


def cmd_count_regions(args) -> int:
    S = _read_config_arg(args.config)
    if S.dimension == 1:
        total = count_orderings_1d(S)
        if args.summary_json:
            print(json.dumps({"dimension": 1, "n": S.n,
                              "midpoints": distinct_midpoints_1d(S),
                              "regions_total": total}))
        else:
            print(f"n={S.n} midpoints={distinct_midpoints_1d(S)} intervals={total}")
        return EXIT_OK
    if S.dimension != 2:
        raise InputError("count-regions handles 1-D and planar configurations")
    summary = a_S(S)
    hist = summary.multiplicity_histogram
    if args.summary_json:
        print(json.dumps({
            "dimension": 2,
            "n": S.n,
            "lines": summary.line_count,
            "direction_classes": summary.direction_class_count,
            "raw_pairs": summary.raw_pair_count,
            "multiplicity_histogram": {str(k): v for k, v in sorted(hist.items())},
            "regions_total": summary.regions_total,
            "regions_bounded": summary.regions_bounded,
            "regions_unbounded": summary.regions_unbounded,
        }))
    else:
        print(f"n={S.n} lines={summary.line_count} "
              f"directions={summary.direction_class_count} "
              f"raw_pairs={summary.raw_pair_count}")
        print("vertex multiplicities: "
              + (" ".join(f"{m}:{c}" for m, c in sorted(hist.items())) or "none"))
        print(f"regions total={summary.regions_total} "
              f"bounded={summary.regions_bounded} "
              f"unbounded={summary.regions_unbounded}")
    return EXIT_OK


def cmd_count_sphere(args) -> int:
    S = _read_config_arg(args.config)
    if not S.on_sphere:
        raise InputError("count-sphere requires an on-sphere configuration")
    summary = sphere.count_config(S)
    hist = summary.multiplicity_histogram
    print(f"n={S.n} circles={summary.circle_count}")
    print("vertex multiplicities: "
          + (" ".join(f"{m}:{c}" for m, c in sorted(hist.items())) or "none"))
    print(f"regions total={summary.regions_total}")
    return EXIT_OK


def cmd_ordering(args) -> int:
    S = _read_config_arg(args.config)
    V = _parse_tuple(args.vantage, S.dimension)
    if args.weights:
        if S.dimension != 2:
            raise InputError("weights apply to planar configurations")
        w = Weights(_parse_tuple(args.weights, 2))
        o = ordering_weighted(S, V, w)
    else:
        o = ordering_from_vantage(S, V)
    blocks = " < ".join(
        "{" + ",".join(str(i) for i in b) + "}" if len(b) > 1 else str(b[0])
        for b in o.tie_groups)
    print(blocks)
    print("strict" if o.is_strict else "ties present")
    return EXIT_OK


def cmd_two_vantage(args) -> int:
    S = _read_config_arg(args.config)
    if S.dimension != 2:
        raise InputError("two-vantage sampling requires a planar configuration")
    run = twovantage.sample_two_vantage_orderings(S, args.budget, args.seed)
    n = S.n
    print(f"n={n} samples={run.samples_used} distinct={len(run.found)}")
    print(f"bounds: 2^(n-1)={2 ** (n - 1)} c_n={formulas.velo_bound(n)}")
    violations = []
    if args.collinear_checks:
        ys = {p[1] for p in S.points}
        if len(ys) != 1:
            raise InputError("--collinear-checks requires collinear points on y=const")
        order = sorted(range(1, n + 1), key=lambda i: S.points[i - 1][0])
        relabel = {idx: pos + 1 for pos, idx in enumerate(order)}
        for perm in sorted(run.found):
            from .geometry import Ordering

            o = Ordering.strict(tuple(relabel[i] for i in perm))
            if not twovantage.contiguity_check(o):
                violations.append(("contiguity", perm))
            elif not twovantage.is_velo_valid(twovantage.updown(o)):
                violations.append(("velo", perm))
        if len(run.found) > min(2 ** (n - 1), formulas.velo_bound(n)):
            violations.append(("bound", len(run.found)))
    print(f"violations: {len(violations)}")
    for kind, item in violations:
        print(f"  {kind}: {item}")
    return EXIT_VERIFY if violations else EXIT_OK


CONSTRUCT_KINDS = ("gap1d", "line", "free", "free3d", "trapezoid", "deficit",
                   "circle", "parallel", "ngon", "ngon-sphere", "rectangle",
                   "doubled-free", "platonic")


def cmd_construct(args) -> int:
    kind = args.kind
    need_seed = kind in ("free", "free3d", "trapezoid", "deficit", "circle",
                         "parallel", "doubled-free")
    if need_seed and args.seed is None:
        raise InputError(f"construct {kind} requires an explicit --seed")
    try:
        if kind == "gap1d":
            S = gap_config_1d(args.n, args.k)
        elif kind == "line":
            S = equally_spaced_line(args.n, dim=args.dim or 2)
        elif kind == "free":
            S = free_config(args.n, args.seed)
        elif kind == "free3d":
            S = free_config(args.n, args.seed, dim=3)
        elif kind == "trapezoid":
            S = trapezoid_gadget(args.k, args.seed)
        elif kind == "deficit":
            S = deficit_config(args.n, args.k, args.seed)
        elif kind == "circle":
            S = circle_gadget(args.n, args.k, args.seed)
        elif kind == "parallel":
            S = parallel_lines_gadget(args.m, args.k, args.l, args.seed)
        elif kind == "ngon":
            S = concyclic_equal(args.n)
        elif kind == "ngon-sphere":
            S = concyclic_equal_sphere(args.n)
        elif kind == "rectangle":
            S = sphere_rectangle()
        elif kind == "doubled-free":
            S = doubled_free(args.n, args.seed)
        elif kind == "platonic":
            S = platonic(args.name)
        else:
            raise InputError(f"unknown construct kind {kind!r}")
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc))
    try:
        text = config_to_text(S)
    except ValueError as exc:
        raise InputError(str(exc))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_formula(args) -> int:
    name = args.name
    if name == "table":
        print(formulas.formula_table())
        return EXIT_OK
    if name not in formulas.FORMULA_REGISTRY:
        raise InputError(f"unknown formula {name!r}; known: "
                         + ", ".join(sorted(formulas.FORMULA_REGISTRY)) + ", table")
    fn, arity = formulas.FORMULA_REGISTRY[name]
    if len(args.args) != arity:
        raise InputError(f"formula {name} takes {arity} integer argument(s)")
    try:
        print(fn(*(int(a) for a in args.args)))
    except (ValueError, ArithmeticError) as exc:
        raise InputError(str(exc))
    return EXIT_OK


def cmd_search_achievable(args) -> int:
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    run = search.search_achievable(args.n, args.budget, args.seed, jobs=jobs)
    lo, hi, pct = search.coverage_report(run)
    print(f"n={args.n} budget={args.budget} seed={args.seed} "
          f"achieved={len(run.achieved)} min={lo} max={hi} coverage={pct}")
    print("values: " + " ".join(str(k) for k in sorted(run.achieved)))
    if args.store:
        search.write_witness_store(run, args.store)
        print(f"witnesses appended to {args.store}")
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        print(search.store_report(args.store))
        bad = search.verify_witness_store(args.store)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read store {args.store!r}: {exc}")
    if bad:
        print(f"verification failures: {len(bad)}")
        for rec in bad:
            print(f"  n={rec['n']} stored k={rec['k']} actual {rec['actual']}")
        return EXIT_VERIFY
    print("all stored witnesses re-verify")
    return EXIT_OK


def cmd_platonic_table(args) -> int:
    print("solid          n   regions")
    for name in PLATONIC_NAMES:
        S = platonic(name)
        count = sphere.count_config(S).regions_total
        print(f"{name:<12} {S.n:>3} {count:>9}")
    return EXIT_OK


def cmd_verify(args) -> int:
    numbers = args.only if args.only else None
    results = acceptance.run_all(numbers)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vantage",
        description="Exact counts of distance-induced orderings of point sets.")
    sub = p.add_subparsers(dest="command")

    q = sub.add_parser("count-regions", help="planar/1-D ordering count")
    q.add_argument("config", help="configuration file, or - for stdin")
    q.add_argument("--summary-json", action="store_true")
    q.set_defaults(fn=cmd_count_regions)

    q = sub.add_parser("count-sphere", help="spherical ordering count")
    q.add_argument("config")
    q.set_defaults(fn=cmd_count_sphere)

    q = sub.add_parser("ordering", help="ordering from one vantage point")
    q.add_argument("config")
    q.add_argument("--vantage", required=True, help="comma-separated coordinates")
    q.add_argument("--weights", help="comma-separated positive axis weights")
    q.set_defaults(fn=cmd_ordering)

    q = sub.add_parser("two-vantage", help="sample two-vantage orderings")
    q.add_argument("config")
    q.add_argument("--budget", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--collinear-checks", action="store_true")
    q.set_defaults(fn=cmd_two_vantage)

    q = sub.add_parser("construct", help="write a named configuration")
    q.add_argument("kind", choices=CONSTRUCT_KINDS)
    q.add_argument("-n", type=int)
    q.add_argument("-k", type=int)
    q.add_argument("-l", type=int)
    q.add_argument("-m", type=int)
    q.add_argument("--dim", type=int)
    q.add_argument("--name", help="platonic solid name")
    q.add_argument("--seed", type=int)
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_construct)

    q = sub.add_parser("formula", help="evaluate a closed-form count")
    q.add_argument("name")
    q.add_argument("args", nargs="*")
    q.set_defaults(fn=cmd_formula)

    q = sub.add_parser("search-achievable", help="seeded achievability search")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--budget", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--store", help="append witnesses to this JSONL file")
    q.add_argument("--jobs", type=int, default=0,
                   help="worker processes (default: available parallelism)")
    q.set_defaults(fn=cmd_search_achievable)

    q = sub.add_parser("report", help="summarize and re-verify a witness store")
    q.add_argument("--store", required=True)
    q.set_defaults(fn=cmd_report)

    q = sub.add_parser("platonic-table", help="region counts of the five solids")
    q.set_defaults(fn=cmd_platonic_table)

    q = sub.add_parser("verify", help="run the acceptance suite")
    q.add_argument("--only", type=int, nargs="*", help="criterion numbers")
    q.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    known = {"count-regions", "count-sphere", "ordering", "two-vantage",
             "construct", "formula", "search-achievable", "report",
             "platonic-table", "verify"}
    head = next((a for a in argv if not a.startswith("-")), None)
    if head not in known and argv[0] not in ("-h", "--help"):
        print(f"unknown subcommand {head!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
