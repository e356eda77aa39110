"""Command-line surface: operators, statistics, series, censuses, verification.

Exit codes: 0 success, 2 malformed input, 3 precondition violation,
4 feasibility cap exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .checks import FULL, QUICK, run_profile
from .cylinder import Config, MultiIndex, configs_with_size, decompose, shift_from
from .series import (
    BiPoly,
    GeneratorSet,
    NotFreeError,
    free_orbit_formula,
    orbit_sum,
    product_formula,
    recurrence_formula,
    sum_over_configs,
)
from .stats import size, weight
from .submodules import (
    DEFAULT_CAP,
    FeasibilityError,
    enumerate_submodules,
    leading_module,
)

SCHEMA = "spiralshift.output/1"


def parse_levels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer tuple, got {text!r}")


def emit(args, command: str, inputs: dict, result, lines: list[str], started: float) -> None:
    if args.json:
        record = {
            "schema": SCHEMA,
            "command": command,
            "inputs": inputs,
            "result": result,
            "elapsed_s": round(time.perf_counter() - started, 6),
        }
        text = json.dumps(record, indent=2)
    else:
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def series_lines(p: BiPoly) -> list[str]:
    return [f"({n},{w}): {c}" for (n, w), c in p.terms()]


def series_result(p: BiPoly) -> dict:
    return {"t_cut": p.t_cut, "coeffs": [[n, w, c] for (n, w), c in p.terms()]}


def cmd_apply(args) -> int:
    started = time.perf_counter()
    x = Config(parse_levels(args.x))
    y = shift_from(x, args.j)
    emit(
        args,
        "apply",
        {"d": args.d, "j": args.j, "x": list(x.levels)},
        {"levels": list(y.levels)},
        [",".join(str(n) for n in y.levels)],
        started,
    )
    return 0


def cmd_decompose(args) -> int:
    started = time.perf_counter()
    x = Config(parse_levels(args.x))
    a = decompose(x)
    emit(
        args,
        "decompose",
        {"d": args.d, "x": list(x.levels)},
        {"steps": list(a.steps)},
        [",".join(str(s) for s in a.steps)],
        started,
    )
    return 0


def cmd_stats(args) -> int:
    started = time.perf_counter()
    x = Config(parse_levels(args.x))
    n, w = size(x), weight(x)
    emit(
        args,
        "stats",
        {"d": args.d, "x": list(x.levels)},
        {"size": n, "weight": w},
        [f"n={n} W={w}"],
        started,
    )
    return 0


def cmd_series(args) -> int:
    started = time.perf_counter()
    methods = {
        "product": product_formula,
        "configs": sum_over_configs,
        "recurrence": recurrence_formula,
    }
    p = methods[args.method](args.d, args.tcut)
    emit(
        args,
        "series",
        {"d": args.d, "tcut": args.tcut, "method": args.method},
        series_result(p),
        series_lines(p),
        started,
    )
    return 0


def cmd_orbit(args) -> int:
    started = time.perf_counter()
    x0 = Config(parse_levels(args.x0))
    gens = GeneratorSet(args.d, tuple(MultiIndex(parse_levels(g)) for g in args.gens))
    if args.closed_form:
        p = free_orbit_formula(x0, gens, args.tcut)
    else:
        p = orbit_sum(x0, gens, args.tcut)
    emit(
        args,
        "orbit",
        {
            "d": args.d,
            "x0": list(x0.levels),
            "gens": [list(g.steps) for g in gens.generators],
            "tcut": args.tcut,
            "closed_form": bool(args.closed_form),
        },
        series_result(p),
        series_lines(p),
        started,
    )
    return 0


def cmd_count(args) -> int:
    started = time.perf_counter()
    observed = [0] * (args.N + 1)
    for m in enumerate_submodules(args.q, args.d, args.N, cap=args.cap):
        if m.codim <= args.N:
            observed[m.codim] += 1
    predicted_by_t = product_formula(args.d, args.N).eval_q(args.q)
    predicted = [predicted_by_t.get(n, 0) for n in range(args.N + 1)]
    lines = [
        f"n={n} observed={o} predicted={p}"
        for n, (o, p) in enumerate(zip(observed, predicted))
    ]
    emit(
        args,
        "count",
        {"q": args.q, "d": args.d, "N": args.N},
        {"observed": observed, "predicted": predicted},
        lines,
        started,
    )
    return 0


def cmd_strata(args) -> int:
    started = time.perf_counter()
    depth = max(args.n, 1)
    observed: dict[Config, int] = {}
    for m in enumerate_submodules(args.q, args.d, depth, cap=args.cap):
        if m.codim == args.n:
            x = leading_module(m)
            observed[x] = observed.get(x, 0) + 1
    rows = []
    for x in configs_with_size(args.d, args.n):
        w = weight(x)
        rows.append(
            {
                "x": list(x.levels),
                "weight": w,
                "predicted": args.q**w,
                "observed": observed.get(x, 0),
            }
        )
    lines = [
        "x=({}) W={} predicted={} observed={}".format(
            ",".join(str(v) for v in row["x"]),
            row["weight"],
            row["predicted"],
            row["observed"],
        )
        for row in rows
    ]
    emit(
        args,
        "strata",
        {"q": args.q, "d": args.d, "n": args.n},
        {"strata": rows},
        lines,
        started,
    )
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    profile = QUICK if args.profile == "quick" else FULL
    results = run_profile(profile)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    payload = {
        "profile": args.profile,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }
    emit(args, "verify", {"profile": args.profile}, payload, lines, started)
    return 0 if all(r.passed for r in results) else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiralshift",
        description="Spiral shifting operators, their generating functions, "
        "and the submodule census they explain.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common], help="apply one shifting operator")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--x", required=True, help="comma-separated levels")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("decompose", parents=[common], help="exponents reaching x from the origin")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("stats", parents=[common], help="size and weight of a configuration")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("series", parents=[common], help="the size/weight census series")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--tcut", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("product", "configs", "recurrence"),
        default="product",
    )
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("orbit", parents=[common], help="orbit census under chosen generators")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x0", required=True)
    p.add_argument("--gens", nargs="+", required=True, help="comma-separated exponent tuples")
    p.add_argument("--tcut", type=int, default=8)
    p.add_argument(
        "--closed-form",
        action="store_true",
        help="use the product formula; requires independent generators",
    )
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("count", parents=[common], help="submodule totals by colength")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("strata", parents=[common], help="stratum table at one colength")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotFreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())
