"""Batch front door: run the checkers and the proof engine from the shell.

Subcommands
    check-gp           polygon axioms on a geometry file
    check-valuation    valuation axioms on a geometry+valuation file
    weights            the exact weight sequence, optionally rescaled
    classify           label an integer weight sequence
    rescale            both discrete rescalings for n in {3, 4, 6}
    reduce-seq         valley reduction of a residual sequence
    verify-identities  exhaustive sweep of the four slope identities
    demo-plane         sampled axiom suite on a projective plane oracle
    hahn eval          evaluate a series expression and its valuation
    quasifield-test    laws of the twisted multiplication over GF(q)

Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad input.
Reports carry no timing, so identical (argv, inputs, seed) give identical
bytes in --format json.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclo import CycloNumber, radical_string
from .fields import QQ, finite_field
from .geometry import (
    FiniteGeometry,
    ProjectivePlane,
    TwistedPlane,
    verify_gp_axioms,
)
from .hahn import SeriesElement, TwistContext, parse_series, series_str
from .sequences import (
    ResidualSequence,
    case_identity_sweep,
    reduce_to_standard,
    slope,
    slope_str,
    standard_sequence,
)
from .valuation import (
    classify_weight_sequence,
    euclidean_weights,
    load_valued_geometry,
    rescale_discrete,
    run_finite_suite,
    run_plane_suite,
)
from .valuedfield import PadicRationals, SeriesRationals
from .values import INFINITY, val_str


class CLIError(Exception):
    """Bad input: malformed file, out-of-range parameter; exit code 2."""


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, CycloNumber):
        return slope_str(x)
    if x is INFINITY:
        return "inf"
    if isinstance(x, SeriesElement):
        return series_str(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _emit(report, fmt, text_lines):
    if fmt == "json":
        print(json.dumps(_jsonable(report), sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_json_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise CLIError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise CLIError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}")


def _parse_int_list(text, flag):
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise CLIError(f"{flag}: {part!r} is not an integer")
    return out


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check_gp(args):
    data = _load_json_file(args.file)
    n = args.n if args.n is not None else data.get("n")
    if n is None:
        raise CLIError("no gonality: pass --n or put an \"n\" key in the file")
    try:
        geometry = FiniteGeometry.from_json(data)
        report = verify_gp_axioms(geometry, n)
    except (KeyError, TypeError) as e:
        raise CLIError(f"{args.file}: malformed geometry file ({e!r})")
    except ValueError as e:
        raise CLIError(str(e))
    report = {"command": "check-gp", "file": args.file, **report}
    lines = [f"polygon check (n={n}) on {args.file}"]
    violated = {v["axiom"] for v in report["violations"]}
    for axiom in ("GP1", "GP2", "GP3"):
        lines.append(f"  {axiom}: {'FAIL' if axiom in violated else 'pass'}")
    for v in report["violations"]:
        lines.append(f"    {v['axiom']} witness: {_jsonable(v['witness'])}")
    lines.append(f"  diameter={report['stats']['diameter']} girth={report['stats']['girth']}")
    lines.append("result: " + ("pass" if report["pass"] else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if report["pass"] else 1


def _cmd_check_valuation(args):
    data = _load_json_file(args.file)
    try:
        geometry, n, valuation, weights = load_valued_geometry(data)
        if weights is None:
            weights = euclidean_weights(n)
        report = run_finite_suite(geometry, valuation, weights)
    except (KeyError, TypeError) as e:
        raise CLIError(f"{args.file}: malformed valued-geometry file ({e!r})")
    except ValueError as e:
        raise CLIError(str(e))
    report = {"command": "check-valuation", "file": args.file, "n": n, **report}
    lines = [f"valuation check (n={n}) on {args.file}"]
    for axiom, r in report["checks"].items():
        mark = "pass" if r["pass"] else "FAIL"
        counts = {k: v for k, v in r.items() if isinstance(v, int) and not isinstance(v, bool)}
        lines.append(f"  {axiom}: {mark} {counts}")
        if not r["pass"]:
            lines.append(f"    first failure: {_jsonable(r['failures'][0])}")
    lines.append("result: " + ("pass" if report["pass"] else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if report["pass"] else 1


def _weight_indices(n):
    return list(range(1, n)) + list(range(n + 1, 2 * n))


def _cmd_weights(args):
    n = args.n
    if n < 3:
        raise CLIError(f"need n >= 3, got {n}")
    ws = euclidean_weights(n)
    report = {
        "command": "weights",
        "n": n,
        "weights": [[i, s] for i, s in zip(_weight_indices(n), ws.as_strings())],
    }
    lines = [f"weight sequence for n={n}: a_i = |sin(i*pi/{n})|"]
    for i, s in zip(_weight_indices(n), ws.as_strings()):
        lines.append(f"  a_{i} = {s}")
    if args.discrete:
        try:
            res = rescale_discrete(n)
        except ValueError as e:
            raise CLIError(str(e))
        report["discrete"] = {
            "factor": radical_string(res.factor) or str(res.factor),
            "sequences": [
                {"entries": list(w.entries), "label": classify_weight_sequence(w.entries)}
                for w in res.sequences
            ],
        }
        lines.append(f"discrete rescalings (dividing one parity class by {report['discrete']['factor']}):")
        for item in report["discrete"]["sequences"]:
            lines.append(f"  {tuple(item['entries'])}  [{item['label']}]")
    _emit(report, args.format, lines)
    return 0


def _cmd_classify(args):
    entries = _parse_int_list(args.ws, "--ws")
    try:
        label = classify_weight_sequence(entries)
    except ValueError as e:
        raise CLIError(str(e))
    report = {"command": "classify", "entries": entries, "label": label}
    _emit(report, args.format, [f"{tuple(entries)} -> {label}"])
    return 0


def _cmd_rescale(args):
    try:
        res = rescale_discrete(args.n)
    except ValueError as e:
        raise CLIError(str(e))
    report = {
        "command": "rescale",
        "n": args.n,
        "factor": radical_string(res.factor) or str(res.factor),
        "sequences": [
            {"entries": list(w.entries), "label": classify_weight_sequence(w.entries)}
            for w in res.sequences
        ],
    }
    lines = [f"discrete rescalings for n={args.n} (factor {report['factor']}):"]
    for item in report["sequences"]:
        lines.append(f"  {tuple(item['entries'])}  [{item['label']}]")
    _emit(report, args.format, lines)
    return 0


def _cmd_reduce_seq(args):
    values = _parse_int_list(args.seq, "--seq")
    try:
        seq = ResidualSequence(tuple(values))
    except ValueError as e:
        raise CLIError(f"--seq: {e}")
    if args.n is not None and args.n != seq.n:
        raise CLIError(f"--n {args.n} does not match a sequence of {len(values)} entries")
    base_slope = slope(seq)
    result = reduce_to_standard(seq, strategy=args.strategy)
    steps = []
    invariant = True
    for j, mid in result["steps"]:
        s = slope(mid)
        invariant = invariant and s == base_slope
        steps.append({"valley": j, "sequence": list(mid.values), "slope": slope_str(s)})
    final = result["final"]
    expected = standard_sequence(seq.n, seq.endpoint)
    report = {
        "command": "reduce-seq",
        "n": seq.n,
        "start": {"sequence": list(seq.values), "slope": slope_str(base_slope)},
        "strategy": args.strategy,
        "steps": steps,
        "final": {
            "sequence": list(final.values),
            "slope": slope_str(slope(final)),
            "standard": final.values == expected.values,
        },
        "slope_invariant": invariant,
        "pass": invariant and final.values == expected.values,
    }
    lines = [f"start: {seq}  slope {slope_str(base_slope)}"]
    for k, st in enumerate(steps, 1):
        lines.append(
            f"step {k}: raise valley at {st['valley']} -> "
            f"({','.join(map(str, st['sequence']))})  slope {st['slope']}"
        )
    lines.append(
        f"final: {final}  [{'standard' if report['final']['standard'] else 'NOT standard'},"
        f" endpoint {final.endpoint}]"
    )
    lines.append("slope invariant: " + ("yes" if invariant else "NO"))
    _emit(report, args.format, lines)
    return 0 if report["pass"] else 1


def _cmd_verify_identities(args):
    if args.n_max < 3:
        raise CLIError(f"--n-max must be at least 3, got {args.n_max}")
    sweep = case_identity_sweep(n_max=args.n_max, m_max=args.m_max)
    report = {"command": "verify-identities", "n_max": args.n_max, **sweep}
    lines = [f"slope-invariance identities, n = 3..{args.n_max}, m up to "
             f"{'2n' if args.m_max is None else args.m_max}:"]
    for case, count in sweep["cases"].items():
        lines.append(f"  case ({case}): {count} parameter triples")
    lines.append(f"checked {sweep['checked']} identities, "
                 f"{len(sweep['failures'])} failures")
    lines.append("result: " + ("pass" if sweep["pass"] else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if sweep["pass"] else 1


def _make_plane(args):
    if args.base != "rationals":
        raise CLIError(f"unsupported base field {args.base!r}")
    if args.val in ("3-adic", "p-adic"):
        p = 3 if args.val == "3-adic" else args.prime
        try:
            handle = PadicRationals(p)
        except ValueError as e:
            raise CLIError(str(e))
        return ProjectivePlane(handle)
    if args.val == "series":
        return ProjectivePlane(SeriesRationals(QQ, args.exp_den))
    raise CLIError(f"unknown valuation {args.val!r}")


def _cmd_demo_plane(args):
    if args.samples < 1:
        raise CLIError("--samples must be positive")
    plane = _make_plane(args)
    lines_count = args.lines if args.lines else max(1, args.samples // 100)
    triangles = args.triangles if args.triangles else max(1, args.samples // 10)
    suite = run_plane_suite(
        plane,
        pairs=args.samples,
        triples=args.samples,
        lines=lines_count,
        line_budget=args.line_budget,
        triangles=triangles,
        seed=args.seed,
    )
    report = {
        "command": "demo-plane",
        "plane": repr(plane),
        "samples": args.samples,
        **suite,
    }
    lines = [f"sampled axiom suite on {plane!r} (seed {args.seed})"]
    for axiom in ("U1", "U2", "U3", "U4"):
        r = suite["checks"][axiom]
        mark = "pass" if r["pass"] else "FAIL"
        counts = {k: v for k, v in r.items() if isinstance(v, int) and not isinstance(v, bool)}
        lines.append(f"  {axiom}: {mark} {counts}")
        if not r["pass"]:
            lines.append(f"    first failure: {_jsonable(r['failures'][0])}")
    lines.append("result: " + ("pass" if suite["pass"] else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if suite["pass"] else 1


def _cmd_hahn(args):
    if args.hahn_op != "eval":
        raise CLIError(f"unknown hahn operation {args.hahn_op!r}")
    try:
        x = parse_series(args.expr)
    except (ValueError, ZeroDivisionError) as e:
        raise CLIError(f"--expr: {e}")
    report = {
        "command": "hahn eval",
        "expr": args.expr,
        "value": series_str(x),
        "valuation": val_str(x.valuation()),
    }
    _emit(report, args.format, [f"value: {report['value']}", f"valuation: {report['valuation']}"])
    return 0


def _cmd_quasifield_test(args):
    import random

    try:
        base = finite_field(args.q)
    except ValueError as e:
        raise CLIError(str(e))
    if args.twist_denominator < 1:
        raise CLIError("--N must be positive")
    ctx = TwistContext(base, args.twist_denominator)
    handle = SeriesRationals(base, args.twist_denominator)
    rng = random.Random(args.seed)
    checks = {
        "identity": {"pass": True, "checked": 0},
        "left_distributive": {"pass": True, "checked": 0},
        "left_division": {"pass": True, "checked": 0},
        "right_division": {"pass": True, "checked": 0},
        "valuation_additive": {"pass": True, "checked": 0},
    }
    one = SeriesElement.one(base)
    witness = None
    for _ in range(args.triples):
        x = handle.random_element(rng)
        y = handle.random_element(rng)
        z = handle.random_element(rng)

        c = checks["identity"]
        c["checked"] += 1
        if not (ctx.multiply(one, x) == x and ctx.multiply(x, one) == x):
            c["pass"] = False

        c = checks["left_distributive"]
        c["checked"] += 1
        if not ctx.multiply(x, y + z) == ctx.multiply(x, y) + ctx.multiply(x, z):
            c["pass"] = False

        if not x.is_zero():
            c = checks["left_division"]
            c["checked"] += 1
            q = ctx.left_divide(x, y)
            if not ctx.multiply(x, q) == y:
                c["pass"] = False
            c = checks["right_division"]
            c["checked"] += 1
            q = ctx.right_divide(x, y)
            if not ctx.multiply(q, x) == y:
                c["pass"] = False

        c = checks["valuation_additive"]
        c["checked"] += 1
        vx, vy = x.valuation(), y.valuation()
        vxy = ctx.multiply(x, y).valuation()
        expected = INFINITY if INFINITY in (vx, vy) else vx + vy
        if vxy != expected:
            c["pass"] = False

        if witness is None:
            lhs = ctx.multiply(x + y, z)
            rhs = ctx.multiply(x, z) + ctx.multiply(y, z)
            if not lhs == rhs:
                witness = {
                    "x": handle.element_str(x),
                    "y": handle.element_str(y),
                    "z": handle.element_str(z),
                    "(x+y)*z": handle.element_str(lhs),
                    "x*z + y*z": handle.element_str(rhs),
                }
    ok = all(c["pass"] for c in checks.values())
    report = {
        "command": "quasifield-test",
        "q": args.q,
        "N": args.twist_denominator,
        "seed": args.seed,
        "checks": checks,
        "right_distributivity_witness": witness,
        "pass": ok,
    }
    lines = [f"twisted multiplication over GF({args.q}), exponent lattice (1/{args.twist_denominator})Z"]
    for name, c in checks.items():
        lines.append(f"  {name}: {'pass' if c['pass'] else 'FAIL'} ({c['checked']} checks)")
    if witness:
        lines.append("  right distributivity fails, witness:")
        for k, v in witness.items():
            lines.append(f"    {k} = {v}")
    else:
        lines.append("  right distributivity: no failure found in budget")
    lines.append("result: " + ("pass" if ok else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyval",
        description="exact checkers for generalized polygons with valuation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check-gp", help="polygon axioms on a geometry file")
    p.add_argument("--file", required=True)
    p.add_argument("--n", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_check_gp)

    p = sub.add_parser("check-valuation", help="valuation axioms on a file")
    p.add_argument("--file", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_check_valuation)

    p = sub.add_parser("weights", help="exact weight sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--discrete", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("classify", help="label an integer weight sequence")
    p.add_argument("--ws", required=True, metavar="W1,W2,...")
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("rescale", help="discrete rescalings for n in {3,4,6}")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_rescale)

    p = sub.add_parser("reduce-seq", help="valley reduction of a sequence")
    p.add_argument("--seq", required=True, metavar="Y0,Y1,...")
    p.add_argument("--n", type=int)
    p.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    add_format(p)
    p.set_defaults(func=_cmd_reduce_seq)

    p = sub.add_parser("verify-identities", help="sweep the slope identities")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--m-max", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("demo-plane", help="sampled axiom suite on a plane")
    p.add_argument("--base", default="rationals")
    p.add_argument("--val", default="3-adic", choices=("3-adic", "p-adic", "series"))
    p.add_argument("--prime", type=int, default=3)
    p.add_argument("--exp-den", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lines", type=int, default=None)
    p.add_argument("--line-budget", type=int, default=1000)
    p.add_argument("--triangles", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_demo_plane)

    p = sub.add_parser("hahn", help="series expression utilities")
    p.add_argument("hahn_op", choices=("eval",))
    p.add_argument("--expr", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_hahn)

    p = sub.add_parser("quasifield-test", help="twisted multiplication laws")
    p.add_argument("--q", type=int, default=9)
    p.add_argument("--N", dest="twist_denominator", type=int, default=2)
    p.add_argument("--triples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_quasifield_test)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
