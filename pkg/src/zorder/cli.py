"""Command-line front end.

Exit codes: 0 success, 1 falsified theorem item, 2 input or parse error,
3 numerical failure (including an indeterminate order verdict).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import rational as rat
from .errors import InputError, NumericalError
from .fuzzy import AlphaBetaPair, alpha_beta_pairs, finite_sequence_transform, fuzzy_z_transform
from .io import (
    dumps,
    fuzzy_signal_from_dict,
    parse_distribution,
    rational_from_json,
    read_continuous_csv,
    read_json,
    read_signal_csv,
    rows_to_csv,
    signal_to_csv,
)
from .orders import (
    INDETERMINATE,
    OrderCheckConfig,
    aging_intensity_order,
    expectation_order,
    hazard_rate_order,
    integrated_dominance,
    integrated_transform,
    likelihood_ratio_order,
    mrl_order,
    relative_hazard_order,
    relative_mrl_order,
)
from .signal import as_complex, convolve, eval_laplace_transform, eval_z_transform
from .theorems import ITEMS, check_item

EXIT_OK, EXIT_FALSIFIED, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2, 3

# option defaults applied after --config; None means "not given"
DEFAULTS = {
    "z": [],
    "s": [],
    "count": 16,
    "points": 64,
    "trials": 500,
    "seed": 0,
    "threshold": 1.0,
    "tolerance": 1e-9,
}


class Result:
    def __init__(self, payload, csv_text: str | None = None, code: int = EXIT_OK):
        self.payload = payload
        self.csv_text = csv_text
        self.code = code


# -- argument helpers ----------------------------------------------------------


def _floats(text: str, name: str) -> list[float]:
    try:
        return [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise InputError(f"--{name}: expected comma-separated numbers, got {text!r}") from None


def _complex(text, name: str) -> complex:
    if isinstance(text, (int, float)):
        return as_complex(text)
    try:
        return as_complex(complex(str(text).replace(" ", "").replace("i", "j")))
    except ValueError:
        raise InputError(f"--{name}: not a complex number: {text!r}") from None


def _grid(value, name: str) -> list[float] | None:
    if value is None:
        return None
    if isinstance(value, list):
        try:
            return [float(v) for v in value]
        except (TypeError, ValueError):
            raise InputError(f"{name}: expected a list of numbers") from None
    return _floats(value, name)


def _order_config(args) -> OrderCheckConfig:
    kwargs = {"threshold": float(args.threshold), "tolerance": float(args.tolerance)}
    z = _grid(args.z_grid, "z-grid")
    a = _grid(args.alpha_grid, "alpha-grid")
    if z is not None:
        kwargs["z_grid"] = tuple(z)
    if a is not None:
        kwargs["alpha_grid"] = tuple(a)
    return OrderCheckConfig(**kwargs)


def _rational(args) -> rat.RationalTransform:
    if args.rational:
        return rational_from_json(read_json(args.rational), args.rational)
    if args.num is None:
        raise InputError("need --rational FILE or --num (and optionally --den)")
    num = _floats(args.num, "num")
    den = _floats(args.den, "den") if args.den is not None else [1.0]
    try:
        return rat.RationalTransform(tuple(num), tuple(den))
    except InputError as exc:
        raise InputError(f"--num/--den: {exc}") from None


def _cx(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


# -- commands ------------------------------------------------------------------


def cmd_transform(args) -> Result:
    sig = read_signal_csv(args.input)
    coeffs = finite_sequence_transform(sig)
    evals = []
    for text in args.z:
        z = _complex(text, "z")
        evals.append({"z": _cx(z), "value": _cx(eval_z_transform(sig, z))})
    payload = {
        "first_index": coeffs.first_index,
        "powers": coeffs.powers(),
        "coefficients": list(coeffs.coefficients),
        "evaluations": evals,
    }
    rows = [(-p, c) for p, c in zip(coeffs.powers(), coeffs.coefficients)]
    return Result(payload, rows_to_csv(("n", "coefficient"), rows))


def cmd_laplace(args) -> Result:
    sig = read_continuous_csv(args.input)
    out = []
    for text in args.s:
        s = _complex(text, "s")
        out.append({"s": _cx(s), "value": _cx(eval_laplace_transform(sig, s))})
    rows = [(e["s"]["re"], e["s"]["im"], e["value"]["re"], e["value"]["im"]) for e in out]
    return Result({"evaluations": out}, rows_to_csv(("s_re", "s_im", "re", "im"), rows))


def cmd_invert(args) -> Result:
    rt = _rational(args)
    count = int(args.count)
    if count < 1:
        raise InputError("--count must be at least 1")
    x = rat.inverse_power_series(rt, count)
    values = [x(n) for n in range(count)]
    rows = list(enumerate(values))
    return Result({"n": list(range(count)), "x": values}, rows_to_csv(("n", "amplitude"), rows))


def cmd_poles(args) -> Result:
    pz = rat.poles_zeros(_rational(args))
    rows = [("zero", r.value.real, r.value.imag, r.multiplicity) for r in pz.zeros]
    rows += [("pole", r.value.real, r.value.imag, r.multiplicity) for r in pz.poles]
    return Result(pz.to_dict(), rows_to_csv(("kind", "re", "im", "multiplicity"), rows))


def cmd_stability(args) -> Result:
    rt = _rational(args)
    pz = rat.poles_zeros(rt)
    poles = [_cx(v) for v in pz.pole_values()]
    stable = rat.is_stable(rt)
    rows = [(p["re"], p["im"]) for p in poles]
    return Result({"stable": stable, "poles": poles}, rows_to_csv(("re", "im"), rows))


def cmd_freqresp(args) -> Result:
    rt = _rational(args)
    table = rat.freqresp_table(rt, int(args.points))
    payload = [{"omega": w, "magnitude": m, "phase": p} for w, m, p in table]
    return Result(payload, rows_to_csv(("omega", "magnitude", "phase"), table))


def cmd_convolve(args) -> Result:
    out = convolve(read_signal_csv(args.a), read_signal_csv(args.b))
    payload = {"samples": [{"n": n, "amplitude": v} for n, v in sorted(out.samples.items())]}
    return Result(payload, signal_to_csv(out))


def cmd_fuzzy_transform(args) -> Result:
    fs = fuzzy_signal_from_dict(read_json(args.input), args.input)
    if (args.alpha is None) != (args.beta is None):
        raise InputError("--alpha and --beta must be given together")
    if args.alpha is not None:
        pairs = [AlphaBetaPair(args.alpha, args.beta)]
    else:
        levels = _grid(args.alpha_grid, "alpha-grid") or [0.0, 0.5, 1.0]
        pairs = alpha_beta_pairs(levels)
    zs = [float(v) for v in args.z] if args.z else [2.0]
    out, rows = [], []
    for z in zs:
        for p in pairs:
            iv = fuzzy_z_transform(fs, p, z)
            out.append({"z": z, "alpha": p.alpha, "beta": p.beta, "lo": iv.lo, "hi": iv.hi})
            rows.append((z, p.alpha, p.beta, iv.lo, iv.hi))
    return Result({"evaluations": out}, rows_to_csv(("z", "alpha", "beta", "lo", "hi"), rows))


TWO_ARG = {
    "expectation": expectation_order,
    "hazard": hazard_rate_order,
    "likelihood-ratio": likelihood_ratio_order,
    "mrl": mrl_order,
}
FOUR_ARG = {"relative-hazard": relative_hazard_order, "relative-mrl": relative_mrl_order}
KINDS = tuple(TWO_ARG) + tuple(FOUR_ARG) + ("aging-intensity", "integrated")


def _verdict_rows(verdict):
    return [(e.z, e.alpha, e.beta, e.min_ratio, e.max_ratio) for e in verdict.evidence]


def cmd_order_check(args) -> Result:
    if args.x is None or args.y is None:
        raise InputError("order-check needs --x and --y")
    X, Y = parse_distribution(args.x), parse_distribution(args.y)
    kind = args.kind
    if kind == "integrated":
        if args.z_lo is None or args.z_hi is None:
            raise InputError("--kind integrated needs --z-lo and --z-hi")
        verdict = integrated_dominance(X, Y, args.z_lo, args.z_hi, float(args.tolerance))
    else:
        cfg = _order_config(args)
        if kind in TWO_ARG:
            verdict = TWO_ARG[kind](X, Y, cfg)
        elif kind in FOUR_ARG:
            X2 = parse_distribution(args.x2) if args.x2 else Y
            Y2 = parse_distribution(args.y2) if args.y2 else X
            verdict = FOUR_ARG[kind](X, X2, Y, Y2, cfg)
        else:
            verdict = aging_intensity_order(X, Y, cfg, args.x_limit, args.y_limit)
    code = EXIT_NUMERICAL if verdict.holds == INDETERMINATE else EXIT_OK
    header = ("z", "alpha", "beta", "min_ratio", "max_ratio")
    return Result(verdict, rows_to_csv(header, _verdict_rows(verdict)), code)


def cmd_integrate(args) -> Result:
    if args.x is None or args.z_lo is None or args.z_hi is None:
        raise InputError("integrate needs --x, --z-lo and --z-hi")
    value = integrated_transform(parse_distribution(args.x), args.z_lo, args.z_hi)
    payload = {"z_lo": args.z_lo, "z_hi": args.z_hi, "value": value}
    return Result(payload, rows_to_csv(("z_lo", "z_hi", "value"), [(args.z_lo, args.z_hi, value)]))


def cmd_theorem_test(args) -> Result:
    items = list(ITEMS) if args.item in (None, "all") else [args.item]
    cfg = _order_config(args)
    reports = [check_item(i, int(args.trials), cfg, int(args.seed)) for i in items]
    code = EXIT_FALSIFIED if any(r.status == "falsified" for r in reports) else EXIT_OK
    rows = [(r.theorem_item, r.trials, r.antecedent_hits, len(r.counterexamples), r.status) for r in reports]
    payload = reports[0] if len(reports) == 1 else {"reports": reports}
    return Result(payload, rows_to_csv(("item", "trials", "antecedent_hits", "counterexamples", "status"), rows), code)


COMMANDS = {
    "transform": (cmd_transform, "finite Z-transform of a CSV signal"),
    "laplace": (cmd_laplace, "trapezoid Laplace transform of a sampled signal"),
    "invert": (cmd_invert, "power-series inversion of a transfer function"),
    "poles": (cmd_poles, "poles and zeros of a transfer function"),
    "stability": (cmd_stability, "pole-magnitude stability verdict"),
    "freqresp": (cmd_freqresp, "frequency response table on [0, pi]"),
    "convolve": (cmd_convolve, "linear convolution of two CSV signals"),
    "fuzzy-transform": (cmd_fuzzy_transform, "interval Z-transform of a fuzzy signal"),
    "order-check": (cmd_order_check, "transform-based stochastic order verdict"),
    "integrate": (cmd_integrate, "integral of a pmf transform over real z"),
    "theorem-test": (cmd_theorem_test, "randomized implication checks"),
}
CSV_DEFAULT = {"freqresp"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zorder", description="Z-transform and transform-order toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option defaults (keys use underscores)")
    common.add_argument("--output", "-o", help="write the report here instead of standard output")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    rational_opts = argparse.ArgumentParser(add_help=False)
    rational_opts.add_argument("--rational", help='JSON file {"num": [...], "den": [...]}')
    rational_opts.add_argument("--num", help="numerator coefficients of z^-i, comma separated")
    rational_opts.add_argument("--den", help="denominator coefficients of z^-i, comma separated")

    grid_opts = argparse.ArgumentParser(add_help=False)
    grid_opts.add_argument("--z-grid", dest="z_grid", help="comma-separated z values, each > 1")
    grid_opts.add_argument("--alpha-grid", dest="alpha_grid", help="comma-separated levels in [0, 1]")
    grid_opts.add_argument("--threshold", type=float, default=None)
    grid_opts.add_argument("--tolerance", type=float, default=None)

    def add(name, parents=()):
        func, help_text = COMMANDS[name]
        p = sub.add_parser(name, help=help_text, parents=[common, *parents])
        p.set_defaults(func=func)
        return p

    p = add("transform")
    p.add_argument("--input", "-i", required=False, help="CSV with header n,amplitude")
    p.add_argument("--z", action="append", default=None, help="evaluation point, e.g. 2 or 1+0.5j (repeatable)")

    p = add("laplace")
    p.add_argument("--input", "-i", help="CSV with header t,amplitude")
    p.add_argument("--s", action="append", default=None, help="complex frequency (repeatable)")

    p = add("invert", [rational_opts])
    p.add_argument("--count", type=int, default=None)

    add("poles", [rational_opts])
    add("stability", [rational_opts])

    p = add("freqresp", [rational_opts])
    p.add_argument("--points", type=int, default=None)

    p = add("convolve")
    p.add_argument("--a", help="first CSV signal")
    p.add_argument("--b", help="second CSV signal")

    p = add("fuzzy-transform")
    p.add_argument("--input", "-i", help="fuzzy signal JSON")
    p.add_argument("--z", action="append", type=float, default=None, help="real z > 0 (repeatable)")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--alpha-grid", dest="alpha_grid")

    p = add("order-check", [grid_opts])
    p.add_argument("--kind", choices=KINDS, default=None)
    p.add_argument("--x", help="distribution: JSON file, geo:p, or point:n1=w1,...")
    p.add_argument("--y", help="distribution for the comparison side")
    p.add_argument("--x2", help="second numerator distribution for relative kinds (default: --y)")
    p.add_argument("--y2", help="second denominator distribution for relative kinds (default: --x)")
    p.add_argument("--x-limit", dest="x_limit", type=int)
    p.add_argument("--y-limit", dest="y_limit", type=int)
    p.add_argument("--z-lo", dest="z_lo", type=float)
    p.add_argument("--z-hi", dest="z_hi", type=float)

    p = add("integrate")
    p.add_argument("--x", help="distribution: JSON file, geo:p, or point:n1=w1,...")
    p.add_argument("--z-lo", dest="z_lo", type=float)
    p.add_argument("--z-hi", dest="z_hi", type=float)

    p = add("theorem-test", [grid_opts])
    p.add_argument("--item", help=f"one of {', '.join(ITEMS)} or 'all' (default)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="master seed")
    return parser


def _apply_config(args) -> None:
    if args.config:
        data = read_json(args.config)
        if not isinstance(data, dict):
            raise InputError(f"{args.config}: expected a JSON object of option values")
        for key, value in data.items():
            if key in ("command", "func", "config"):
                continue
            if not hasattr(args, key):
                raise InputError(f"{args.config}: unknown option {key!r} for {args.command}")
            if getattr(args, key) is None:
                setattr(args, key, value)
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    for key in ("input", "a", "b"):
        if hasattr(args, key) and getattr(args, key) is None:
            if key == "input" or args.command == "convolve":
                raise InputError(f"{args.command} needs --{key}")
    if args.command == "order-check" and args.kind is None:
        raise InputError("order-check needs --kind")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        _apply_config(args)
        result = args.func(args)
        fmt = args.format or ("csv" if args.command in CSV_DEFAULT else "json")
        text = result.csv_text if fmt == "csv" else dumps(result.payload)
        if args.output:
            try:
                Path(args.output).write_text(text)
            except OSError as exc:
                raise InputError(f"{args.output}: cannot write ({exc.strerror})") from None
        else:
            stdout.write(text)
        return result.code
    except NumericalError as exc:
        print(f"zorder {args.command}: numerical error: {exc}", file=stderr)
        return EXIT_NUMERICAL
    except (InputError, ValueError) as exc:
        print(f"zorder {args.command}: {exc}", file=stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
