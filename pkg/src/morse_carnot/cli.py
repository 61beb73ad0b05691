"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid parameters, 3 ledger failed.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys

from . import figures, optimize, verify
from .cycle import evaluate_cycle
from .errors import EngineError
from .serialize import dumps
from .spectra import EngineParams, WidthParams, morse_potential_value, validate_params, width_from_depth

EXIT_OK, EXIT_USAGE, EXIT_PARAMS, EXIT_LEDGER = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def finite_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return x


def _plain(x) -> str:
    return format(x, ".7g") if isinstance(x, float) else str(x)


def _emit(out, pairs):
    for name, value in pairs:
        print(f"{name} = {_plain(value)}", file=out)


def _param_flags(sp, required: bool):
    defaults = verify.DEFAULT_PARAMS
    for name in ("a", "d0", "l1", "r"):
        kwargs = {"required": True} if required else {"default": getattr(defaults, name)}
        sp.add_argument(f"--{name}", type=finite_float, **kwargs)
    sp.add_argument("--vbar", type=finite_float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="morse-carnot",
                     description="Carnot-like quantum engine with a Morse working substance")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("cycle", help="evaluate one cycle")
    _param_flags(sp, required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("optimize", help="maximize a power curve or solve the degree-8 polynomial")
    sp.add_argument("--target", required=True,
                    choices=[o.value for o in optimize.Objective] + ["paper-poly"])
    sp.add_argument("--tol", type=finite_float, default=verify.DEFAULT_TOL)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("figures", help="write the three figure CSV files")
    sp.add_argument("--out", required=True)
    sp.add_argument("--samples", type=int, default=512)
    sp.add_argument("--rmax", type=finite_float, default=20.0)
    _param_flags(sp, required=False)

    sp = sub.add_parser("verify", help="run the discrepancy ledger")
    sp.add_argument("--tol", type=finite_float, default=verify.DEFAULT_TOL)
    sp.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    sp.add_argument("--draws", type=int, default=verify.DEFAULT_DRAWS)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("width", help="well width at depth -v0")
    sp.add_argument("--alpha", type=finite_float, required=True)
    sp.add_argument("--v0", type=finite_float, required=True)
    sp.add_argument("--d0", type=finite_float, required=True)

    sp = sub.add_parser("potential", help="Morse potential value")
    sp.add_argument("--alpha", type=finite_float, required=True)
    sp.add_argument("--x0", type=finite_float, required=True)
    sp.add_argument("--d0", type=finite_float, required=True)
    sp.add_argument("--x", type=finite_float, required=True)
    return parser


def _params(args) -> EngineParams:
    return validate_params(EngineParams(a=args.a, d0=args.d0, l1=args.l1, r=args.r, vbar=args.vbar))


def _cmd_cycle(args, out):
    res = evaluate_cycle(_params(args))
    if args.json:
        print(dumps(dataclasses.asdict(res)), file=out)
        return EXIT_OK
    w = res.widths
    _emit(out, [
        ("l1", w.l1), ("l2", w.l2), ("l3", w.l3), ("l4", w.l4),
        *zip(("W12", "W23", "W34", "W41"), res.work_per_stroke),
        ("W", res.total_work), ("Q_H", res.heat_in), ("Q_L", res.heat_out),
        ("eta", res.eta), ("eta_ho", res.eta_ho), ("eta_energy_ratio", res.eta_energy_ratio),
        ("alpha", res.alpha_shorthand), ("beta", res.beta_shorthand),
        ("E_H", res.e_high), ("E_L", res.e_low),
        ("tau", res.cycle_time), ("power", res.power),
    ])
    return EXIT_OK


def _cmd_optimize(args, out):
    if args.target == "paper-poly":
        roots = optimize.paper_polynomial_roots()
        if args.json:
            print(dumps({"coefficients": roots.coefficients,
                         "roots": [{"value": x, "multiplicity": m} for x, m in roots.roots],
                         "eta_star": optimize.eta_star_paper()}), file=out)
            return EXIT_OK
        pairs = []
        for i, (x, m) in enumerate(roots.roots, 1):
            pairs += [(f"root_{i}", x), (f"multiplicity_{i}", m)]
        _emit(out, pairs + [("eta_star", optimize.eta_star_paper())])
        return EXIT_OK
    res = optimize.maximize_scalar(args.target, tol=args.tol)
    if args.json:
        print(dumps(dataclasses.asdict(res)), file=out)
        return EXIT_OK
    _emit(out, [("argmax", res.argmax), ("max", res.max_value),
                ("bracket_lo", res.bracket[0]), ("bracket_hi", res.bracket[1]),
                ("tolerance", res.tolerance), ("iterations", res.iterations)])
    return EXIT_OK


def _cmd_figures(args, out):
    grid = figures.GridSpec(samples=args.samples, rmax=args.rmax)
    for path in figures.write_figures(args.out, _params(args), grid):
        print(f"wrote = {path}", file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    if args.draws < 1 or not args.tol > 0:
        raise UsageError("verify: --draws must be >= 1 and --tol > 0")
    ledger = verify.run_ledger(tol=args.tol, seed=args.seed, draws=args.draws)
    out.write(verify.render_report(ledger, "json" if args.json else "text"))
    return EXIT_OK if ledger.overall == "Pass" else EXIT_LEDGER


def _cmd_width(args, out):
    wp = WidthParams(alpha_morse=args.alpha, x0=0.0, v0=args.v0, d0=args.d0)
    _emit(out, [("L", width_from_depth(wp))])
    return EXIT_OK


def _cmd_potential(args, out):
    # v0 only sets the width and does not enter V(x)
    wp = WidthParams(alpha_morse=args.alpha, x0=args.x0, v0=0.5 * args.d0, d0=args.d0)
    _emit(out, [("V", morse_potential_value(args.x, wp))])
    return EXIT_OK


COMMANDS = {
    "cycle": _cmd_cycle,
    "optimize": _cmd_optimize,
    "figures": _cmd_figures,
    "verify": _cmd_verify,
    "width": _cmd_width,
    "potential": _cmd_potential,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
