"""Command-line front end: ``imaginarity {eval,sweep,figure,verify}``.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import harness
from .errors import ImaginarityError
from .monotones import (OptimizerConfig, m_alpha_z, m_relative_entropy, m_tsallis, me, mh,
                        werner_linear_entropy, werner_mh_closed_form)
from .states import dense_descriptor, isotropic, state_from_descriptor, werner

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

MEASURES = ("mh", "me", "mr", "mt", "maz", "lin")
AXES = ("alpha", "beta", "z", "u", "k", "F")


class ParseError(Exception):
    pass


def fmt(value: float) -> str:
    """12 significant digits, compact (CSV cells)."""
    return f"{value + 0.0:.12g}"


def fmt_fixed(value: float) -> str:
    """12 significant digits with trailing zeros kept (eval output)."""
    return f"{value + 0.0:#.12g}"


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    @classmethod
    def parse(cls, text: str) -> "Axis":
        parts = text.split(":")
        if len(parts) != 4 or parts[0] not in AXES:
            raise ParseError(f"axis must be name:start:stop:count with name in {AXES}, got {text!r}")
        try:
            axis = cls(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
        except ValueError as exc:
            raise ParseError(f"bad axis {text!r}: {exc}") from None
        if axis.count < 2:
            raise ParseError("axis count must be at least 2")
        return axis

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


def evaluate(measure: str, rho, params: dict, cfg: OptimizerConfig | None = None,
             method: str = "auto"):
    """Value of ``measure`` on ``rho``; returns ``(value, MEResult or None)``."""
    if measure == "mh":
        return mh(rho, params["alpha"], params["beta"]), None
    if measure == "me":
        res = me(rho, params["alpha"], params["beta"], cfg, method)
        return res.value, res
    if measure == "mr":
        return m_relative_entropy(rho), None
    if measure == "mt":
        return m_tsallis(rho, params["u"]), None
    if measure == "maz":
        return m_alpha_z(rho, params["alpha"], params["z"]), None
    if measure == "lin":
        return float(1.0 - np.trace(rho @ rho).real), None
    raise ParseError(f"unknown measure {measure!r}")


def _required(measure: str) -> tuple[str, ...]:
    return {"mh": ("alpha", "beta"), "me": ("alpha", "beta"), "mt": ("u",),
            "maz": ("alpha", "z")}.get(measure, ())


def _params(args, measure: str, free: tuple[str, ...] = ()) -> dict:
    params = {name: getattr(args, name) for name in ("alpha", "beta", "z", "u")}
    missing = [n for n in _required(measure) if params[n] is None and n not in free]
    if missing:
        raise ParseError(f"measure {measure} needs --{' --'.join(missing)}")
    return params


def _optimizer(args) -> OptimizerConfig:
    return OptimizerConfig(grid_resolution=args.grid, restarts=args.restarts, rng_seed=args.seed)


def _load_state(text: str | None):
    if text is None:
        raise ParseError("--state is required")
    try:
        return state_from_descriptor(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"cannot parse state descriptor: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, ImaginarityError):
            raise
        raise ParseError(str(exc)) from None


# ------------------------------------------------------------------ commands

def cmd_eval(args, out) -> int:
    rho = _load_state(args.state)
    value, res = evaluate(args.measure, rho, _params(args, args.measure), _optimizer(args), args.method)
    out.write(fmt_fixed(value) + "\n")
    if args.detail:
        detail = {"measure": args.measure, "value": value}
        if res is not None:
            detail.update(method=res.method, achieved_trace=res.achieved_trace,
                          converged=res.converged, minimizer=dense_descriptor(res.minimizer),
                          diagnostics=res.diagnostics)
        out.write(json.dumps(detail, default=harness._json_default) + "\n")
    return EXIT_OK


def sweep_rows(measure: str, axes: list[Axis], base_state, params: dict,
               cfg: OptimizerConfig | None = None, method: str = "auto"):
    """Yield ``(axis values..., value)`` in row-major order."""
    grids = np.meshgrid(*[a.values() for a in axes], indexing="ij")
    for point in zip(*(g.ravel() for g in grids)):
        p = dict(params)
        rho = base_state
        for axis, v in zip(axes, point):
            if axis.name == "k":
                rho = werner(float(v))
            elif axis.name == "F":
                rho = isotropic(float(v))
            else:
                p[axis.name] = float(v)
        if rho is None:
            raise ParseError("--state is required unless a k or F axis is swept")
        value, _ = evaluate(measure, rho, p, cfg, method)
        yield (*point, value)


def write_csv(path: str, header: list[str], rows, out=None) -> None:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(c if isinstance(c, str) else fmt(c) for c in row) + "\n")
    if path == "-":
        (out or sys.stdout).write(buf.getvalue())
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(buf.getvalue())


def cmd_sweep(args, out) -> int:
    axes = [Axis.parse(a) for a in args.axis]
    if not 1 <= len(axes) <= 2 or len({a.name for a in axes}) != len(axes):
        raise ParseError("give one or two distinct --axis specs")
    state_axes = [a for a in axes if a.name in ("k", "F")]
    if len(state_axes) > 1 or (state_axes and args.state):
        raise ParseError("a k or F axis replaces --state; use at most one")
    base = None if state_axes else _load_state(args.state)
    params = _params(args, args.measure, tuple(a.name for a in axes))
    rows = list(sweep_rows(args.measure, axes, base, params, _optimizer(args), args.method))
    write_csv(args.out, [a.name for a in axes] + ["value"], rows, out)
    return EXIT_OK


FIG1_ALPHAS = np.linspace(0.01, 0.99, 60)
FIG1_BETAS = np.linspace(1 / 60, 1.0, 60)
FIG1_STATES = {"1a": (0.0, 1.0, 0.0), "1b": (0.5, 0.25, 0.5)}
FIG2_SERIES = (("mh_a0.5_b0.5", lambda k: mh(werner(k), 0.5, 0.5)),
               ("mh_a0.25_b0.667", lambda k: mh(werner(k), 0.25, 2 / 3)),
               ("linear_entropy", werner_linear_entropy),
               ("closed_form_a0.5_b0.5", lambda k: werner_mh_closed_form(k, 0.5, 0.5)))


def figure_data(which: str) -> dict[str, tuple[list[str], list]]:
    """CSV tables behind a figure, keyed by file name."""
    if which in FIG1_STATES:
        rho = state_from_descriptor({"bloch": list(FIG1_STATES[which])})
        tables = {}
        for name, fn in (("mh", lambda a, b: mh(rho, a, b)), ("me", lambda a, b: me(rho, a, b).value)):
            rows = [(a, b, fn(a, b)) for a in FIG1_ALPHAS for b in FIG1_BETAS]
            tables[f"figure{which}_{name}.csv"] = (["alpha", "beta", "value"], rows)
        return tables
    if which == "2":
        ks = np.linspace(0.0, 1.0, 201)
        rows = [(k, fn(float(k)), name) for name, fn in FIG2_SERIES for k in ks]
        return {"figure2.csv": (["k", "value", "series"], rows)}
    raise ParseError(f"unknown figure {which!r}")


def cmd_figure(args, out) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, (header, rows) in figure_data(args.which).items():
        write_csv(str(outdir / name), header, rows)
        out.write(f"wrote {outdir / name}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = list(harness.REGISTRY) if args.suite == "all" else args.suite.split(",")
    unknown = [i for i in ids if i not in harness.REGISTRY]
    if unknown:
        raise ParseError(f"unknown check(s): {', '.join(unknown)}")
    tolerances = {i: args.tol for i in ids} if args.tol is not None else {}
    cfg = harness.SuiteConfig(seed=args.seed, trials=args.trials, tolerances=tolerances)
    ok = True
    for cid in ids:
        report = harness.run_check(cid, cfg)
        ok &= report.passed
        out.write(report.to_json() + "\n")
        out.flush()
    return EXIT_OK if ok else EXIT_VERIFY


# -------------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_PARSE)


def _add_measure_args(p, state_required: bool):
    p.add_argument("--measure", choices=MEASURES, required=True)
    p.add_argument("--state", required=state_required,
                   help="state descriptor as inline JSON or @file")
    for name in ("alpha", "beta", "z", "u"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--method", default="auto",
                   choices=("auto", "qubit_analytic", "spectral", "numeric"),
                   help="route used for me")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--grid", type=int, default=400)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imaginarity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a measure on one state")
    _add_measure_args(p, state_required=True)
    p.add_argument("--detail", action="store_true", help="also print a JSON detail line")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="sweep one or two parameters into a CSV")
    _add_measure_args(p, state_required=False)
    p.add_argument("--axis", action="append", required=True,
                   help="name:start:stop:count, name in alpha, beta, z, u, k, F")
    p.add_argument("--out", default="-", help="output CSV path, - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="write the CSV data behind a figure")
    p.add_argument("which", choices=("1a", "1b", "2"))
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--suite", default="all", help="all, or comma-separated check ids")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, help="override the tolerance of the selected checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO
    except (ImaginarityError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
