"""Command-line front end: ``eval``, ``figures`` and ``verify``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid
parameters, 3 an evaluation failed.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import math
import os
import sys
import warnings
from typing import Callable, Iterator

from . import __version__
from .config import get_config, load_config, use_config, with_tolerance
from .errors import DomainError, WrightkitError
from .figures import FIGURES, figure_table, sister_label
from .probability import mvar_transform
from .results import EvalResult, Method, PointMass
from .special import mittag_leffler
from .stable import stable_density, stable_scaled, validate
from .tables import Format, GridSpec, Row, Table, config_hash, render
from .tfdwe import GreenSpec, Problem, four_sisters, green_cauchy, green_laplace, green_signalling, three_sisters
from .transforms import LaplaceFamily
from .wright import WrightParams, m_two_var, wright_f, wright_m, wright_w

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_EVAL = 0, 1, 2, 3

FUNCTIONS = ("wright", "m", "f", "ml", "green-cauchy", "green-signalling", "sisters3", "sisters4",
             "stable", "mvar")


class EvalFailure(Exception):
    def __init__(self, op: str, exc: BaseException):
        super().__init__(f"{op}: {type(exc).__name__}: {exc}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + ("lambda" if n == "lam" else n) for n in missing)
        raise DomainError(f"{args.function} needs {flags}")


def _closed(v: float) -> EvalResult:
    return EvalResult(v, 4e-16 * abs(v), Method.CLOSED_FORM)


def _abscissae(args, default_axis: str) -> tuple[str, list[float]]:
    """Pick the swept variable: --grid sweeps x, --grid-t sweeps t."""
    if args.grid and args.grid_t:
        raise DomainError("give either --grid or --grid-t, not both")
    if args.grid:
        return "x", GridSpec.parse(args.grid, args.log).points()
    if args.grid_t:
        return "t", GridSpec.parse(args.grid_t, args.log).points()
    if default_axis == "t":
        _need(args, "t")
        return "t", [args.t]
    _need(args, "x")
    return "x", [args.x]


def _point_evaluator(args) -> tuple[str, Callable[[float], list[tuple[str, EvalResult | PointMass]]]]:
    """Return (axis, f) where f(abscissa) gives labelled results."""
    fn = args.function
    one = lambda g: (lambda v: [("", g(v))])
    if fn == "wright":
        _need(args, "lam", "mu")
        p = WrightParams(args.lam, args.mu)
        return "x", one(lambda z: wright_w(p, z))
    if fn == "m":
        _need(args, "nu")
        return "x", one(lambda x: wright_m(args.nu, x))
    if fn == "f":
        _need(args, "nu")
        return "x", one(lambda z: wright_f(args.nu, z))
    if fn == "ml":
        _need(args, "alpha")
        beta = 1.0 if args.mu is None else args.mu
        return "x", one(lambda x: mittag_leffler(args.alpha, beta, x))
    if fn in ("green-cauchy", "green-signalling"):
        _need(args, "nu")
        problem = Problem.CAUCHY if fn == "green-cauchy" else Problem.SIGNALLING
        spec = GreenSpec(problem, args.nu, args.D)
        if args.s is not None:
            return "x", one(lambda x: _closed(green_laplace(spec, x, args.s)))
        green = green_cauchy if problem is Problem.CAUCHY else green_signalling
        if args.grid_t:
            _need(args, "x")
            return "t", one(lambda t: green(spec, args.x, t))
        _need(args, "t")
        return "x", one(lambda x: green(spec, x, args.t))
    if fn in ("sisters3", "sisters4"):
        nu = 0.5
        if fn == "sisters4":
            _need(args, "nu")
            nu = args.nu
        mus = (1.0, 0.0, 0.5) if fn == "sisters3" else None

        def labelled(d: dict[float, EvalResult]):
            return [(sister_label(nu, mu), r) for mu, r in d.items()]

        if args.s is not None:
            def laplace(x):
                ms = mus or tuple(four_sisters(nu, 1.0, 1.0))
                return [(sister_label(nu, mu), _closed(LaplaceFamily(mu, nu, x)(args.s).real)) for mu in ms]
            return "x", laplace
        if fn == "sisters3":
            def s3(x, t):
                r = three_sisters(x, t)
                return [("phi", r.phi), ("psi", r.psi), ("chi", r.chi)]
            if args.grid_t:
                _need(args, "x")
                return "t", lambda t: s3(args.x, t)
            _need(args, "t")
            return "x", lambda x: s3(x, args.t)
        if args.grid_t:
            _need(args, "x")
            return "t", lambda t: labelled(four_sisters(nu, args.x, t))
        _need(args, "t")
        return "x", lambda x: labelled(four_sisters(nu, x, args.t))
    if fn == "stable":
        _need(args, "alpha", "theta")
        p = validate(args.alpha, args.theta)
        if p.is_singular():
            return "x", lambda x: [("", stable_scaled(p, x, args.t or 1.0))]
        if args.t is not None and args.t != 1.0:
            c = args.t ** (-1.0 / p.alpha)
            return "x", one(lambda x: stable_density(p, x * c).scaled(c))
        return "x", one(lambda x: stable_density(p, x))
    if fn == "mvar":
        _need(args, "nu")
        if args.s is not None:
            return "x", one(lambda x: _closed(mvar_transform("T", args.nu, x, args.s)))
        if args.grid_t:
            _need(args, "x")
            return "t", one(lambda t: m_two_var(args.nu, args.x, t))
        _need(args, "t")
        return "x", one(lambda x: m_two_var(args.nu, x, args.t))
    raise DomainError(f"unknown function {fn!r}")


def _params(args) -> dict:
    keys = ("function", "nu", "alpha", "theta", "mu", "lam", "x", "t", "s", "D", "grid", "grid_t", "log")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def eval_table(args) -> Table:
    axis, f = _point_evaluator(args)
    _, pts = _abscissae(args, axis)
    table = Table(f"eval {args.function}")
    params = _params(args)
    table.meta["params"] = json.dumps(params, sort_keys=True)
    table.meta["abscissa"] = axis
    table.meta["config_sha256"] = config_hash(get_config().as_dict(), params)
    masses = []
    for v in pts:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                results = f(v)
        except DomainError:
            raise
        except (WrightkitError, ArithmeticError) as exc:
            raise EvalFailure(f"{args.function} at {axis}={v!r}", exc) from exc
        for label, r in results:
            if isinstance(r, PointMass):
                masses.append(r)
                continue
            table.rows.append(Row.of(v, r, label))
    if masses:
        m = masses[0]
        table.meta["point_mass"] = f"location={m.location!r} weight={m.weight!r}"
    return table


# ----------------------------------------------------------------------


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    table = eval_table(args)
    _write(render(table, args.format), args.out)
    return EXIT_OK


def cmd_figures(args) -> int:
    ids = list(FIGURES) if args.figure == "all" else [args.figure]
    tables = [(k, figure_table(k)) for k in ids]
    fmt = Format(args.format)
    if len(tables) == 1 and not (args.out and os.path.isdir(args.out)):
        _write(render(tables[0][1], fmt), args.out)
        return EXIT_OK
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    for k, t in tables:
        path = os.path.join(outdir, f"figure_{int(k)}.{fmt.value}")
        _write(render(t, fmt), path)
        print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES, report, run

    names = args.suites or ["all"]
    if names != ["all"]:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise DomainError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)} or all")
    checks = run("all" if names == ["all"] else names)
    rep = report(checks)
    if args.json:
        text = json.dumps(rep, indent=1) + "\n"
    else:
        text = "".join(c.line() + "\n" for c in checks)
        text += f"{rep['n_checks'] - rep['n_failed']}/{rep['n_checks']} checks passed\n"
    _write(text, args.out)
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def _float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wrightkit", description="Wright functions, fractional diffusion "
                                "fundamental solutions and stable densities.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_float, help="relative tolerance for series and quadrature")
    common.add_argument("--out", help="output file (figures: directory when several tables)")
    common.add_argument("--format", choices=[f.value for f in Format], default="csv")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a function on a grid")
    e.add_argument("function", choices=FUNCTIONS)
    for name in ("nu", "alpha", "theta", "mu", "x", "t", "s"):
        e.add_argument(f"--{name}", type=_float)
    e.add_argument("--lambda", dest="lam", type=_float)
    e.add_argument("--D", type=_float, default=1.0, help="diffusivity (default 1)")
    e.add_argument("--grid", help="min:max:count over x")
    e.add_argument("--grid-t", dest="grid_t", help="min:max:count over t")
    e.add_argument("--log", action="store_true", help="logarithmic grid spacing")
    e.set_defaults(handler=cmd_eval)

    f = sub.add_parser("figures", parents=[common], help="emit data tables for figures 1..9")
    f.add_argument("figure", help="1..9 or all")
    f.set_defaults(handler=cmd_figures)

    v = sub.add_parser("verify", parents=[common], help="run identity suites")
    v.add_argument("suites", nargs="*", help="suite ids or all")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.set_defaults(handler=cmd_verify)
    return p


@contextlib.contextmanager
def _configured(args) -> Iterator[None]:
    cfg = load_config()
    if args.tol is not None:
        cfg = with_tolerance(cfg, args.tol)
    with use_config(cfg):
        yield


def _join_grid_values(argv: list[str]) -> list[str]:
    # "--grid -5:5:101" would otherwise read the range as an option
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--grid", "--grid-t") and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_grid_values(list(sys.argv[1:] if argv is None else argv)))
    try:
        with _configured(args):
            return args.handler(args)
    except DomainError as exc:
        print(f"wrightkit: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except EvalFailure as exc:
        print(f"wrightkit: evaluation failed in {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (WrightkitError, ArithmeticError) as exc:
        print(f"wrightkit: evaluation failed in {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except OSError as exc:
        print(f"wrightkit: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
