"""Command-line front end.

Subcommands: ``expand`` (one expansion run), ``sweep`` (convergence
experiment over operators and evaluation points), ``basis`` (tabulate basis
functions), ``bounds`` (tabulate truncation bounds), ``selftest`` (built-in
identity checks).

Run configuration is a TOML file::

    [function]
    expr = "exp(alpha*s)*(sin(s/3)+cos(s))"
    [function.params]
    alpha = 0.5

    [[operator]]
    kind = "bessel"              # jordan | bessel | modified_bessel
    [[operator]]
    kind = "shifted_bessel"
    alpha = 0.5
    [[operator]]
    kind = "custom"              # custom banded operator
    subdiag = [0.5]              # extended past the end by the last value
    bands = [[0.0], [1.0, 0.5]]  # bands[0] = diagonal, bands[1] = first super
    C = 2.0

    [run]
    s = [1.0, 10.0]
    n_max = 40                   # optional; default 40 (|s|<=1) / 60
    weights = "ones"             # ones | geometric:R | factorial

All numeric CSV fields are written with 17 significant digits and LF line
endings, so output is byte-stable for fixed inputs.  Exit codes: 0 success,
1 config or expression parse error, 2 numerical failure (singular Krylov
matrix, matrix-exponential overflow).

Expression syntax: ``+ - * / ^`` with conventional precedence; unary minus
binds tighter than ``*`` but looser than ``^``; ``s`` is the variable,
``exp sin cos log sqrt`` the known functions, and any other identifier is a
parameter bound in ``[function.params]``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Mapping, Sequence, TextIO

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .basisfun import basis_error_bound, default_pad, eval_basis
from .bounds import (WeightSequence, element_tail_sum, factorial_weights,
                     geometric_weights, ones_weights, remainder_scalar,
                     theorem1_bound)
from .errors import BesselNeumannError, NumericalError, ParseError
from .exprlang import ExprAst, parse
from .hessenberg import BUILTIN_KINDS, HessenbergOperator, make_builtin, make_custom
from .pipeline import (THEOREM1_MARGIN, convergence_sweep, default_n_max,
                       run_expansion)
from . import selftest as _selftest

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2


class ConfigError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _load_config(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc


def _config_function(cfg: dict) -> tuple[ExprAst, dict]:
    try:
        fn = cfg["function"]
        expr_text = fn["expr"]
    except KeyError as exc:
        raise ConfigError(f"config is missing [function] expr: {exc}") from exc
    params = dict(fn.get("params", {}))
    ast = parse(expr_text)
    return ast, params


def _config_operator(spec: Mapping[str, Any]) -> HessenbergOperator:
    kind = spec.get("kind")
    if kind is None:
        raise ConfigError("operator block is missing 'kind'")
    if kind in BUILTIN_KINDS:
        return make_builtin(kind, spec.get("alpha"))
    if kind in ("custom", "custom_banded"):
        try:
            return make_custom(spec["subdiag"], spec.get("bands", []), spec["C"])
        except KeyError as exc:
            raise ConfigError(f"custom operator is missing key {exc}") from exc
    raise ConfigError(
        f"unknown operator kind {kind!r}; expected one of "
        f"{BUILTIN_KINDS + ('custom',)}")


def _config_operators(cfg: dict) -> list[HessenbergOperator]:
    specs = cfg.get("operator", [])
    if isinstance(specs, Mapping):
        specs = [specs]
    if not specs:
        raise ConfigError("config defines no [[operator]] blocks")
    return [_config_operator(spec) for spec in specs]


def _config_run(cfg: dict) -> dict:
    run = dict(cfg.get("run", {}))
    s = run.get("s", [1.0])
    if not isinstance(s, list):
        s = [s]
    run["s"] = [float(v) for v in s]
    return run


def _config_weights(run: dict) -> WeightSequence:
    choice = str(run.get("weights", "ones"))
    if choice == "ones":
        return ones_weights()
    if choice == "factorial":
        return factorial_weights()
    if choice.startswith("geometric:"):
        return geometric_weights(float(choice.split(":", 1)[1]))
    raise ConfigError(
        f"unknown weights choice {choice!r}; expected ones, factorial, "
        "or geometric:R")


def _open_out(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", newline="\n")


def _write_csv(out: TextIO, header: Sequence[str],
               rows: Sequence[Sequence[Any]]) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(
            _fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def cmd_expand(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    ast, params = _config_function(cfg)
    ops = _config_operators(cfg)
    run_cfg = _config_run(cfg)
    op = ops[0]
    s = run_cfg["s"][0]
    n_max = int(run_cfg.get("n_max", default_n_max(s)))
    run = run_expansion(ast, params, op, n_max, s)

    w = run.coefficient_vector.values
    print(f"operator: {run.operator_name}   s = {_fmt(s)}   "
          f"n_max = {n_max}   pad = {run.pad_used}")
    print(f"g({_fmt(s)}) = {_fmt(run.g_reference)}")
    print(f"solve residual = {_fmt(run.coefficient_vector.residual)}   "
          f"condition estimate = {_fmt(run.coefficient_vector.condition_estimate)}")
    print("coefficients:")
    for l, wl in enumerate(w):
        print(f"  w_{l} = {_fmt(float(wl))}")
    print("convergence:")
    for rec in run.records:
        print(f"  n = {rec.n:3d}  partial = {_fmt(rec.partial_sum)}  "
              f"abs_error = {_fmt(rec.abs_error)}  rel_error = {_fmt(rec.rel_error)}")

    if args.out:
        with _open_out(args.out) as out:
            _write_csv(out,
                       ["operator", "s", "n", "abs_error", "rel_error",
                        "bound_simple", "bound_theorem1"],
                       [[run.operator_name, float(s), rec.n, rec.abs_error,
                         rec.rel_error, rec.bound_simple, rec.bound_theorem1]
                        for rec in run.records])
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    ast, params = _config_function(cfg)
    ops = _config_operators(cfg)
    run_cfg = _config_run(cfg)
    n_max = run_cfg.get("n_max")
    cells = convergence_sweep(ast, params, ops, run_cfg["s"],
                              int(n_max) if n_max is not None else None)

    failures = [c for c in cells if c.error is not None]
    for c in failures:
        print(f"warning: {c.operator_name} at s={_fmt(c.s)} failed: {c.error}",
              file=sys.stderr)
    if failures and len(failures) == len(cells):
        raise NumericalError("every sweep cell failed")

    rows = []
    for c in cells:
        if c.run is None:
            continue
        for rec in c.run.records:
            rows.append([c.operator_name, c.s, rec.n, rec.abs_error,
                         rec.rel_error, rec.bound_simple, rec.bound_theorem1])
    with _open_out(args.out) as out:
        _write_csv(out,
                   ["operator", "s", "n", "abs_error", "rel_error",
                    "bound_simple", "bound_theorem1"], rows)
    if args.plot:
        _plot_sweep(cells, args.plot)
    return EXIT_OK


def _plot_sweep(cells, path: str) -> None:
    try:
        import matplotlib
        matplotlib.use("svg")
        import matplotlib.pyplot as plt
    except ImportError as exc:
        raise ConfigError(
            f"--plot requires matplotlib, which is not installed: {exc}") from exc
    s_values = sorted({c.s for c in cells})
    fig, axes = plt.subplots(1, len(s_values), squeeze=False,
                             figsize=(6 * len(s_values), 4.5))
    for ax, s in zip(axes[0], s_values):
        for c in cells:
            if c.s != s or c.run is None:
                continue
            ns = [rec.n for rec in c.run.records]
            errs = [max(rec.rel_error, 1e-18) for rec in c.run.records]
            ax.semilogy(ns, errs, label=c.operator_name)
        ax.set_xlabel("truncation parameter n")
        ax.set_ylabel("relative truncation error")
        ax.set_title(f"s = {s:g}")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def cmd_basis(args: argparse.Namespace) -> int:
    op = make_builtin(args.operator, args.alpha) \
        if args.operator in BUILTIN_KINDS else None
    if op is None:
        raise ConfigError(
            f"--operator must be one of {BUILTIN_KINDS}, got {args.operator!r}")
    pad = args.pad if args.pad is not None \
        else default_pad(op.norm_bound_C, args.t, args.n)
    values = eval_basis(op, args.n, args.t, pad)
    bound = basis_error_bound(op.norm_bound_C, abs(args.t), args.n + pad)
    with _open_out(args.out) as out:
        _write_csv(out, ["ell", "t", "value", "pad", "bound"],
                   [[l, float(args.t), float(v), pad, bound]
                    for l, v in enumerate(values)])
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    ops = _config_operators(cfg)
    run_cfg = _config_run(cfg)
    weights = _config_weights(run_cfg)
    rows = []
    for op in ops:
        for s in run_cfg["s"]:
            n_max = int(run_cfg.get("n_max", default_n_max(s)))
            for n in range(1, n_max + 1):
                N = n + THEOREM1_MARGIN
                rows.append([
                    n, float(s),
                    remainder_scalar(abs(s) * op.norm_bound_C, n),
                    theorem1_bound(op, weights, s, n, N),
                    element_tail_sum(op, weights, s, n, N),
                    N,
                ])
    with _open_out(args.out) as out:
        _write_csv(out, ["n", "s", "bound_simple", "bound_theorem1",
                         "bound_element_sum", "N_used"], rows)
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    ok = _selftest.run(sys.stdout)
    return EXIT_OK if ok else EXIT_NUMERICAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="besselneumann",
        description="Generalized Bessel-Neumann expansions from Hessenberg "
                    "operators.",
        epilog="Expression syntax: + - * / ^ (integer powers); unary minus "
               "binds tighter than '*' but looser than '^'; 's' is the "
               "variable; exp/sin/cos/log/sqrt are functions; other "
               "identifiers are parameters bound in [function.params].")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="run a single expansion and print "
                        "coefficients and errors")
    pe.add_argument("--config", required=True)
    pe.add_argument("--out", help="optional CSV output path")
    pe.set_defaults(fn=cmd_expand)

    ps = sub.add_parser("sweep", help="convergence sweep over operators "
                        "and evaluation points")
    ps.add_argument("--config", required=True)
    ps.add_argument("--out", required=True, help="CSV output path ('-' for stdout)")
    ps.add_argument("--plot", help="optional SVG plot path (requires matplotlib)")
    ps.set_defaults(fn=cmd_sweep)

    pb = sub.add_parser("basis", help="tabulate basis functions phi_l(t)")
    pb.add_argument("--operator", required=True)
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--t", type=float, required=True)
    pb.add_argument("--pad", type=int, default=None)
    pb.add_argument("--alpha", type=float, default=None,
                    help="shift for shifted_bessel")
    pb.add_argument("--out", help="CSV output path (default stdout)")
    pb.set_defaults(fn=cmd_basis)

    pn = sub.add_parser("bounds", help="tabulate truncation-error bounds")
    pn.add_argument("--config", required=True)
    pn.add_argument("--out", required=True)
    pn.set_defaults(fn=cmd_bounds)

    pt = sub.add_parser("selftest", help="run built-in identity checks")
    pt.set_defaults(fn=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BesselNeumannError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
