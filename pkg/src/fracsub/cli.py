"""Command-line harness for the sub-diffusion solver library.

Subcommands:
    weights  print convolution quadrature weights
    ml       evaluate the Mittag-Leffler function
    fode     run a scheme on the scalar power benchmark
    pde      run a scheme on the 1D/2D model problem
    table    regenerate a benchmark table and check golden values
    check    run the module invariant suites

Exit codes: 0 success, 2 invalid usage or parameters, 3 golden-value
or invariant-check failure.  Defaults may be supplied by a TOML file
via --config; command-line flags win.
"""

import argparse
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

import numpy as np

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


def _parse_int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fracsub",
        description="Solvers and convergence studies for sub-diffusion "
                    "equations with time-singular sources.")
    parser.add_argument("--config", metavar="PATH",
                        help="TOML file with per-subcommand defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="print convolution quadrature weights")
    p.add_argument("--scheme", choices=("gl", "fbdf2"), default="gl")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True,
                   help="highest weight index")
    p.add_argument("--csv", action="store_true",
                   help="emit CSV with header instead of plain columns")

    p = sub.add_parser("ml", help="evaluate the Mittag-Leffler function")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("fode", help="scalar power benchmark convergence run")
    p.add_argument("--scheme", choices=("glbe", "fbdf22", "cbe", "usbd"),
                   default="glbe")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--nu", type=float, required=True,
                   help="solution exponent (u = t^nu)")
    p.add_argument("--lambda", dest="lam", type=float, default=-1.0,
                   help="reaction coefficient of the benchmark equation")
    p.add_argument("--T", type=float, default=1.0)
    p.add_argument("--N", type=_parse_int_list, required=True,
                   help="comma-separated step counts, e.g. 20,40,80")

    p = sub.add_parser("pde", help="model-problem convergence run")
    p.add_argument("--dim", type=int, choices=(1, 2), default=1)
    p.add_argument("--scheme", choices=("glbe", "fbdf22", "cbe", "usbd"),
                   default="glbe")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--mu", type=float, default=-0.5,
                   help="source exponent for case a (ignored for case b)")
    p.add_argument("--M", type=int, default=128, help="mesh subdivisions")
    p.add_argument("--N", type=_parse_int_list, required=True,
                   help="comma-separated step counts")
    p.add_argument("--case", choices=("a", "b"), default="a",
                   help="a: singular source, b: indicator initial data")
    p.add_argument("--T", type=float, default=1.0)

    p = sub.add_parser("table", help="regenerate a benchmark table")
    p.add_argument("--id", type=int, required=True, choices=range(1, 9),
                   metavar="K", help="table number, 1..8")
    p.add_argument("--out", metavar="DIR",
                   help="directory for table<K>.csv (omit to skip CSV)")
    p.add_argument("--tolerance-profile", choices=("strict", "paper"),
                   default="paper")
    p.add_argument("--threads", type=int, default=None)

    sub.add_parser("check", help="run the module invariant suites")
    return parser


def _apply_config(args, parser, argv=None):
    """Fill unset argument defaults from the TOML section of the command."""
    if not args.config:
        return args
    try:
        with open(args.config, "rb") as fh:
            config = tomllib.load(fh)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        parser.error(f"cannot read config: {exc}")
    section = config.get(args.command, {})
    if not isinstance(section, dict):
        parser.error(f"config section [{args.command}] must be a table")
    if argv is None:
        argv = sys.argv[1:]
    for key, value in section.items():
        attr = {"lambda": "lam"}.get(key, key.replace("-", "_"))
        if not hasattr(args, attr):
            parser.error(f"unknown config key {key!r} for {args.command}")
        # flags given on the command line take precedence
        if f"--{key}" in argv or f"--{key.replace('_', '-')}" in argv:
            continue
        if attr == "N" and isinstance(value, list):
            value = [int(v) for v in value]
        setattr(args, attr, value)
    return args


def _print_convergence(report):
    print(f"scheme={report.scheme} alpha={report.alpha}"
          + ("" if report.exp is None else f" exp={report.exp}"))
    print(f"{'param':>8s} {'error':>14s} {'rate':>6s}")
    for row in report.rows:
        rate = "" if row.rate is None else f"{row.rate:.2f}"
        print(f"{row.param:8d} {row.error:14.6E} {rate:>6s}")
    if report.average_rate is not None:
        print(f"average rate {report.average_rate:.2f}"
              + (f" (theory {report.rate_theory:.2f})"
                 if report.rate_theory else ""))


def cmd_weights(args):
    from .weights import fbdf2_weights, gl_weights

    if args.n < 0:
        print("n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    maker = gl_weights if args.scheme == "gl" else fbdf2_weights
    try:
        kernel = maker(args.alpha, args.n)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if args.csv:
        print("j,weight")
        for j, w in enumerate(kernel.weights):
            print(f"{j},{w:.17g}")
    else:
        for j, w in enumerate(kernel.weights):
            print(f"{j:6d} {w:.17g}")
    return EXIT_OK


def cmd_ml(args):
    from .ml import ml_eval

    try:
        value = ml_eval(args.alpha, args.beta, args.x)
    except (ValueError, ArithmeticError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    print(f"{value:.15g}")
    return EXIT_OK


def cmd_fode(args):
    from .harness import fode_study

    try:
        report = fode_study(args.scheme, args.alpha, args.nu, args.N,
                            lam=args.lam, T=args.T)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    _print_convergence(report)
    return EXIT_OK


def cmd_pde(args):
    from .harness import pde_study

    try:
        report = pde_study(args.scheme, args.alpha, args.mu, args.N,
                           dimension=args.dim, case=args.case,
                           subdivisions=args.M, T=args.T)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    _print_convergence(report)
    return EXIT_OK


def cmd_table(args):
    from .harness import reproduce_table

    try:
        reports, failures, csv_path = reproduce_table(
            args.id, out_dir=args.out,
            tolerance_profile=args.tolerance_profile, threads=args.threads)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    checked = sum(len(r.rows) + 1 for r in reports)
    if csv_path:
        print(f"wrote {csv_path}")
    if failures:
        for failure in failures:
            print(f"FAIL {failure}")
        print(f"table {args.id}: {len(failures)} of {checked} checks failed "
              f"({args.tolerance_profile} profile)")
        return EXIT_CHECK_FAILED
    print(f"table {args.id}: all {checked} checks passed "
          f"({args.tolerance_profile} profile)")
    return EXIT_OK


def cmd_check(_args):
    from .harness import run_self_checks

    results = run_self_checks()
    width = max(len(name) for name in results)
    failed = 0
    for name, (ok, measured, bound) in results.items():
        status = "ok  " if ok else "FAIL"
        print(f"{status} {name:<{width}s} measured {measured:.3E} "
              f"(bound {bound:.0E})")
        failed += not ok
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return EXIT_CHECK_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _apply_config(args, parser, argv)
    handler = {"weights": cmd_weights, "ml": cmd_ml, "fode": cmd_fode,
               "pde": cmd_pde, "table": cmd_table, "check": cmd_check}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
