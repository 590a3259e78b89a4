"""Command line entry point.

    hsbound estimate --dim 2 --out gtable_d2.json
    hsbound bound gtable_d2.json [--mode conservative] [--curve 200]
    hsbound curve gtable_d2.json          # bound with a 200-point curve
    hsbound verify

Exit codes: 0 ok, 1 usage, 2 I/O or parse, 3 numeric/degenerate, 4 verification failure.
"""

import argparse
import os
import sys
import time
from pathlib import Path

from .bounds import bound_report
from .config import MODES, RunConfig
from .errors import HSBoundError
from .gtable import build_gtable
from .serialize import curve_csv, dumps_report, dumps_table, loads_table

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3, 4
DEFAULT_CURVE = 200


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"error[E_USAGE]: {message}\n")


def _fail(code, message, status):
    print(f"error[{code}]: {message}", file=sys.stderr)
    return status


def _config_flags(p):
    p.add_argument("--config", help="JSON file with RunConfig fields; flags override it")
    p.add_argument("--dim", type=int, dest="d")
    p.add_argument("--samples", type=int, dest="samples_per_k")
    p.add_argument("--seed", type=int, dest="master_seed")
    p.add_argument("--chunk-size", type=int, dest="chunk_size")
    p.add_argument("--confidence", type=float, dest="confidence_level")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--search-cap", type=float, dest="search_cap")
    p.add_argument("--curve", type=int, dest="curve_samples", metavar="N",
                   help="emit N (a, a/C(a)) points as CSV next to the report")
    p.add_argument("--out", dest="output_path")
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap for Monte Carlo chunks (results do not depend on it)")


def build_parser():
    parser = _Parser(prog="hsbound", description="Improved analyticity bounds for the hard-sphere gas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    est = sub.add_parser("estimate", help="build the g~_d(k) table")
    _config_flags(est)
    for name in ("bound", "curve"):
        p = sub.add_parser(name, help="optimize a/C_d(a) for a saved table"
                           + (" and write the curve CSV" if name == "curve" else ""))
        p.add_argument("gtable", help="table file written by 'estimate'")
        _config_flags(p)
    sub.add_parser("verify", help="run the built-in oracle checks")
    return parser


def _load_config(args):
    keys = RunConfig.field_names()
    overrides = {k: getattr(args, k) for k in keys if hasattr(args, k)}
    return RunConfig.from_sources(args.config, **overrides)


def _check_writable(path):
    parent = Path(path).resolve().parent
    if not parent.is_dir() or not os.access(parent, os.W_OK):
        raise OSError(f"cannot write {path}: directory {parent} missing or not writable")


def _write(path, text):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_estimate(args):
    config = _load_config(args)
    out = config.output_path or f"gtable_d{config.d}.json"
    _check_writable(out)
    workers = args.threads or os.cpu_count() or 1
    t0 = time.perf_counter()

    def progress(e):
        print(f"  k={e.k} done", file=sys.stderr, flush=True)

    table = build_gtable(config, workers=workers, progress=progress)
    elapsed = time.perf_counter() - t0
    _write(out, dumps_table(table))

    print(f"g~_{table.d}(k), k_max = {table.k_max}")
    print(f"{'k':>3}  {'value':>12}  {'source':<11}  {'std_error':>10}  {'ci':<28}")
    rows = list(table.entries) + ([table.terminal] if table.terminal else [])
    for e in rows:
        if e.estimate is not None:
            se = f"{e.estimate.std_error:.3g}"
            ci = f"[{e.estimate.ci_low:.4g}, {e.estimate.ci_high:.4g}]"
        else:
            se, ci = "-", e.exact_form
        print(f"{e.k:>3}  {e.value:>12.6g}  {e.source:<11}  {se:>10}  {ci}")
    print(f"note: {table.truncation_note}")
    print(f"wrote {out} ({elapsed:.1f}s wall clock)")
    return EXIT_OK


def cmd_bound(args, curve_default=0):
    config = _load_config(args)
    try:
        text = Path(args.gtable).read_text()
    except OSError as exc:
        raise OSError(f"cannot read {args.gtable}: {exc.strerror or exc}") from None
    table = loads_table(text)
    curve_n = args.curve_samples if args.curve_samples is not None else (config.curve_samples or curve_default)
    report = bound_report(table, config.mode, curve_n, config.search_cap)
    out = Path(config.output_path or f"bound_d{table.d}_{config.mode}.json")
    _write(out, dumps_report(report))
    print(f"d = {report.d}, mode = {report.mode}")
    print(f"a_star            {report.a_star:.6g}")
    print(f"C_d(a_star)       {report.c_at_a_star:.6g}")
    print(f"bound |z|V_d(R) < {report.bound:.6g}")
    print(f"classical 1/e     {report.classical:.6g}")
    print(f"improvement ratio {report.improvement_ratio:.6g}")
    print(f"wrote {out}")
    if report.curve is not None:
        csv_path = out.with_name(out.stem + ".curve.csv")
        _write(csv_path, curve_csv(report.curve))
        print(f"wrote {csv_path} ({len(report.curve)} rows)")
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_checks

    results = run_checks()
    for r in results:
        print(r.line())
    failed = [r.name for r in results if not r.ok]
    if failed:
        return _fail("E_VERIFY", f"failed checks: {', '.join(failed)}", EXIT_VERIFY)
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "estimate": cmd_estimate,
        "bound": cmd_bound,
        "curve": lambda a: cmd_bound(a, curve_default=DEFAULT_CURVE),
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except HSBoundError as exc:
        return _fail(exc.code, str(exc), exc.exit_code)
    except OSError as exc:
        return _fail("E_IO", str(exc), EXIT_IO)
    except ValueError as exc:
        # malformed config file contents
        return _fail("E_USAGE", str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
