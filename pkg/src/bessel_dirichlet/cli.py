"""Command-line front end.

Exit status: 0 on success, 1 on domain or usage errors (including a failing
``verify``), 2 when a resource limit is hit.  Numbers are written with 17
significant digits; CSV metadata sits on ``#`` lines above the header.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import warnings

import numpy as np

from . import acceptance
from .bessel_kernel import bessel_j
from .errors import ConvergenceError, DomainError, ResourceError
from .grids import SignalTrace, TimeGrid
from .ladder_response import convolve_response, prony_export
from .rayleigh_sums import convergence_diagnostics, rayleigh_closed_form, rayleigh_partial_sum
from .relaxation_series import build_series, creep_F, memory_Phi, relaxation_G
from .transform_oracle import InversionConfig, oracle_compare
from .zero_finder import zero_table


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _order(text: str) -> float:
    try:
        nu = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}") from None
    if not nu > -1.0:
        raise argparse.ArgumentTypeError(f"Bessel order requires nu > -1, got {nu:g}")
    return nu


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {value}")
    return value


def fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def to_json(obj, indent: int = 0) -> str:
    """JSON with floats at 17 significant digits; non-finite floats become null."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}"{k}": {to_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v, indent + 1) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _csv(columns, rows, meta=()) -> str:
    buf = io.StringIO()
    for key, value in meta:
        buf.write(f"# {key}={value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else (str(v) if isinstance(v, (int, np.integer)) else fmt(v)) for v in row])
    return buf.getvalue()


def _record(payload: dict, fmt_name: str) -> str:
    if fmt_name == "json":
        return to_json(payload) + "\n"
    return _csv(["key", "value"], [(k, v) for k, v in payload.items()])


def _grid(args) -> TimeGrid:
    if not 0.0 < args.t_min < args.t_max:
        raise DomainError(f"need 0 < t-min < t-max, got {args.t_min:g}, {args.t_max:g}")
    if args.geometric:
        return TimeGrid.geometric(args.t_min, args.t_max, args.points)
    return TimeGrid.linear(args.t_min, args.t_max, args.points)


def cmd_zeros(args) -> str:
    table = zero_table(args.nu, args.count)
    rows = [(i + 1, z, abs(bessel_j(args.nu, z).value)) for i, z in enumerate(table.zeros)]
    if args.format == "json":
        return to_json({
            "nu": args.nu,
            "zeros": table.zeros,
            "residuals": [r[2] for r in rows],
            "residual_bound": table.residual_bound,
        }) + "\n"
    meta = [("nu", fmt(args.nu)), ("count", args.count), ("residual_bound", fmt(table.residual_bound))]
    return _csv(["n", "j_nu_n", "residual"], rows, meta)


def cmd_sum(args) -> str:
    est = rayleigh_partial_sum(zero_table(args.nu, args.count))
    closed = rayleigh_closed_form(args.nu)
    return _record({
        "nu": args.nu,
        "n_terms": est.n_terms,
        "partial_sum": est.partial_sum,
        "tail_estimate": est.tail_estimate,
        "tail_bound": est.tail_bound,
        "total": est.total,
        "closed_form": closed,
        "abs_error": abs(est.total - closed),
    }, args.format)


def cmd_diagnose(args) -> str:
    diag = convergence_diagnostics(args.nu, zero_table(args.nu, args.count))
    if args.format == "json":
        return to_json({
            "nu": args.nu,
            "n_terms": args.count,
            "d_estimate": diag.d_estimate,
            "sigma_estimate": diag.sigma_estimate,
            "d_values": diag.d_values,
            "sigma_values": diag.sigma_values,
        }) + "\n"
    meta = [
        ("nu", fmt(args.nu)),
        ("d_estimate", fmt(diag.d_estimate)),
        ("sigma_estimate", fmt(diag.sigma_estimate)),
    ]
    rows = zip(diag.indices.tolist(), diag.d_values, diag.sigma_values)
    return _csv(["n", "d", "sigma"], rows, meta)


def cmd_relax(args) -> str:
    grid = _grid(args)
    series = build_series(args.nu, args.tail_tol, args.t_min)
    times = grid.times
    f = creep_F(series, times)
    g = relaxation_G(series, times)
    phi = np.full(times.size, np.nan)
    ok = times >= series.phi_t_min
    if np.any(ok):
        phi[ok] = memory_Phi(series, times[ok])
    if args.format == "json":
        return to_json({
            "nu": args.nu, "n_terms": series.n_terms, "tail_tol": args.tail_tol,
            "phi_t_min": series.phi_t_min, "t": times, "F": f, "G": g, "Phi": phi,
        }) + "\n"
    meta = [
        ("nu", fmt(args.nu)),
        ("N", series.n_terms),
        ("tail_tol", fmt(args.tail_tol)),
        ("phi_t_min", fmt(series.phi_t_min)),
    ]
    return _csv(["t", "F", "G", "Phi"], zip(times, f, g, phi), meta)


def cmd_invert_check(args) -> str:
    grid = _grid(args)
    series = build_series(args.nu, args.tail_tol, args.t_min)
    report = oracle_compare(args.nu, grid, series, InversionConfig(args.gs_terms, (args.t_min, args.t_max)))
    if args.format == "json":
        return to_json(report.to_json()) + "\n"
    meta = [
        ("nu", fmt(args.nu)),
        ("max_abs_err", fmt(report.max_abs_err)),
        ("mean_abs_err", fmt(report.mean_abs_err)),
    ]
    rows = zip(report.t_values, report.series_values, report.inverted_values)
    return _csv(["t", "series", "inverted"], rows, meta)


def _read_signal(path: str) -> SignalTrace:
    with open(path, newline="") as fh:
        lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    rows = list(csv.reader(lines))
    try:
        float(rows[0][0])
    except (ValueError, IndexError):
        rows = rows[1:]
    try:
        data = np.array([[float(r[0]), float(r[1])] for r in rows])
    except (ValueError, IndexError):
        raise DomainError(f"{path}: expected two numeric columns t, V") from None
    if data.size == 0:
        raise DomainError(f"{path}: no samples")
    return SignalTrace(TimeGrid(data[:, 0]), data[:, 1])


def cmd_respond(args) -> str:
    if args.inp is None:
        raise DomainError("respond needs --in with a t,V CSV file")
    signal = _read_signal(args.inp)
    series = build_series(args.nu, args.tail_tol, args.t_min)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        current = convolve_response(series, signal)
    meta = [("nu", fmt(args.nu)), ("N", series.n_terms), ("tail_tol", fmt(args.tail_tol))]
    meta += [("warning", str(w.message)) for w in caught]
    if args.format == "json":
        return to_json({
            "nu": args.nu, "n_terms": series.n_terms, "tail_tol": args.tail_tol,
            "t": signal.times, "V": signal.values, "I": current.values,
        }) + "\n"
    return _csv(["t", "V", "I"], zip(signal.times, signal.values, current.values), meta)


def cmd_prony(args) -> str:
    model = prony_export(build_series(args.nu, args.tail_tol, args.t_min))
    if args.format == "json":
        return to_json({
            "nu": args.nu, "static_term": model.static_term,
            "c_n": model.amplitudes, "alpha_n": model.rates,
        }) + "\n"
    meta = [("nu", fmt(args.nu)), ("modes", len(model)), ("static_term", fmt(model.static_term))]
    return _csv(["c_n", "alpha_n"], zip(model.amplitudes, model.rates), meta)


def cmd_verify(args):
    results = acceptance.run_all()
    if args.format == "json":
        text = to_json({
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "passed": all(r.passed for r in results),
        }) + "\n"
    else:
        text = "\n".join(r.line() for r in results) + "\n"
        text += f"{sum(r.passed for r in results)}/{len(results)} criteria passed\n"
    return text, 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "zeros": (cmd_zeros, "first zeros of J_nu", "csv"),
    "sum": (cmd_sum, "sum of 1/j^2 with tail correction", "json"),
    "diagnose": (cmd_diagnose, "convergence-abscissa diagnostics", "json"),
    "relax": (cmd_relax, "creep, relaxation and memory functions on a grid", "csv"),
    "invert-check": (cmd_invert_check, "series against Gaver-Stehfest inversion", "json"),
    "respond": (cmd_respond, "ladder current for a sampled potential", "csv"),
    "prony": (cmd_prony, "Prony modes of the memory function", "csv"),
    "verify": (cmd_verify, "run the acceptance checks", "text"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bessel-dirichlet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text, default_format) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--nu", type=_order, default=0.0)
        p.add_argument("--count", type=_positive_int, default=1000 if name == "diagnose" else 10)
        p.add_argument("--tail-tol", type=float, default=1e-4)
        p.add_argument("--t-min", type=float, default=0.01)
        p.add_argument("--t-max", type=float, default=2.0)
        p.add_argument("--points", type=_positive_int, default=20)
        p.add_argument("--geometric", action="store_true")
        p.add_argument("--in", dest="inp")
        p.add_argument("--out")
        formats = ["csv", "json"] + (["text"] if name == "verify" else [])
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--gs-terms", type=int, default=16)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args)
        text, status = result if isinstance(result, tuple) else (result, 0)
        if args.out:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return status
    except (DomainError, ConvergenceError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ResourceError, MemoryError, OSError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
