"""Command-line front end.

Every subcommand writes one table, as CSV (header row, LF endings, floats
with 17 significant digits) or as a JSON object holding one array per
column.  Exit status: 0 success, 2 usage error, 3 domain error (for example
a level that does not exist), 4 validation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import geometry, spectrum
from .errors import PDMError
from .geometry import WellSpec
from .numeric import reflection_scan
from .ordering import couplings, energy_levels, ordering_from, verdict_for
from .report import table1_rows
from .validate import validate_ordering

EXIT_DOMAIN = 3
EXIT_VALIDATION = 4


class Table:
    """Named columns of equal length."""

    def __init__(self, columns: Sequence[str], rows: Iterable[Sequence] = ()):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        data = {name: [_json_cell(r[i]) for r in self.rows] for i, name in enumerate(self.columns)}
        return json.dumps(data, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def _csv_cell(v) -> str:
    if v is None:
        return "undefined"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _json_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v) if math.isfinite(v) else None
    return v


def _energy_scale(args) -> float:
    """Divisor applied to energies: ``mu^2`` with ``--mu2-units``, else 1."""
    return WellSpec(args.L).mu ** 2 if args.mu2_units else 1.0


def _emit(args, text: str, path: str | None = None) -> None:
    path = path if path is not None else args.output
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, newline="\n")


def cmd_classify(args) -> int:
    o = ordering_from(args.alpha, args.beta)
    c = couplings(args.alpha, args.beta)
    v = verdict_for(c)
    table = Table(
        ["alpha", "beta", "gamma", "heterojunction", "g1", "g2", "lambda",
         "shift_coefficient", "admissible", "bound_state_count"],
        [[o.alpha, o.beta, o.gamma, o.heterojunction, c.g1, c.g2, c.lambda_,
          c.shift_coefficient, v.admissible, v.bound_state_count]],
    )
    _emit(args, table.render(args.format))
    return 0


def cmd_spectrum(args) -> int:
    w = WellSpec(args.L)
    scale = _energy_scale(args)
    levels = energy_levels(couplings(args.alpha, args.beta), w.mu)
    table = Table(["n", "ref_energy", "target_energy"],
                  [[lv.n, lv.reference_energy / scale, lv.target_energy / scale] for lv in levels])
    _emit(args, table.render(args.format))
    return 0


def cmd_wavefunction(args) -> int:
    w = WellSpec(args.L)
    state = spectrum.make_bound_state(couplings(args.alpha, args.beta), w, args.n)
    tab = spectrum.tabulate(state, w, args.points, args.space, args.q_max)
    names = ["x", "psi"] if args.space == "x" else ["q", "phi"]
    _emit(args, Table(names, zip(tab.abscissae, tab.values)).render(args.format))
    return 0


def _side_path(path: str) -> str:
    p = Path(path)
    return str(p.with_name(p.stem + "_veff" + p.suffix))


def cmd_potential(args) -> int:
    w = WellSpec(args.L)
    scale = _energy_scale(args)
    o = ordering_from(args.alpha, args.beta)
    c = couplings(args.alpha, args.beta)
    x = np.linspace(-w.L, w.L, args.points + 2)[1:-1]
    q_max = 10.0 * w.L if args.q_max is None else args.q_max
    q = np.linspace(-q_max, q_max, args.points)
    v_tilde = np.asarray(geometry.v_tilde(w, o, x)) / scale
    v_eff = np.asarray(geometry.v_eff_from_mass(w, c, q)) / scale
    x_table = Table(["x", "v_tilde"], zip(x, v_tilde))
    q_table = Table(["q", "v_eff"], zip(q, v_eff))
    if args.format == "json":
        merged = Table(["x", "v_tilde", "q", "v_eff"], zip(x, v_tilde, q, v_eff))
        _emit(args, merged.to_json())
    elif args.output is None:
        _emit(args, x_table.to_csv() + "\n" + q_table.to_csv())
    else:
        _emit(args, x_table.to_csv())
        _emit(args, q_table.to_csv(), _side_path(args.output))
    return 0


def _wavenumbers(args) -> np.ndarray:
    mu = WellSpec(args.L).mu
    if args.k:
        ks = [float(t) for t in args.k.split(",") if t.strip()]
    else:
        ks = np.linspace(args.k_min, args.k_max, args.k_count)
    return np.asarray(ks) * mu


def cmd_scatter(args) -> int:
    w = WellSpec(args.L)
    results = reflection_scan(couplings(args.alpha, args.beta), w, _wavenumbers(args))
    table = Table(["k", "R2", "T2"], [[r.k, r.R2, r.T2] for r in results])
    _emit(args, table.render(args.format))
    return 0


def cmd_validate(args) -> int:
    report = validate_ordering(args.alpha, args.beta, args.L, args.grid_points)
    table = Table(["check", "value", "tolerance", "passed"],
                  [[c.name, c.value, c.tolerance, c.passed] for c in report.checks])
    _emit(args, table.render(args.format))
    status = "PASS" if report.passed else "FAIL"
    print(f"validate alpha={args.alpha:g} beta={args.beta:g} lambda={report.lambda_:.12g}: {status}",
          file=sys.stderr)
    return 0 if report.passed else EXIT_VALIDATION


def cmd_table1(args) -> int:
    rows = table1_rows(WellSpec(args.L).mu)
    scale = _energy_scale(args)
    columns = ["ordering", "alpha", "beta_printed", "beta", "gamma", "lambda_printed",
               "lambda", "E0_printed", "E0", "admissible_printed", "admissible",
               "bound_state_count", "status", "note"]
    table = Table(columns, [[
        r.label, r.alpha, r.beta_printed, r.beta, r.gamma, r.lambda_printed, r.lambda_,
        r.energy_printed, None if r.energy is None else r.energy / scale,
        r.admissible_printed, r.admissible, r.bound_state_count, r.status, r.note,
    ] for r in rows])
    _emit(args, table.render(args.format))
    return 0


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _odd_points(text: str) -> int:
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"must be odd and >= 3, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdmwell",
        description="Exact and numerical spectra of a singular position-dependent-mass well.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--L", type=_positive, default=1.0, help="well half-width (default 1)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    common.add_argument("--mu2-units", action="store_true",
                        help="report energies divided by mu^2 = 1/L^2")
    ordering = argparse.ArgumentParser(add_help=False)
    ordering.add_argument("--alpha", type=float, required=True)
    ordering.add_argument("--beta", type=float, required=True,
                          help="gamma is derived as -1 - alpha - beta")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common, ordering], help="couplings and admissibility")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("spectrum", parents=[common, ordering], help="closed-form bound levels")
    p.set_defaults(func=cmd_spectrum)
    p = sub.add_parser("wavefunction", parents=[common, ordering], help="tabulate a bound state")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--space", choices=("x", "q"), default="x")
    p.add_argument("--q-max", type=_positive, default=None)
    p.set_defaults(func=cmd_wavefunction)
    p = sub.add_parser("potential", parents=[common, ordering],
                       help="V~(x) and V_eff(q) profiles (q table goes to a _veff side file)")
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--q-max", type=_positive, default=None)
    p.set_defaults(func=cmd_potential)
    p = sub.add_parser("scatter", parents=[common, ordering], help="reflection/transmission scan")
    p.add_argument("--k", default=None, help="comma-separated wavenumbers in units of mu")
    p.add_argument("--k-min", type=_positive, default=0.1)
    p.add_argument("--k-max", type=_positive, default=5.0)
    p.add_argument("--k-count", type=int, default=50)
    p.set_defaults(func=cmd_scatter)
    p = sub.add_parser("validate", parents=[common, ordering],
                       help="analytic vs numeric cross-checks; exit 4 on failure")
    p.add_argument("--grid-points", type=_odd_points, default=4001)
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("table1", parents=[common], help="recompute the table of orderings")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "points", 1) < 1:
        parser.error("--points must be positive")
    try:
        return args.func(args)
    except PDMError as exc:
        print(f"pdmwell {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
