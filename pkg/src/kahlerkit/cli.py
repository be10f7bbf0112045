"""Command-line interface.

    kahlerkit verify <suite|all> [--seed N] [--format text|json|csv] [--out F]
                     [--tol id=value ...] [--samples name=count ...]
    kahlerkit lightcone <chart> <r_min> <r_max> <samples> [--out F]
    kahlerkit schmidt <matrix.json> [--format json|text] [--out F]
    kahlerkit spinlift <matrix.json> [--format json|text] [--out F]
    kahlerkit table <name> [--format text|json|csv] [--out F]

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from kahlerkit import blades, charts, covariance, cover_so33, forms, matrices
from kahlerkit import report, serialize

USAGE_ERROR = 2
CHECK_FAILURE = 1


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _write(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _parse_overrides(pairs, caster, what):
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise CliError(f"bad {what} override {pair!r}, expected name=value")
        key, value = pair.split("=", 1)
        try:
            out[key] = caster(value)
        except ValueError:
            raise CliError(f"bad {what} value in {pair!r}") from None
    return out


# ---------------------------------------------------------------------------
# verify

def _format_verify(payload, fmt: str) -> str:
    if fmt == "json":
        return serialize.dumps(payload)
    lines = []
    if fmt == "csv":
        lines.append("suite,check,anchor,status,residual,tolerance,detail")
        for suite in payload["suites"]:
            for check in suite["checks"]:
                anchor = check["anchor"].replace(",", ";")
                detail = check["detail"].replace(",", ";")
                lines.append(
                    f"{suite['suite']},{check['id']},{anchor},{check['status']},"
                    f"{check['residual']:.6e},{check['tolerance']:.6e},{detail}"
                )
        return "\n".join(lines) + "\n"
    for suite in payload["suites"]:
        lines.append(f"suite {suite['suite']} (seed {suite['seed']})")
        for check in suite["checks"]:
            status = "PASS" if check["status"] == "pass" else "FAIL"
            line = (
                f"  {status} {check['id']}: residual {check['residual']:.3e}"
                f" tol {check['tolerance']:.3e}"
            )
            if check["detail"]:
                line += f"  [{check['detail']}]"
            lines.append(line)
        lines.append(f"  => {'all passed' if suite['passed'] else 'FAILURES'}")
    lines.append("OVERALL " + ("PASS" if payload["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    suites = list(report.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in report.SUITES:
        raise CliError(
            f"unknown suite {args.suite!r}; choose from {', '.join(report.SUITES)} or all"
        )
    cfg = report.RunConfig(
        seed=args.seed,
        tolerances=_parse_overrides(args.tol, float, "tolerance"),
        counts=_parse_overrides(args.samples, int, "sample-count"),
    )
    results = [report.run_suite(name, cfg) for name in suites]
    payload = report.suite_result_payload(results)
    _write(_format_verify(payload, args.format), args.out)
    return 0 if payload["passed"] else CHECK_FAILURE


# ---------------------------------------------------------------------------
# lightcone

def _cmd_lightcone(args) -> int:
    registry = charts.chart_registry()
    if args.chart not in registry:
        raise CliError(
            f"unknown chart {args.chart!r}; choose from {', '.join(sorted(registry))}"
        )
    chart = registry[args.chart]
    if args.samples < 1:
        raise CliError("need at least one sample")
    if args.r_min <= 0 or args.r_max <= args.r_min:
        raise CliError("need 0 < r_min < r_max")
    for blocked in chart.excluded_radii:
        if args.r_min < blocked < args.r_max:
            raise CliError(
                f"range ({args.r_min:g}, {args.r_max:g}) crosses the excluded "
                f"radius {blocked:g} of chart {args.chart}"
            )
    radii = charts.log_spaced(args.r_min, args.r_max, args.samples)
    rows = ["chart,r,k_plus,k_minus"]
    for r in radii:
        r = float(r)
        point = (0.0, r, math.pi / 2, 0.0)
        if not chart.domain(point):
            raise CliError(f"radius {r:g} outside domain of chart {args.chart}")
        try:
            slopes = charts.radial_null_slopes(chart, r)
        except charts.ChartDomainError as exc:
            raise CliError(str(exc)) from None
        rows.append(f"{args.chart},{r!r},{slopes.k_plus!r},{slopes.k_minus!r}")
    _write("\n".join(rows) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# schmidt

def _load_matrix(path) -> np.ndarray:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
        return serialize.matrix_from_json(obj)
    except (OSError, json.JSONDecodeError, serialize.SchemaError) as exc:
        raise CliError(f"cannot read matrix from {path}: {exc}") from None


def _cmd_schmidt(args) -> int:
    M = _load_matrix(args.matrix_file)
    rep = matrices.gamma_rep("weyl")
    if M.shape == (16, 16):
        Gm = M
    elif M.shape == (4, 4):
        if np.max(np.abs(M.imag)) > 1e-12:
            raise CliError("4x4 input must be real to act as a coordinate map")
        Gm = covariance.induced_matrix_action(M.real, rep)
    else:
        raise CliError(f"need a 4x4 or 16x16 matrix, got {M.shape}")
    try:
        terms, residual = covariance.operator_schmidt(Gm, rep)
    except (RuntimeError, np.linalg.LinAlgError) as exc:
        raise CliError(f"decomposition failed: {exc}") from None
    payload = serialize.schmidt_to_json(terms, residual)
    if args.format == "text":
        lines = [f"terms: {len(terms)}  reconstruction residual {residual:.3e}"]
        for i, (_, _, w) in enumerate(terms):
            lines.append(f"  weight[{i}] = {w:.12g}")
        _write("\n".join(lines) + "\n", args.out)
    else:
        _write(serialize.dumps(payload), args.out)
    return 0


# ---------------------------------------------------------------------------
# spinlift

def _cmd_spinlift(args) -> int:
    M = _load_matrix(args.matrix_file)
    if M.shape != (4, 4):
        raise CliError(f"need a 4x4 matrix, got {M.shape}")
    if np.max(np.abs(M.imag)) > 1e-12:
        raise CliError("input must be real")
    A = M.real
    defect = covariance.minkowski_defect(A)
    if defect > 1e-9:
        raise CliError(f"input is not an isometry (defect {defect:.3e})")
    try:
        h, parity = blades.spin_lift(A, blades.MINKOWSKI)
    except blades.LiftError as exc:
        raise CliError(str(exc)) from None
    residual = blades.versor_residual(h, A, blades.MINKOWSKI)
    payload = {
        "element": serialize.multivector_to_json(h),
        "parity": parity,
        "conjugation_residual": residual,
    }
    if args.format == "text":
        _write(f"parity {parity}, residual {residual:.3e}\n{h!r}\n", args.out)
    else:
        _write(serialize.dumps(payload), args.out)
    return 0


# ---------------------------------------------------------------------------
# tables

def _table_plane_coefficients():
    rep = matrices.gamma_rep("weyl")
    rows = []
    phi = 0.7
    rot = np.eye(4)
    rot[1, 1] = rot[2, 2] = math.cos(phi)
    rot[1, 2] = -math.sin(phi)
    rot[2, 1] = math.sin(phi)
    v = 0.9
    boost = np.eye(4)
    boost[0, 0] = boost[1, 1] = math.cosh(v)
    boost[0, 1] = boost[1, 0] = math.sinh(v)
    shear = np.eye(4)
    shear[1, 2] = 1.0
    for name, G, axes in (
        ("rotation(0.7)", rot, (1, 2)),
        ("boost(0.9)", boost, (0, 1)),
        ("unit-shear", shear, (1, 2)),
    ):
        scalar, bivec = covariance.plane_product_coefficients(G, rep, axes=axes)
        rows.append(
            {
                "case": name,
                "axes": f"{axes[0]}-{axes[1]}",
                "scalar_leak": float(scalar.real),
                "plane_coeff": float(bivec.real),
            }
        )
    return rows, ("case", "axes", "scalar_leak", "plane_coeff")


def _table_double_star():
    rows = []
    for name, g in (("euclidean", forms.euclidean_metric()),
                    ("lorentzian", forms.minkowski_metric())):
        signs = forms.double_star_signs(g)
        for grade, sign in enumerate(signs):
            rows.append({"metric": name, "grade": grade, "sign": int(sign.real)})
    return rows, ("metric", "grade", "sign")


def _table_eta_gram():
    G, scale = cover_so33.eta_gram()
    rows = []
    for i in range(6):
        for j in range(6):
            if G[i, j] != 0:
                rows.append({"row": i + 1, "col": j + 1, "value": float(G[i, j])})
    rows.append({"row": "scale", "col": "", "value": float(scale)})
    return rows, ("row", "col", "value")


def _table_dilation():
    rows = [
        {"grade": k, "factor": f}
        for k, f in enumerate(cover_so33.dilation_grade_check(2.0))
    ]
    return rows, ("grade", "factor")


_TABLES = {
    "plane-coefficients": _table_plane_coefficients,
    "double-star": _table_double_star,
    "eta-gram": _table_eta_gram,
    "dilation": _table_dilation,
}


def _cmd_table(args) -> int:
    if args.name not in _TABLES:
        raise CliError(
            f"unknown table {args.name!r}; choose from {', '.join(sorted(_TABLES))}"
        )
    rows, columns = _TABLES[args.name]()
    if args.format == "json":
        _write(serialize.dumps({"table": args.name, "rows": rows}), args.out)
    elif args.format == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(str(row[c]) for c in columns))
        _write("\n".join(lines) + "\n", args.out)
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
        lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
        for row in rows:
            lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in columns))
        _write("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kahlerkit",
        description="Verification suites for blade algebra, exterior calculus, "
        "coordinate covariance, and black-hole charts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help="suite name or 'all'")
    p_verify.add_argument("--seed", type=int, default=report.DEFAULT_SEED)
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--tol", action="append", metavar="ID=VALUE")
    p_verify.add_argument("--samples", action="append", metavar="NAME=COUNT")
    p_verify.set_defaults(fn=_cmd_verify)

    p_light = sub.add_parser("lightcone", help="radial light-cone slope table")
    p_light.add_argument("chart")
    p_light.add_argument("r_min", type=float)
    p_light.add_argument("r_max", type=float)
    p_light.add_argument("samples", type=int)
    p_light.add_argument("--out", default=None)
    p_light.set_defaults(fn=_cmd_lightcone)

    p_schmidt = sub.add_parser("schmidt", help="left-right factorization of a 16D map")
    p_schmidt.add_argument("matrix_file")
    p_schmidt.add_argument("--format", choices=("json", "text"), default="json")
    p_schmidt.add_argument("--out", default=None)
    p_schmidt.set_defaults(fn=_cmd_schmidt)

    p_lift = sub.add_parser("spinlift", help="conjugation element of an isometry")
    p_lift.add_argument("matrix_file")
    p_lift.add_argument("--format", choices=("json", "text"), default="json")
    p_lift.add_argument("--out", default=None)
    p_lift.set_defaults(fn=_cmd_spinlift)

    p_table = sub.add_parser("table", help="emit a worked-example data table")
    p_table.add_argument("name")
    p_table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(fn=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
