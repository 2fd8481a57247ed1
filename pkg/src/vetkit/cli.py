"""Command-line driver: point evaluation, surface scans, coefficient
maximization, bound certification, and lattice-oracle comparisons.

Exit codes: 0 = computed (verdicts are data, not errors), 1 = bound
certification failed, 2 = usage error.  Output is byte-identical across
runs for identical flags; numbers are serialized with shortest
round-trip precision, CSV always uses '.' as the decimal separator, and
the CSV and JSON paths carry exactly the same values.  The environment
variable VET_THREADS caps scan parallelism (0 = auto).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import collective_variance as cv
from . import gaussian_two_mode as g2m
from . import greens_cylinder as gc
from . import lattice_oracle as lo
from . import separability_scan as ss
from .errors import CertificateError, VetkitError

_SCAN_HEADER = ["dx", "M", "L", "F", "f2", "f4", "negativity"]


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_safe(obj):
    """Replace non-finite floats so the emitted JSON stays standard."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _rows_to_json(header: list[str], rows: list[list]) -> str:
    objs = [dict(zip(header, row)) for row in rows]
    return json.dumps(objs, indent=2) + "\n"


def _mapping_out(pairs: list[tuple[str, object]], fmt: str, out: str | None) -> None:
    if fmt == "csv":
        header = [k for k, _ in pairs]
        _emit(_rows_to_csv(header, [[v for _, v in pairs]]), out)
    else:
        _emit(json.dumps(dict(pairs), indent=2) + "\n", out)


def _threads_from_env(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get("VET_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
        if n < 0:
            raise ValueError
    except ValueError:
        parser.error(f"VET_THREADS must be a non-negative integer, got {raw!r}")
    if n == 0:
        return min(8, os.cpu_count() or 1)
    return n


def _parse_float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vetkit",
        description="Separability of effective two-mode observables of a "
                    "thermal scalar field on a ring.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved; every computation here is deterministic")

    p_eval = sub.add_parser("eval", help="separability report at one point")
    p_eval.add_argument("--dx", type=float, required=True)
    p_eval.add_argument("--bigm", type=float, required=True)
    p_eval.add_argument("--boxl", type=float, required=True)
    p_eval.add_argument("--dim", type=int, default=1)
    add_io(p_eval)

    p_scan = sub.add_parser("scan", help="dense (dx, M, L) surface table")
    p_scan.add_argument("--dx-min", type=float, default=0.01)
    p_scan.add_argument("--dx-max", type=float, default=0.99)
    p_scan.add_argument("--dx-count", type=int, default=99)
    p_scan.add_argument("--m-min", type=float, default=0.0)
    p_scan.add_argument("--m-max", type=float, default=3.0)
    p_scan.add_argument("--m-count", type=int, default=60)
    p_scan.add_argument("--boxl", type=_parse_float_list, default=[0.01])
    add_io(p_scan)

    p_max = sub.add_parser("maximize", help="locate a coefficient maximum")
    p_max.add_argument("--target", choices=("f2", "f4"), required=True)
    p_max.add_argument("--refinements", type=int, default=6)
    add_io(p_max)

    p_cert = sub.add_parser("certify", help="verify the global bound")
    p_cert.add_argument("--boxl", type=_parse_float_list, required=True)
    add_io(p_cert)

    p_orc = sub.add_parser("oracle", help="lattice ring cross-check")
    p_orc.add_argument("--sites", type=int, required=True)
    p_orc.add_argument("--mass", type=float, required=True)
    p_orc.add_argument("--beta", type=float, default=None)
    p_orc.add_argument("--zero-temperature", action="store_true")
    p_orc.add_argument("--dx", type=_parse_float_list, required=True)
    p_orc.add_argument("--box-sites", type=int, default=8)
    add_io(p_orc)

    return parser


def _cmd_eval(args, parser) -> int:
    if not (0.0 < args.dx < 1.0):
        parser.error("--dx must lie strictly inside (0, 1)")
    if args.bigm < 0.0:
        parser.error("--bigm must be >= 0")
    if args.boxl < 0.0:
        parser.error("--boxl must be >= 0")
    if args.dim < 1:
        parser.error("--dim must be >= 1")

    comp = gc.components_closed_form(args.dx, args.bigm)
    f_closed = g2m.simon_f_closed(comp, args.boxl, args.dim)
    if args.dim == 1:
        f_exp = ss.f_expansion(args.dx, args.bigm, args.boxl)
    else:
        f_exp = f_closed
    if args.boxl > 0.0:
        spec = cv.CollectiveSpec(args.boxl, 0.0, args.dx, comp,
                                 dimension=args.dim)
        v = cv.build_v_tilde(spec)
    else:
        v = g2m.TwoModeCovariance(
            [[comp.a, 0.0, comp.c, 0.0],
             [0.0, 0.0, 0.0, 0.0],
             [comp.c, 0.0, comp.a_prime, 0.0],
             [0.0, 0.0, 0.0, 0.0]],
            box_size=0.0, dimension=args.dim)
    report = g2m.separability_report(v, comp)
    pairs = [
        ("dx", args.dx), ("big_m", args.bigm), ("box_size", args.boxl),
        ("dimension", args.dim),
        ("a", comp.a), ("b", comp.b), ("c", comp.c), ("d", comp.d),
        ("f_matrix", report.f_value),
        ("f_closed", f_closed),
        ("f_expansion", f_exp),
        ("sigma_tilde", report.sigma_tilde),
        ("det_v", report.det_v),
        ("nu_minus", report.nu_minus),
        ("nu_plus", report.nu_plus),
        ("pt_spectrum_real", report.pt_spectrum_real),
        ("negativity_symmetric", report.negativity_symmetric),
        ("negativity_standard", report.negativity_standard),
        ("physicality_min_eigenvalue", report.physicality_min_eigenvalue),
        ("verdict", report.verdict),
    ]
    _mapping_out(pairs, args.format, args.out)
    return 0


def _cmd_scan(args, parser) -> int:
    grid = ss.ScanGrid(
        delta_x_range=(args.dx_min, args.dx_max), delta_x_count=args.dx_count,
        m_range=(args.m_min, args.m_max), m_count=args.m_count,
        l_values=tuple(args.boxl))
    threads = _threads_from_env(parser)
    rows = ss.scan_surface(grid, threads=threads)
    table = [[r.dx, r.m, r.l, r.f, r.f2, r.f4, r.negativity] for r in rows]
    if args.format == "csv":
        _emit(_rows_to_csv(_SCAN_HEADER, table), args.out)
    else:
        _emit(_rows_to_json(_SCAN_HEADER, table), args.out)
    return 0


def _cmd_maximize(args, parser) -> int:
    if args.refinements < 0:
        parser.error("--refinements must be >= 0")
    report = ss.maximize(args.target, refinements=args.refinements)
    pairs = [
        ("target", report.target),
        ("delta_x", report.location[0]),
        ("big_m", report.location[1]),
        ("value", report.value),
        ("tolerance", report.tolerance),
        ("plateaued", report.plateaued),
        ("refinement_history",
         [[step, val] for step, val in report.refinement_history]),
    ]
    if args.format == "csv":
        header = ["round", "grid_step", "best_value"]
        table = [[i, step, val]
                 for i, (step, val) in enumerate(report.refinement_history)]
        _emit(_rows_to_csv(header, table), args.out)
    else:
        _emit(json.dumps(dict(pairs), indent=2) + "\n", args.out)
    return 0


def _certify_payload(cert: ss.BoundCertificate) -> list[tuple[str, object]]:
    return [
        ("max_f2", cert.max_f2),
        ("max_f4", cert.max_f4),
        ("worst_margin", cert.worst_margin),
        ("rows", [
            {"box_size": r.box_size, "bound": r.bound,
             "reference_bound": r.reference_bound,
             "worst_margin": r.worst_margin,
             "worst_point": list(r.worst_point)}
            for r in cert.rows
        ]),
    ]


def _cmd_certify(args, parser) -> int:
    try:
        cert = ss.bound_certificate(args.boxl)
    except CertificateError as err:
        sys.stderr.write(str(err) + "\n")
        for dx, m, l, fv, bound in err.violations:
            sys.stderr.write(
                f"violation: dx={_fmt(dx)} M={_fmt(m)} L={_fmt(l)} "
                f"F={_fmt(fv)} bound={_fmt(bound)}\n")
        return 1
    pairs = _certify_payload(cert) + [("certified", True)]
    if args.format == "csv":
        header = ["box_size", "bound", "reference_bound", "worst_margin"]
        table = [[r.box_size, r.bound, r.reference_bound, r.worst_margin]
                 for r in cert.rows]
        _emit(_rows_to_csv(header, table), args.out)
    else:
        _emit(json.dumps(dict(pairs), indent=2) + "\n", args.out)
    return 0


def _cmd_oracle(args, parser) -> int:
    if args.beta is None and not args.zero_temperature:
        parser.error("either --beta or --zero-temperature is required")
    spec = lo.LatticeSpec(sites=args.sites, mass=args.mass,
                          inverse_temperature=args.beta,
                          zero_temperature=args.zero_temperature)
    report = lo.compare_continuum(spec, args.dx)
    payload = report.to_dict()

    cov = lo.thermal_covariance(spec)
    n = spec.sites
    result = lo.collective_lattice_operators(
        cov, args.box_sites, (n // 4, 3 * n // 4))
    phys = g2m.physicality_check(result.covariance)
    payload["collective"] = {
        "box_sites": args.box_sites,
        "box_size": result.box_size,
        "commutator_coefficient": result.commutator_coefficient,
        "uncertainty_min_eigenvalue": phys.min_eigenvalue,
        "physical": phys.physical,
    }
    if args.format == "csv":
        header = ["dx1", "dx2", "lattice_diff", "continuum_vacuum_limit",
                  "continuum_thermal_shift", "rel_disc_vacuum",
                  "rel_disc_vacuum_refined", "convergence_ratio"]
        table = [[c.delta_x_pair[0], c.delta_x_pair[1], c.lattice_diff,
                  c.continuum_diff_vacuum_limit,
                  c.continuum_diff_thermal_shift,
                  c.rel_discrepancy_vacuum,
                  c.rel_discrepancy_vacuum_refined,
                  c.convergence_ratio]
                 for c in report.phi_comparisons]
        _emit(_rows_to_csv(header, table), args.out)
    else:
        _emit(json.dumps(_json_safe(payload), indent=2) + "\n", args.out)
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "scan": _cmd_scan,
    "maximize": _cmd_maximize,
    "certify": _cmd_certify,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args, parser)
    except VetkitError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except ValueError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
