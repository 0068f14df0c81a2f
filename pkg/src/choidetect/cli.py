"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 when verify-map
finds a positivity counterexample or horodecki finds an unexpected
detection.  All randomness flows from --seed, so identical argv produces
byte-identical output.
"""

import argparse
import json
import math
import sys

from .detection import (
    RHO_FAMILY,
    SIGMA_FAMILY,
    VARRHO_FAMILY,
    detect,
    scan_grid,
    verify_map_positivity,
)
from .linalg import Tolerance, min_eigenvalue
from .maps import MapParams
from .reporting import (
    fmt,
    report_to_csv,
    report_to_json,
    reports_to_csv,
    reports_to_json,
    scan_to_csv,
    scan_to_gnuplot,
    scan_to_json,
    write_text_atomic,
)
from .states import (
    build_rho_beta_gamma,
    build_sigma_b,
    build_varrho_b,
    local_unitary_orbit,
    pauli_local_unitaries,
)

STATE_FAMILIES = (RHO_FAMILY, SIGMA_FAMILY, VARRHO_FAMILY)


def parse_range(text: str) -> list[float]:
    """Parse LO:HI:STEP into inclusive grid values; LO > HI gives an empty grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must be LO:HI:STEP, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"malformed range {text!r}") from exc
    if not step > 0:
        raise ValueError(f"range step must be > 0, got {step}")
    if lo > hi:
        return []
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choidetect",
        description="Positive-map entanglement detection on 4x4-mapped bipartite states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats: tuple) -> None:
        p.add_argument("--tol", type=float, default=None, help="override psd_tol (default 1e-10)")
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", default=None, help="write output to this path (atomic)")

    p = sub.add_parser("verify-map", help="randomized positivity verification of one map")
    p.add_argument("--map", required=True, help="map parameters w,x,y,z")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p, ("json",))

    p = sub.add_parser("detect", help="classify one state under one map")
    p.add_argument("--family", required=True, choices=STATE_FAMILIES)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--map", required=True)
    add_common(p, ("json", "csv"))

    p = sub.add_parser("scan", help="detection reports over a parameter grid")
    p.add_argument("--family", required=True, choices=(RHO_FAMILY, SIGMA_FAMILY))
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--beta-range", default=None, help="LO:HI:STEP")
    p.add_argument("--gamma-range", default=None, help="LO:HI:STEP")
    p.add_argument("--b-range", default=None, help="LO:HI:STEP")
    p.add_argument("--map", required=True)
    p.add_argument("--plot", default=None, help="also render the scan to this figure file")
    add_common(p, ("json", "csv", "gnuplot"))

    p = sub.add_parser("ppt-check", help="partial-transpose positivity of one state")
    p.add_argument("--family", required=True, choices=STATE_FAMILIES)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    add_common(p, ("json",))

    p = sub.add_parser(
        "horodecki", help="non-detection sweep for the 2x4 bound entangled family"
    )
    p.add_argument("--family", default=SIGMA_FAMILY, choices=(SIGMA_FAMILY, VARRHO_FAMILY))
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--orbit", action="store_true", help="sweep all 64 local-unitary variants")
    add_common(p, ("json", "csv"))

    return parser


def _tolerance(args) -> Tolerance:
    if args.tol is None:
        return Tolerance()
    if not args.tol > 0:
        raise ValueError(f"--tol must be > 0, got {args.tol}")
    return Tolerance(psd_tol=args.tol)


def _emit(text: str, out_path) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out_path, text)


def _require(args, names: tuple, family: str) -> None:
    forbidden = {"beta", "gamma", "b"} - set(names)
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"family {family} requires --{name}")
    for name in forbidden:
        if getattr(args, name, None) is not None:
            raise ValueError(f"--{name} does not apply to family {family}")


def _build_state(args):
    if args.family == RHO_FAMILY:
        _require(args, ("beta", "gamma"), args.family)
        return build_rho_beta_gamma(args.beta, args.gamma)
    _require(args, ("b",), args.family)
    if args.family == SIGMA_FAMILY:
        return build_sigma_b(args.b)
    return build_varrho_b(args.b)


def _cmd_verify_map(args) -> int:
    params = MapParams.from_string(args.map)
    if args.samples < 1:
        raise ValueError(f"--samples must be >= 1, got {args.samples}")
    tol = _tolerance(args)
    verdict = verify_map_positivity(params, args.samples, args.seed, tol)
    _emit(json.dumps(verdict.to_json(), indent=2), args.out)
    return 0 if verdict.counterexample is None else 2


def _cmd_detect(args) -> int:
    params = MapParams.from_string(args.map)
    tol = _tolerance(args)
    state = _build_state(args)
    report = detect(state, params, tol)
    text = report_to_json(report) if args.format == "json" else report_to_csv(report)
    _emit(text, args.out)
    return 0


def _scan_axis(args, name: str) -> list[float] | None:
    single = getattr(args, name)
    ranged = getattr(args, f"{name}_range")
    if single is not None and ranged is not None:
        raise ValueError(f"give either --{name} or --{name}-range, not both")
    if ranged is not None:
        return parse_range(ranged)
    if single is not None:
        return [single]
    return None


def _cmd_scan(args) -> int:
    params = MapParams.from_string(args.map)
    tol = _tolerance(args)
    betas = _scan_axis(args, "beta")
    gammas = _scan_axis(args, "gamma")
    bs = _scan_axis(args, "b")
    if args.family == RHO_FAMILY:
        if betas is None or gammas is None:
            raise ValueError("rho-beta-gamma scans need --beta/--beta-range and --gamma/--gamma-range")
        if bs is not None:
            raise ValueError("--b does not apply to rho-beta-gamma scans")
        for beta in betas:
            if not 0 <= beta <= 10:
                raise ValueError(f"beta grid value {beta:g} outside [0, 10]")
        for gamma in gammas:
            if gamma < 0:
                raise ValueError(f"gamma grid value {gamma:g} below 0")
        result = scan_grid(args.family, params, betas=betas, gammas=gammas, tol=tol)
    else:
        if bs is None:
            raise ValueError("sigma-b scans need --b or --b-range")
        if betas is not None or gammas is not None:
            raise ValueError("--beta/--gamma do not apply to sigma-b scans")
        for b in bs:
            if not 0 < b < 1:
                raise ValueError(f"b grid value {b:g} outside (0, 1)")
        result = scan_grid(args.family, params, bs=bs, tol=tol)
    if args.format == "json":
        text = scan_to_json(result)
    elif args.format == "csv":
        text = scan_to_csv(result)
    else:
        text = scan_to_gnuplot(result)
    _emit(text, args.out)
    if args.plot is not None:
        from . import plotting

        plotting.render_scan(result, args.plot)
    return 0


def _cmd_ppt_check(args) -> int:
    tol = _tolerance(args)
    state = _build_state(args)
    low = min_eigenvalue(state.partial_transpose("B"), tol.herm_tol)
    obj = {
        "state": state.label,
        "ppt": low >= -tol.psd_tol,
        "min_eig_pt": float(fmt(low)),
    }
    _emit(json.dumps(obj, indent=2), args.out)
    return 0


def _cmd_horodecki(args) -> int:
    params = MapParams.from_string(args.map)
    tol = _tolerance(args)
    state = build_sigma_b(args.b) if args.family == SIGMA_FAMILY else build_varrho_b(args.b)
    if args.orbit:
        members = local_unitary_orbit(state, pauli_local_unitaries())
    else:
        members = [state]
    reports = [detect(member, params, tol) for member in members]
    if args.orbit:
        text = reports_to_json(reports) if args.format == "json" else reports_to_csv(reports)
    else:
        text = report_to_json(reports[0]) if args.format == "json" else report_to_csv(reports[0])
    _emit(text, args.out)
    unexpected = any(
        (not r.ppt) or r.min_eig_mapped < -tol.psd_tol for r in reports
    )
    return 2 if unexpected else 0


_HANDLERS = {
    "verify-map": _cmd_verify_map,
    "detect": _cmd_detect,
    "scan": _cmd_scan,
    "ppt-check": _cmd_ppt_check,
    "horodecki": _cmd_horodecki,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; fold the
        # former into the documented usage-error code.
        return 0 if exc.code in (0, None) else 1
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
