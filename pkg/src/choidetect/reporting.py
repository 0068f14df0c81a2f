"""Serialization of reports and scan results: JSON, CSV, gnuplot grids.

All numeric output uses 12 significant digits, enough to separate the
eigenvalue scales of interest (~1e-2) from tolerance noise (~1e-10) while
keeping files byte-stable across runs.
"""

import json
import os
import tempfile

from .detection import DetectionReport, ScanResult

SIG_DIGITS = 12


def fmt(v: float) -> str:
    return f"{v:.{SIG_DIGITS}g}"


def _fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def _report_cells(report: DetectionReport) -> list[str]:
    lam = "" if report.lambda_analytic is None else fmt(report.lambda_analytic)
    return [
        fmt(report.min_eig_mapped),
        lam,
        _fmt_bool(report.ppt),
        report.classification.value,
    ]


def report_to_json(report: DetectionReport) -> str:
    return json.dumps(report.to_json(), indent=2)


def report_to_csv(report: DetectionReport) -> str:
    header = "state,min_eig,lambda,ppt,class"
    row = ",".join([report.state_label] + _report_cells(report))
    return f"{header}\n{row}\n"


def scan_to_json(result: ScanResult) -> str:
    return json.dumps([p.report.to_json() for p in result.points], indent=2)


def scan_to_csv(result: ScanResult) -> str:
    if not result.points:
        raise ValueError("cannot emit CSV for an empty scan")
    header = ",".join(result.axis_names) + ",min_eig,lambda,ppt,class"
    lines = [header]
    for p in result.points:
        lines.append(",".join([fmt(c) for c in p.coords] + _report_cells(p.report)))
    return "\n".join(lines) + "\n"


def scan_to_gnuplot(result: ScanResult) -> str:
    """Whitespace grid for gnuplot.

    Two-axis scans emit "beta gamma min_eig" triples with a blank line
    between the gamma blocks of consecutive beta values; one-axis scans
    emit "b min_eig" pairs.
    """
    lines = []
    if len(result.axis_names) == 2:
        previous_first = None
        for p in result.points:
            if previous_first is not None and p.coords[0] != previous_first:
                lines.append("")
            previous_first = p.coords[0]
            lines.append(
                f"{fmt(p.coords[0])} {fmt(p.coords[1])} {fmt(p.report.min_eig_mapped)}"
            )
    else:
        for p in result.points:
            lines.append(f"{fmt(p.coords[0])} {fmt(p.report.min_eig_mapped)}")
    return "\n".join(lines) + ("\n" if lines else "")


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def reports_to_csv(reports) -> str:
    header = "state,min_eig,lambda,ppt,class"
    lines = [header]
    for r in reports:
        lines.append(",".join([r.state_label] + _report_cells(r)))
    return "\n".join(lines) + "\n"


def write_text_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see a
    partially written file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
