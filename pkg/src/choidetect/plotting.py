"""Render scan results to figure files.

Uses the Agg backend so figures save headlessly; imported lazily by the
CLI so library use without --plot never touches matplotlib.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .detection import ScanResult


def render_scan(result: ScanResult, path: str, dpi: int = 150) -> None:
    """Save a figure for a scan: heat map for a 2-D grid, line otherwise."""
    if not result.points:
        raise ValueError("cannot plot an empty scan")
    if len(result.axis_names) == 2:
        first = sorted({p.coords[0] for p in result.points})
        second = sorted({p.coords[1] for p in result.points})
        if len(first) > 1 and len(second) > 1:
            _render_grid(result, first, second, path, dpi)
            return
        # Degenerate grid: plot along whichever axis actually varies.
        axis = 0 if len(first) > 1 else 1
        _render_line(result, axis, path, dpi)
        return
    _render_line(result, 0, path, dpi)


def _render_grid(result: ScanResult, first, second, path: str, dpi: int) -> None:
    index_first = {v: k for k, v in enumerate(first)}
    index_second = {v: k for k, v in enumerate(second)}
    grid = np.full((len(second), len(first)), np.nan)
    for p in result.points:
        grid[index_second[p.coords[1]], index_first[p.coords[0]]] = p.report.min_eig_mapped
    fig, ax = plt.subplots(figsize=(7, 5))
    largest = np.nanmax(np.abs(grid))
    mesh = ax.pcolormesh(
        first, second, grid, shading="nearest", cmap="RdBu", vmin=-largest, vmax=largest
    )
    fig.colorbar(mesh, ax=ax, label="min eigenvalue of mapped state")
    ax.set_xlabel(result.axis_names[0])
    ax.set_ylabel(result.axis_names[1])
    ax.set_title(f"{result.family} under {result.map_params}")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def _render_line(result: ScanResult, axis: int, path: str, dpi: int) -> None:
    xs = [p.coords[axis] for p in result.points]
    ys = [p.report.min_eig_mapped for p in result.points]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.plot(xs, ys, marker="o", ms=3, lw=1.2)
    detected = [(x, y) for p, x, y in zip(result.points, xs, ys) if y < 0]
    if detected:
        ax.plot(*zip(*detected), linestyle="none", marker="o", ms=4, color="crimson")
    ax.set_xlabel(result.axis_names[axis])
    ax.set_ylabel("min eigenvalue of mapped state")
    ax.set_title(f"{result.family} under {result.map_params}")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
