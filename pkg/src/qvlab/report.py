"""Delimited output and figure rendering for the experiment drivers.

Every experiment writes a CSV table and a JSON summary; alongside them the
report path renders a matplotlib figure to a PNG file.  Float cells use
repr(), the shortest round-trip form, so a fixed configuration produces
byte-identical files.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = [
    "format_cell",
    "write_csv",
    "write_json",
    "convergence_figure",
    "curve_figure",
    "step_function_figure",
    "partition_figure",
]


def format_cell(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(format_cell(c) for c in row) for row in rows)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _new_axes(xlabel: str, ylabel: str, title: str):
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def _finish(fig, out_path: str) -> str:
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def convergence_figure(series: dict[str, list[tuple[float, float]]], out_path: str,
                       title: str, references: dict[str, float] | None = None,
                       xlabel: str = "n") -> str:
    """Values against n (log x) for several labelled series, with reference lines."""
    fig, ax = _new_axes(xlabel, "value", title)
    for label, pts in series.items():
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.plot(xs, ys, marker="o", label=label)
    if references:
        for label, y in references.items():
            ax.axhline(y, linestyle="--", linewidth=1.0, alpha=0.7)
            ax.annotate(label, (ax.get_xlim()[0], y), fontsize=8,
                        textcoords="offset points", xytext=(4, 3))
    ax.set_xscale("log")
    ax.legend(fontsize=8)
    return _finish(fig, out_path)


def curve_figure(xs: Sequence[float], ys: Sequence[float], out_path: str,
                 title: str, xlabel: str, ylabel: str,
                 markers: dict[str, tuple[float, float]] | None = None) -> str:
    fig, ax = _new_axes(xlabel, ylabel, title)
    ax.plot(xs, ys, lw=1.5)
    if markers:
        for label, (x, y) in markers.items():
            ax.plot([x], [y], marker="x", ms=8)
            ax.annotate(label, (x, y), fontsize=8, textcoords="offset points",
                        xytext=(5, 5))
    return _finish(fig, out_path)


def step_function_figure(jumps: Sequence[tuple[float, float]], initial: float,
                         domain_end: float, out_path: str, title: str) -> str:
    """Right-continuous step function from (time, increment) pairs."""
    fig, ax = _new_axes("t", "value", title)
    ts, vs = [0.0], [initial]
    level = initial
    for t, inc in jumps:
        ts.extend([t, t])
        vs.extend([level, level + inc])
        level += inc
    ts.append(domain_end)
    vs.append(level)
    ax.plot(ts, vs, lw=1.2)
    return _finish(fig, out_path)


def partition_figure(sample: Sequence[tuple[float, float]],
                     breakpoints: Sequence[float], out_path: str, title: str) -> str:
    """Path samples with the partition breakpoints marked."""
    fig, ax = _new_axes("t", "x(t)", title)
    ax.plot([p[0] for p in sample], [p[1] for p in sample], lw=1.0)
    for b in breakpoints:
        ax.axvline(b, color="tab:red", alpha=0.25, linewidth=0.8)
    return _finish(fig, out_path)
