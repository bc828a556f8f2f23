"""Render fidelity-sweep CSVs as figures.

Reads only the CSV artifacts written by the qdchain CLI (never imports the
simulation code) and draws one of four figures:

  t_vs_q    average fidelity vs lambda*t, one line per real deformation
  t_vs_d    same layout for root-of-unity sweeps
  max_vs_q  max fidelity (top) and optimal lambda*t (bottom) vs real q
  max_vs_d  the same pair vs the root order d, with the bosonic (q = 1)
            row, when present, drawn as a horizontal reference

Rendering is a pure function of the CSV contents: styles are pinned, SVG
ids are salted with a constant, and no dates are embedded, so re-running
produces byte-identical SVG and PNG files.
"""

from __future__ import annotations

import argparse
import csv
import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_IDS = ("t_vs_q", "max_vs_q", "t_vs_d", "max_vs_d")

_RC = {
    "figure.figsize": (6.4, 4.8),
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "svg.hashsalt": "chainfigures",
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.4,
}


class SchemaError(ValueError):
    """The CSV does not look like a sweep artifact."""


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    inputs: tuple[Path, ...]
    out: Path

    def __post_init__(self) -> None:
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}, expected one of {FIGURE_IDS}")
        if not self.inputs:
            raise ValueError("need at least one input CSV")


@dataclass(frozen=True)
class Deformation:
    """Parsed deformation encoding: kind 'q' with a real value or 'root' with order d."""

    kind: str
    value: float
    label: str

    @property
    def pretty(self) -> str:
        if self.kind == "q":
            return f"q = {self.value:g}"
        return f"d = {int(self.value)}"


def parse_deformation(text: str) -> Deformation:
    if text.startswith("q="):
        return Deformation(kind="q", value=float(text[2:]), label=text)
    if text.startswith("root:"):
        parts = text.split(":")
        if len(parts) == 3 and parts[2] in ("+", "-"):
            return Deformation(kind="root", value=float(int(parts[1])), label=text)
    raise SchemaError(f"cannot parse deformation encoding {text!r}")


def load_rows(paths: tuple[Path, ...], required: tuple[str, ...]) -> list[dict]:
    """Concatenate data rows from the inputs, checking the schema of each file."""
    rows: list[dict] = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            reader = csv.DictReader(line for line in fh if not line.startswith("#"))
            file_rows = list(reader)
        header = tuple(reader.fieldnames or ())
        missing = [c for c in required if c not in header]
        if missing:
            raise SchemaError(f"{path}: missing columns {missing}, found {list(header)}")
        for row in file_rows:
            row["deformation"] = parse_deformation(row["deformation"])
            rows.append(row)
    if not rows:
        raise SchemaError(f"no data rows in {', '.join(str(p) for p in paths)}")
    return rows


def _series_order(rows: list[dict]) -> list[Deformation]:
    seen: list[Deformation] = []
    for row in rows:
        if row["deformation"] not in seen:
            seen.append(row["deformation"])
    return seen


def _time_figure(rows: list[dict]) -> plt.Figure:
    fig, ax = plt.subplots()
    for deformation in _series_order(rows):
        block = [r for r in rows if r["deformation"] == deformation]
        t = [float(r["lambda_t"]) for r in block]
        f = [float(r["avg_fidelity"]) for r in block]
        ax.plot(t, f, label=deformation.pretty)
    ax.set_xlim(min(float(r["lambda_t"]) for r in rows), max(float(r["lambda_t"]) for r in rows))
    ax.set_ylim(0.0, 1.0)
    ax.set_xlabel(r"interaction strength $\lambda t$")
    ax.set_ylabel("average fidelity")
    ax.legend(loc="upper right", fontsize="small")
    return fig


def _max_figure(rows: list[dict], kind: str) -> plt.Figure:
    main = [r for r in rows if r["deformation"].kind == kind]
    if not main:
        raise SchemaError(f"no rows with deformation kind {kind!r}")
    main.sort(key=lambda r: r["deformation"].value)
    x = [r["deformation"].value for r in main]
    best = [float(r["max_avg_fidelity"]) for r in main]
    topt = [float(r["optimal_lambda_t"]) for r in main]
    reference = next((r for r in rows if r["deformation"].kind != kind), None)

    fig, (ax_top, ax_bot) = plt.subplots(2, 1, sharex=True)
    ax_top.plot(x, best, marker=".", color="C0")
    ax_bot.plot(x, topt, marker=".", color="C1")
    if reference is not None:
        label = f"bosonic ({reference['deformation'].pretty})"
        ax_top.axhline(float(reference["max_avg_fidelity"]), ls="--", color="0.4", label=label)
        ax_bot.axhline(float(reference["optimal_lambda_t"]), ls="--", color="0.4")
        ax_top.legend(loc="lower right", fontsize="small")
    ax_top.set_ylabel("maximum average fidelity")
    ax_bot.set_ylabel(r"optimal $\lambda t$")
    ax_bot.set_xlabel("deformation parameter $q$" if kind == "q" else "root order $d$")
    return fig


def make_figure(figure_id: str, rows: list[dict]) -> plt.Figure:
    if figure_id in ("t_vs_q", "t_vs_d"):
        return _time_figure(rows)
    return _max_figure(rows, kind="q" if figure_id == "max_vs_q" else "root")


def render(spec: FigureSpec) -> tuple[Path, Path]:
    """Write <out>.svg and <out>.png; nothing is written when loading fails."""
    required = (
        ("lambda_t", "deformation", "avg_fidelity")
        if spec.figure_id in ("t_vs_q", "t_vs_d")
        else ("deformation", "max_avg_fidelity", "optimal_lambda_t")
    )
    rows = load_rows(spec.inputs, required)
    base = spec.out.with_suffix("")
    base.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(_RC):
        fig = make_figure(spec.figure_id, rows)
        svg, png = base.with_suffix(".svg"), base.with_suffix(".png")
        fig.savefig(svg, metadata={"Date": None})
        fig.savefig(png)
        plt.close(fig)
    return svg, png


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="chain-figures", description="Render fidelity-sweep CSVs as SVG and PNG figures"
    )
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument(
        "--in",
        dest="inputs",
        type=Path,
        action="append",
        required=True,
        metavar="CSV",
        help="input sweep CSV, repeatable",
    )
    parser.add_argument("--out", type=Path, required=True, help="output path (suffix is replaced)")
    args = parser.parse_args(argv)
    try:
        svg, png = render(FigureSpec(figure_id=args.figure, inputs=tuple(args.inputs), out=args.out))
    except (SchemaError, OSError, ValueError) as exc:
        print(f"chain-figures: error: {exc}")
        return 1
    print(f"wrote {svg} and {png}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
