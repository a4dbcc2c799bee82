"""CSV, JSON, and SVG emitters for reports, measures, and law tables.

CSV uses 17-significant-digit decimals, so numeric values round-trip
exactly.  Report CSV is long-format with the columns::

    section,name,member,size,field,value,threshold

where ``section`` ∈ {meta, config, record, aggregate, criterion,
verdict}; criterion rows carry the observed value, the comparator (in
``field``), and the threshold, so every pass/fail flag can be recomputed
from the CSV alone.  Measure CSV has columns ``index,value`` (real
support) or ``index,re,im`` (planar).  Law-table CSV has columns
``x,density,cdf``.

SVG output is a self-contained document: scatter panels draw each point
as a ``circle`` element with overlay boundaries as ``path`` elements
computed from the law module's geometry; histograms contain exactly
``bins`` ``rect`` elements plus one ``path`` for the law density, with
axes drawn as ``line`` elements.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import laws
from .harness import ExperimentReport
from .laws import Law1D, RingRadii
from .spectra import EmpiricalMeasure

__all__ = [
    "LawTable",
    "emit_csv",
    "emit_json",
    "emit_svg_scatter",
    "emit_svg_histogram",
]

_FMT = "%.17g"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "pass" if x else "fail"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return _FMT % float(x)
    return str(x)


@dataclass(frozen=True)
class LawTable:
    """A 1-D law tabulated on a uniform grid over its support."""

    law: Law1D
    grid: int = 512

    def __post_init__(self) -> None:
        if self.grid < 2:
            raise ValueError("law table needs at least 2 grid points")

    def rows(self) -> List[Tuple[float, float, float]]:
        lo, hi = self.law.support
        xs = np.linspace(lo, hi, self.grid)
        dens = np.asarray(self.law.density(xs), dtype=np.float64)
        cdf = np.asarray(self.law.cdf(xs), dtype=np.float64)
        return list(zip(xs.tolist(), dens.tolist(), cdf.tolist()))


def _open_for_write(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def emit_csv(obj: Union[ExperimentReport, EmpiricalMeasure, LawTable], path) -> None:
    """Serialize a report, an empirical measure, or a law table as CSV."""
    with _open_for_write(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if isinstance(obj, ExperimentReport):
            _report_rows(writer, obj)
        elif isinstance(obj, EmpiricalMeasure):
            if obj.is_complex:
                writer.writerow(["index", "re", "im"])
                for i, z in enumerate(obj.support):
                    writer.writerow([i, _fmt(z.real), _fmt(z.imag)])
            else:
                writer.writerow(["index", "value"])
                for i, x in enumerate(obj.support):
                    writer.writerow([i, _fmt(x)])
        elif isinstance(obj, LawTable):
            writer.writerow(["x", "density", "cdf"])
            for x, d, c in obj.rows():
                writer.writerow([_fmt(x), _fmt(d), _fmt(c)])
        else:
            raise TypeError(f"emit_csv cannot serialize {type(obj).__name__}")


def _report_rows(writer, report: ExperimentReport) -> None:
    writer.writerow(["section", "name", "member", "size", "field", "value", "threshold"])
    writer.writerow(["meta", "schema", "", "", "", "rmt-report/1", ""])
    writer.writerow(["meta", "preamble", "", "", "", report.preamble, ""])
    writer.writerow(["meta", "wall_time", "", "", "", _fmt(report.wall_time), ""])
    cfg = report.config.to_json_dict()
    for key in ("sizes", "trials", "statistic", "tolerance", "master_seed"):
        writer.writerow(["config", key, "", "", "", json.dumps(cfg[key]), ""])
    writer.writerow(["config", "ensemble", "", "", "", json.dumps(cfg["ensemble"]), ""])
    writer.writerow(["config", "law", "", "", "", json.dumps(cfg["law"]), ""])
    for rec in report.records:
        for key in sorted(rec.values):
            writer.writerow([
                "record", rec.stream_id, rec.member, rec.size, key,
                _fmt(rec.values[key]), "",
            ])
    for member, per_size in report.aggregates.items():
        for size, per_key in per_size.items():
            for key, stats in per_key.items():
                for stat, val in stats.items():
                    writer.writerow([
                        "aggregate", stat, member, size, key, _fmt(val), "",
                    ])
    for crit in report.criteria:
        writer.writerow([
            "criterion", crit["name"], "", "", crit["comparator"],
            _fmt(crit["value"]), json.dumps(crit["threshold"]),
        ])
        writer.writerow([
            "criterion", crit["name"] + ".passed", "", "", "",
            "pass" if crit["passed"] else "fail", "",
        ])
    writer.writerow(["verdict", "verdict", "", "", "", _fmt(report.verdict), ""])


def emit_json(report: ExperimentReport, path) -> None:
    """Serialize a report as ``rmt-report/1`` JSON."""
    with _open_for_write(path) as fh:
        json.dump(report.to_json_dict(), fh, indent=2, sort_keys=False)
        fh.write("\n")


# ----------------------------------------------------------------------
# SVG
# ----------------------------------------------------------------------
_SVG_SIZE_LIMIT = 2_000_000  # bytes


def _svg_document(width: int, height: int, body: List[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _write_svg(path, doc: str) -> None:
    data = doc.encode("utf-8")
    if len(data) > _SVG_SIZE_LIMIT:
        raise ValueError(
            f"SVG output would be {len(data)} bytes, over the 2 MB limit"
        )
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def _overlay_path(kind: str, params, to_px) -> str:
    """Closed boundary path for an overlay, from law-module geometry."""
    t = np.linspace(0.0, 2.0 * math.pi, 257)
    if kind == "circle":
        radius = float(params)
        loops = [(radius * np.cos(t), radius * np.sin(t))]
    elif kind == "ellipse":
        ax_re, ax_im = laws.ellipse_axes(float(params))
        loops = [(ax_re * np.cos(t), ax_im * np.sin(t))]
    elif kind == "annulus":
        if isinstance(params, RingRadii):
            a, b = params.a, params.b
        else:
            a, b = params
        loops = [(a * np.cos(t), a * np.sin(t)), (b * np.cos(t), b * np.sin(t))]
    else:
        raise ValueError(f"unknown overlay kind {kind!r}")
    parts = []
    for xs, ys in loops:
        px, py = to_px(xs, ys)
        cmds = [f"M {px[0]:.2f} {py[0]:.2f}"]
        cmds += [f"L {x:.2f} {y:.2f}" for x, y in zip(px[1:], py[1:])]
        cmds.append("Z")
        parts.append(" ".join(cmds))
    return f'<path d="{" ".join(parts)}" fill="none" stroke="#d62728" stroke-width="1.5"/>'


def emit_svg_scatter(measures, overlays: Sequence[Tuple[str, object]] = (),
                     path=None, titles: Optional[Sequence[str]] = None) -> None:
    """Scatter plot of one or more planar measures, with law overlays.

    ``measures`` is an EmpiricalMeasure or a sequence of them (one panel
    each, side by side).  ``overlays`` entries are ``("circle", r)``,
    ``("ellipse", rho)``, or ``("annulus", RingRadii | (a, b))``; each
    boundary is drawn in every panel from the law module's geometry.
    """
    if isinstance(measures, EmpiricalMeasure):
        measures = [measures]
    if not measures:
        raise ValueError("no measures to plot")
    panel, margin = 420, 40
    width = margin + len(measures) * (panel + margin)
    height = panel + 2 * margin

    extent = 1.0
    for mu in measures:
        z = np.asarray(mu.support, dtype=np.complex128)
        if z.size:
            extent = max(extent, float(np.max(np.abs(z.real))), float(np.max(np.abs(z.imag))))
    for kind, params in overlays:
        if kind == "circle":
            extent = max(extent, float(params))
        elif kind == "ellipse":
            extent = max(extent, max(laws.ellipse_axes(float(params))))
        elif kind == "annulus":
            b = params.b if isinstance(params, RingRadii) else params[1]
            extent = max(extent, float(b))
    extent *= 1.06

    body = [f'<rect width="{width}" height="{height}" fill="white"/>']
    for idx, mu in enumerate(measures):
        x0 = margin + idx * (panel + margin)
        y0 = margin
        scale = panel / (2.0 * extent)

        def to_px(xs, ys, x0=x0, y0=y0, scale=scale):
            return x0 + (xs + extent) * scale, y0 + (extent - ys) * scale

        body.append(
            f'<rect x="{x0}" y="{y0}" width="{panel}" height="{panel}" '
            f'fill="none" stroke="#444" stroke-width="1"/>'
        )
        cx, _ = to_px(np.array([0.0]), np.array([0.0]))
        _, cy = to_px(np.array([0.0]), np.array([0.0]))
        body.append(
            f'<line x1="{cx[0]:.2f}" y1="{y0}" x2="{cx[0]:.2f}" y2="{y0 + panel}" '
            f'stroke="#ccc" stroke-width="1"/>'
        )
        body.append(
            f'<line x1="{x0}" y1="{cy[0]:.2f}" x2="{x0 + panel}" y2="{cy[0]:.2f}" '
            f'stroke="#ccc" stroke-width="1"/>'
        )
        z = np.asarray(mu.support, dtype=np.complex128)
        px, py = to_px(z.real, z.imag)
        for x, y in zip(px, py):
            body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.6" fill="#1f77b4"/>')
        for kind, params in overlays:
            body.append(_overlay_path(kind, params, to_px))
        if titles and idx < len(titles):
            body.append(
                f'<text x="{x0 + panel / 2:.0f}" y="{y0 - 10}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="14">{titles[idx]}</text>'
            )
    _write_svg(path, _svg_document(width, height, body))


def freedman_diaconis_bins(values: np.ndarray) -> int:
    """Freedman–Diaconis bin count (≥ 1, capped at 512)."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    if n < 2:
        return 1
    iqr = float(np.quantile(values, 0.75) - np.quantile(values, 0.25))
    span = float(values.max() - values.min())
    if iqr <= 0 or span <= 0:
        return 1
    h = 2.0 * iqr / n ** (1.0 / 3.0)
    return int(min(max(math.ceil(span / h), 1), 512))


def emit_svg_histogram(measure: EmpiricalMeasure, law: Optional[Law1D] = None,
                       bins: Optional[int] = None, path=None) -> None:
    """Density-normalized histogram with the law density drawn on top.

    The document contains exactly ``bins`` rect elements (Freedman–
    Diaconis default) and one path element for the overlay; axes are
    line elements.
    """
    if measure.is_complex:
        raise ValueError("histogram requires a real-supported measure")
    values = np.asarray(measure.support, dtype=np.float64)
    if bins is None:
        bins = freedman_diaconis_bins(values)
    if bins < 1:
        raise ValueError("bins must be ≥ 1")

    lo = float(values.min())
    hi = float(values.max())
    if law is not None:
        lo = min(lo, law.support[0])
        hi = max(hi, law.support[1])
    if hi <= lo:
        hi = lo + 1.0
    counts, edges = np.histogram(values, bins=bins, range=(lo, hi), density=True)

    y_max = float(counts.max()) if counts.size else 1.0
    if law is not None:
        xs = np.linspace(law.support[0], law.support[1], 513)
        dens = np.asarray(law.density(xs), dtype=np.float64)
        finite = dens[np.isfinite(dens)]
        if finite.size:
            y_max = max(y_max, float(np.quantile(finite, 0.995)))
    y_max *= 1.08
    if y_max <= 0:
        y_max = 1.0

    width, height, margin = 640, 420, 50
    plot_w, plot_h = width - 2 * margin, height - 2 * margin

    def x_px(x):
        return margin + (np.asarray(x) - lo) / (hi - lo) * plot_w

    def y_px(y):
        return margin + plot_h - np.clip(np.asarray(y), 0.0, y_max) / y_max * plot_h

    # one rect per bin and nothing else, so rect count == bins exactly
    body: List[str] = []
    for i in range(bins):
        xl, xr = x_px(edges[i]), x_px(edges[i + 1])
        yt = y_px(counts[i])
        body.append(
            f'<rect x="{xl:.2f}" y="{yt:.2f}" width="{max(xr - xl, 0.1):.2f}" '
            f'height="{margin + plot_h - yt:.2f}" fill="#9ecae1" stroke="#6baed6" '
            f'stroke-width="0.5"/>'
        )
    if law is not None:
        xs = np.linspace(law.support[0], law.support[1], 513)
        dens = np.nan_to_num(
            np.asarray(law.density(xs), dtype=np.float64), nan=0.0,
            posinf=y_max, neginf=0.0,
        )
        px, py = x_px(xs), y_px(dens)
        cmds = [f"M {px[0]:.2f} {py[0]:.2f}"]
        cmds += [f"L {x:.2f} {y:.2f}" for x, y in zip(px[1:], py[1:])]
        body.append(
            f'<path d="{" ".join(cmds)}" fill="none" stroke="#d62728" stroke-width="2"/>'
        )
    body.append(
        f'<line x1="{margin}" y1="{margin + plot_h}" x2="{margin + plot_w}" '
        f'y2="{margin + plot_h}" stroke="#000" stroke-width="1"/>'
    )
    body.append(
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{margin + plot_h}" '
        f'stroke="#000" stroke-width="1"/>'
    )
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        x_val = lo + frac * (hi - lo)
        px = margin + frac * plot_w
        body.append(
            f'<text x="{px:.0f}" y="{margin + plot_h + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{x_val:.3g}</text>'
        )
    _write_svg(path, _svg_document(width, height, body))
