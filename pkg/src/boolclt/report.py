"""CSV, JSON and SVG output for the rate experiment."""

from __future__ import annotations

import io
import json
import math

from .experiments import CltReport

CSV_COLUMNS = ("n", "d_lev", "thm1_bound", "sqrt_n_dlev")


def _g17(v: float) -> str:
    return format(v, ".17g")


def report_csv(report: CltReport) -> str:
    """Rows as ``n,d_lev,thm1_bound,sqrt_n_dlev`` with 17 significant digits."""
    buf = io.StringIO()
    buf.write(",".join(CSV_COLUMNS) + "\n")
    for r in report.rows:
        buf.write(f"{r.n},{_g17(r.d_lev)},{_g17(r.thm1_bound)},{_g17(r.sqrt_n_dlev)}\n")
    return buf.getvalue()


def parse_csv(text: str) -> list[tuple]:
    lines = text.strip().splitlines()
    if tuple(lines[0].split(",")) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {lines[0]!r}")
    out = []
    for line in lines[1:]:
        n, *rest = line.split(",")
        out.append((int(n), *map(float, rest)))
    return out


def summary_json(report: CltReport) -> str:
    d = report.summary()
    d["status"] = report.status
    return json.dumps(d, sort_keys=False)


def report_svg(report: CltReport, width: int = 640, height: int = 420) -> str:
    """Log-log line chart of the Lévy distance and the explicit bound against n."""
    margin_l, margin_r, margin_t, margin_b = 70, 20, 30, 50
    ns = [r.n for r in report.rows]
    series = {
        "bound": [(r.n, r.thm1_bound) for r in report.rows],
        "d_lev": [(r.n, r.d_lev) for r in report.rows if r.d_lev > 0],
    }
    ys = [v for pts in series.values() for _, v in pts]
    x0, x1 = math.log10(min(ns)), math.log10(max(ns))
    if x1 == x0:
        x1 = x0 + 1
    y0, y1 = math.floor(math.log10(min(ys))), math.ceil(math.log10(max(ys)))
    if y1 == y0:
        y1 = y0 + 1
    pw, ph = width - margin_l - margin_r, height - margin_t - margin_b

    def px(n):
        return margin_l + (math.log10(n) - x0) / (x1 - x0) * pw

    def py(v):
        return margin_t + (y1 - math.log10(v)) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="{margin_l}" y="{margin_t}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>',
    ]
    for e in range(int(y0), int(y1) + 1):
        yy = py(10.0**e)
        out.append(f'<line x1="{margin_l}" y1="{yy:.2f}" x2="{margin_l + pw}" y2="{yy:.2f}" stroke="#ddd"/>')
        out.append(f'<text x="{margin_l - 6}" y="{yy + 4:.2f}" text-anchor="end">1e{e}</text>')
    for n in ns:
        xx = px(n)
        out.append(f'<text x="{xx:.2f}" y="{margin_t + ph + 16}" text-anchor="middle">{int(math.log2(n))}</text>')
    out.append(
        f'<text x="{margin_l + pw / 2}" y="{height - 10}" text-anchor="middle">log2 n</text>'
    )
    colors = {"bound": "#c0392b", "d_lev": "#1f5fa8"}
    for k, (name, pts) in enumerate(series.items()):
        if not pts:
            continue
        path = " ".join(f"{px(n):.2f},{py(v):.2f}" for n, v in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="{colors[name]}" stroke-width="1.5"/>')
        out.append(
            f'<text x="{margin_l + 10}" y="{margin_t + 16 + 14 * k}" fill="{colors[name]}">{name}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
