"""Static SVG drawing of the scaled summands and their Minkowski sum."""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from . import geometry
from .beamforming import BeamProblem, build_summands
from .geometry import ConvexPolygon
from .oracle import arc_breakpoints

MAX_ANTENNAS = 6
SIZE = 600.0
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#7f7f7f")

PREAMBLE = """<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0f}" height="{w:.0f}" viewBox="0 0 {w:.0f} {w:.0f}">
<rect x="0" y="0" width="{w:.0f}" height="{w:.0f}" fill="#ffffff"/>
"""


class _Frame:
    """Maps the complex plane onto the square canvas, Im pointing up."""

    def __init__(self, points: Sequence[complex], pad: float = 0.08):
        re = [p.real for p in points] + [0.0]
        im = [p.imag for p in points] + [0.0]
        half = max(max(re) - min(re), max(im) - min(im), 1e-9) * (0.5 + pad)
        self.cx = 0.5 * (max(re) + min(re))
        self.cy = 0.5 * (max(im) + min(im))
        self.k = SIZE / (2 * half)
        self.half = half

    def xy(self, z: complex) -> tuple[float, float]:
        return (SIZE / 2 + (z.real - self.cx) * self.k, SIZE / 2 - (z.imag - self.cy) * self.k)

    def length(self, r: float) -> float:
        return r * self.k


def _polygon(frame: _Frame, poly: ConvexPolygon, color: str, cls: str, width: float) -> str:
    pts = " ".join("%.3f,%.3f" % frame.xy(z) for z in poly.vertices)
    if poly.is_point:
        x, y = frame.xy(poly.vertices[0])
        return f'<circle class="{cls}" cx="{x:.3f}" cy="{y:.3f}" r="3" fill="{color}"/>'
    return (
        f'<polygon class="{cls}" points="{pts}" fill="{color}" fill-opacity="0.25" '
        f'stroke="{color}" stroke-width="{width}"/>'
    )


def render_svg(problem: BeamProblem, show_circles: bool = False) -> str:
    if problem.n_antennas > MAX_ANTENNAS:
        raise ValueError(f"at most {MAX_ANTENNAS} antennas can be drawn legibly")
    summands = build_summands(problem)
    total = geometry.minkowski_sum(summands)
    extent = [z for p in summands for z in p.vertices] + list(total.vertices)
    frame = _Frame(extent)

    out = [PREAMBLE.format(w=SIZE)]
    lo, hi = frame.xy(complex(frame.cx - frame.half, frame.cy - frame.half)), frame.xy(
        complex(frame.cx + frame.half, frame.cy + frame.half)
    )
    ox, oy = frame.xy(0j)
    out.append('<g class="axes" stroke="#000000" stroke-width="0.75">')
    out.append(f'<line x1="{lo[0]:.3f}" y1="{oy:.3f}" x2="{hi[0]:.3f}" y2="{oy:.3f}"/>')
    out.append(f'<line x1="{ox:.3f}" y1="{lo[1]:.3f}" x2="{ox:.3f}" y2="{hi[1]:.3f}"/>')
    out.append("</g>")
    out.append(f'<text x="{hi[0] - 24:.3f}" y="{oy - 6:.3f}" font-size="12">Re</text>')
    out.append(f'<text x="{ox + 6:.3f}" y="{hi[1] + 14:.3f}" font-size="12">Im</text>')

    for n, poly in enumerate(summands):
        out.append(_polygon(frame, poly, PALETTE[n % len(PALETTE)], "summand", 1.0))
    out.append(_polygon(frame, total, "#6a3d9a", "minkowski-sum", 1.5))

    if show_circles:
        arcs = arc_breakpoints(summands)
        for s in arcs.sums:
            x, y = frame.xy(s / 2)
            r = frame.length(abs(s) / 2)
            out.append(
                f'<circle class="thales-circle" cx="{x:.3f}" cy="{y:.3f}" r="{r:.3f}" '
                f'fill="none" stroke="#6a3d9a" stroke-opacity="0.5"/>'
            )

    for z, tup in zip(total.vertices, total.provenance):
        x, y = frame.xy(z)
        label = escape("(" + ",".join(str(i) for i in tup) + ")")
        out.append(f'<circle class="sum-vertex" cx="{x:.3f}" cy="{y:.3f}" r="2.5" fill="#6a3d9a"/>')
        out.append(f'<text class="vertex-label" x="{x + 4:.3f}" y="{y - 4:.3f}" font-size="11">{label}</text>')
    out.append("</svg>\n")
    return "\n".join(out)
