"""Deterministic SVG rendering of the rank-3 affine chart.

Rays and chambers live in the chart of coordinate-sum one; the three
standard rays go to fixed canvas corners and everything else follows by
affine combination.  This is the only place in the package where floating
point appears: coordinates are emitted with 12 significant digits
(IEEE round-half-even), elements in a fixed order, so output bytes are
identical across runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atlas import project_affine
from .coxeter import CoxeterSystem

PALETTES = {
    "default": {
        "background": "#ffffff",
        "nef": "#2b6cb0",
        "fundamental": "#c53030",
        "orbit": "#4a5568",
        "edge": "#1a202c",
        "conic": "#1a202c",
        "apex": "#2f855a",
        "proven": "#2f855a",
        "expected": "#d69e2e",
        "label": "#444444",
    },
}


@dataclass
class RenderConfig:
    depth: int = 4
    viewport: tuple[float, float, float, float] = (0.0, 0.0, 900.0, 800.0)
    palette: str = "default"
    labels: bool = False

    def colors(self) -> dict:
        return PALETTES[self.palette]

    def corners(self) -> tuple:
        vx, vy, w, h = self.viewport
        return ((vx + w / 6.0, vy + 2.0 * h / 3.0),
                (vx + 5.0 * w / 6.0, vy + 2.0 * h / 3.0),
                (vx + w / 2.0, vy + h / 6.0))


def fnum(x: float) -> str:
    s = format(float(x), ".12g")
    return "0" if s in ("-0", "-0.0") else s


def chart_xy(vec, corners) -> tuple[float, float]:
    """Canvas position of a ray: normalize to the sum-one chart, then take
    the affine combination of the corner anchors."""
    hat = project_affine(vec)
    hat = [float(x) for x in hat]
    x = sum(h * c[0] for h, c in zip(hat, corners))
    y = sum(h * c[1] for h, c in zip(hat, corners))
    return x, y


def _points_attr(pts) -> str:
    return " ".join(f"{fnum(x)},{fnum(y)}" for x, y in pts)


def polygon(pts, fill, opacity, stroke, width=1.0) -> str:
    return (f'<polygon points="{_points_attr(pts)}" fill="{fill}" '
            f'fill-opacity="{fnum(opacity)}" stroke="{stroke}" '
            f'stroke-width="{fnum(width)}"/>')


def segment(p, q, stroke, width=2.0) -> str:
    return (f'<line x1="{fnum(p[0])}" y1="{fnum(p[1])}" x2="{fnum(q[0])}" '
            f'y2="{fnum(q[1])}" stroke="{stroke}" stroke-width="{fnum(width)}"/>')


def disc(p, r, fill) -> str:
    return f'<circle cx="{fnum(p[0])}" cy="{fnum(p[1])}" r="{fnum(r)}" fill="{fill}"/>'


def text(p, s, fill) -> str:
    return (f'<text x="{fnum(p[0])}" y="{fnum(p[1])}" fill="{fill}" '
            f'font-size="18" font-family="sans-serif">{s}</text>')


def conic_ellipse(sys: CoxeterSystem, config: RenderConfig) -> str | None:
    """The invariant quadric as a canvas ellipse.

    The quadric meets the chart plane in an ellipse whenever the system is
    Lorentzian (the chart section of a round cone); degenerate systems
    return None and no conic is drawn.
    """
    q = [[float(e) for e in row] for row in sys.quadric_matrix().rows]

    def form(u, v):
        return sum(u[a] * q[a][b] * v[b] for a in range(3) for b in range(3))

    # barycentric chart: v(x, y) = w0 + x*u1 + y*u2
    u1, u2, w0 = (1.0, 0.0, -1.0), (0.0, 1.0, -1.0), (0.0, 0.0, 1.0)
    k = [[form(u1, u1), form(u1, u2), form(u1, w0)],
         [form(u2, u1), form(u2, u2), form(u2, w0)],
         [form(w0, u1), form(w0, u2), form(w0, w0)]]

    c1, c2, c3 = config.corners()
    # canvas = M * (x, y) + c3  with columns c1-c3 and c2-c3
    m11, m12 = c1[0] - c3[0], c2[0] - c3[0]
    m21, m22 = c1[1] - c3[1], c2[1] - c3[1]
    det = m11 * m22 - m12 * m21
    # inverse affine: chart = T * (X, Y, 1) in homogeneous coordinates
    t = [[m22 / det, -m12 / det, (m12 * c3[1] - m22 * c3[0]) / det],
         [-m21 / det, m11 / det, (m21 * c3[0] - m11 * c3[1]) / det],
         [0.0, 0.0, 1.0]]
    kc = [[sum(t[a][r] * k[a][b] * t[b][s] for a in range(3) for b in range(3))
           for s in range(3)] for r in range(3)]

    a, b, c = kc[0][0], kc[0][1], kc[1][1]
    d2 = a * c - b * b
    if d2 <= 0:
        return None
    cx = (b * kc[1][2] - c * kc[0][2]) / d2
    cy = (b * kc[0][2] - a * kc[1][2]) / d2
    f0 = kc[0][2] * cx + kc[1][2] * cy + kc[2][2]
    half_tr = (a + c) / 2.0
    diff = math.hypot((a - c) / 2.0, b)
    lam1, lam2 = half_tr + diff, half_tr - diff
    if lam1 == 0 or lam2 == 0 or (-f0 / lam1) <= 0 or (-f0 / lam2) <= 0:
        return None
    r1, r2 = math.sqrt(-f0 / lam1), math.sqrt(-f0 / lam2)
    angle = 0.5 * math.degrees(math.atan2(2.0 * b, a - c))
    color = config.colors()["conic"]
    return (f'<ellipse cx="{fnum(cx)}" cy="{fnum(cy)}" rx="{fnum(r1)}" '
            f'ry="{fnum(r2)}" transform="rotate({fnum(angle)} {fnum(cx)} '
            f'{fnum(cy)})" fill="none" stroke="{color}" stroke-width="1.5" '
            f'stroke-dasharray="7 5"/>')


def _header(config: RenderConfig) -> list[str]:
    vx, vy, w, h = config.viewport
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
         f'viewBox="{fnum(vx)} {fnum(vy)} {fnum(w)} {fnum(h)}">'),
        (f'<rect x="{fnum(vx)}" y="{fnum(vy)}" width="{fnum(w)}" '
         f'height="{fnum(h)}" fill="{config.colors()["background"]}"/>'),
    ]


def _chamber_style(word_len: int, colors: dict) -> tuple[str, float]:
    if word_len == 0:
        return colors["nef"], 0.85
    if word_len == 1:
        return colors["fundamental"], 0.8
    return colors["orbit"], max(0.08, 0.5 * (0.72 ** (word_len - 2)))


def render_chambers(sys: CoxeterSystem, chambers, config: RenderConfig) -> str:
    """Chamber tiling in the chart: nef cone and fundamental region
    highlighted, orbit depth encoded by fill opacity, quadric overlaid."""
    if sys.m != 3:
        raise ValueError("chart rendering needs m = 3")
    colors = config.colors()
    corners = config.corners()
    lines = _header(config)
    for ch in sorted(chambers, key=lambda c: -len(c.word)):
        pts = [chart_xy(r, corners) for r in ch.rays]
        fill, opacity = _chamber_style(len(ch.word), colors)
        lines.append(polygon(pts, fill, opacity, colors["edge"], 0.75))
    conic = conic_ellipse(sys, config)
    if conic:
        lines.append(conic)
    if config.labels:
        for name, ray in (("H1", (1, 0, 0)), ("H2", (0, 1, 0)), ("H3", (0, 0, 1))):
            x, y = chart_xy(ray, corners)
            lines.append(text((x + 8, y - 8), name, colors["label"]))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_boundary(sys: CoxeterSystem, fundamental, patches,
                    config: RenderConfig) -> str:
    """Boundary sampling: fundamental region outline, quadric, and the
    patch cones (apex-to-ray segments, or single rays when the apex is
    zero)."""
    if sys.m != 3:
        raise ValueError("chart rendering needs m = 3")
    colors = config.colors()
    corners = config.corners()
    lines = _header(config)
    for ch in fundamental:
        pts = [chart_xy(r, corners) for r in ch.rays]
        fill, opacity = _chamber_style(len(ch.word), colors)
        lines.append(polygon(pts, fill, 0.25, colors["edge"], 0.75))
    conic = conic_ellipse(sys, config)
    if conic:
        lines.append(conic)
    for p in patches:
        ray_pts = [chart_xy(r, corners) for r in p.base_rays]
        if p.has_apex:
            apex_pt = chart_xy(p.apex, corners)
            for rp in ray_pts:
                lines.append(segment(apex_pt, rp, colors["proven"], 1.5))
            lines.append(disc(apex_pt, 3.0, colors["apex"]))
        for rp in ray_pts:
            lines.append(disc(rp, 2.5, colors["nef"]))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_symmetric_movable(cones, sys: CoxeterSystem,
                             config: RenderConfig) -> str:
    """Quadrilateral tiling of the movable cone in the symmetric case."""
    colors = config.colors()
    corners = config.corners()
    lines = _header(config)
    for cone in sorted(cones, key=lambda c: -c.word.syllable_length):
        pts = [chart_xy(r, corners) for r in cone.rays]
        depth = cone.word.syllable_length
        if depth == 0:
            fill, opacity = colors["fundamental"], 0.8
        else:
            fill, opacity = colors["orbit"], max(0.08, 0.5 * (0.72 ** (depth - 1)))
        lines.append(polygon(pts, fill, opacity, colors["edge"], 0.75))
    conic = conic_ellipse(sys, config)
    if conic:
        lines.append(conic)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_symmetric_psef(patches, sys: CoxeterSystem,
                          config: RenderConfig) -> str:
    """Expected pseudoeffective picture: the quadric plus the proven
    boundary segments and the conjectural cones glued tangentially."""
    colors = config.colors()
    corners = config.corners()
    lines = _header(config)
    for p in patches:
        if p.status != "expected":
            continue
        pts = [chart_xy(r, corners) for r in p.rays]
        lines.append(polygon(pts, colors["expected"], 0.3, colors["expected"], 0.5))
    conic = conic_ellipse(sys, config)
    if conic:
        lines.append(conic)
    for p in patches:
        if p.status != "proven":
            continue
        pts = [chart_xy(r, corners) for r in p.rays]
        lines.append(segment(pts[0], pts[1], colors["proven"], 2.0))
        for pt in pts:
            lines.append(disc(pt, 2.5, colors["proven"]))
    if config.labels:
        from .symmetric import d_classes
        d1, d2 = d_classes()
        for name, cls in (("D1", d1), ("D2", d2)):
            x, y = chart_xy(cls, corners)
            lines.append(text((x + 8, y - 8), name, colors["label"]))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
