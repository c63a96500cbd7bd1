"""Deterministic SVG figures of triangle configurations in the disk.

Geodesics are drawn as what they are: circular arcs meeting the
boundary circle at right angles, or straight diameters.  Cycles that
cross the absolute (equidistants, circumcircles of large triangles) are
clipped to their in-disk arc.  All coordinates are emitted with fixed
4-decimal formatting so identical inputs give identical bytes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .cevians import TriangleConfig
from .cycles import GeneralizedCycle, intersect

_ABSOLUTE = GeneralizedCycle.of(1.0, 0j, -1.0)

# layer -> (stroke, width); order fixes document order
_STYLES = {
    "triangle": ("#1a1a1a", 1.6),
    "cevians": ("#7a7a7a", 0.9),
    "circumcircle": ("#9467bd", 1.1),
    "euler": ("#d62728", 1.4),
    "incircle": ("#2ca02c", 1.2),
    "excircles": ("#17becf", 1.0),
    "feet": ("#1f77b4", 0.0),
    "centers": ("#d62728", 0.0),
}

DEFAULT_LAYERS = ("triangle", "cevians", "circumcircle", "euler",
                  "incircle", "excircles", "feet", "centers")


@dataclass(frozen=True)
class FigureSpec:
    size: int = 560
    margin: float = 20.0
    layers: tuple[str, ...] = DEFAULT_LAYERS


class _Canvas:
    def __init__(self, spec: FigureSpec):
        self.spec = spec
        self.scale = spec.size / 2.0 - spec.margin
        self.mid = spec.size / 2.0
        self.parts: list[str] = []

    def xy(self, z: complex) -> tuple[float, float]:
        return self.mid + self.scale * z.real, self.mid - self.scale * z.imag

    def fmt(self, v: float) -> str:
        return f"{v:.4f}"

    def circle(self, elem_id: str, center: complex, radius: float,
               stroke: str, width: float, fill: str = "none"):
        cx, cy = self.xy(center)
        self.parts.append(
            f'<circle id="{elem_id}" cx="{self.fmt(cx)}" cy="{self.fmt(cy)}" '
            f'r="{self.fmt(radius * self.scale)}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{width}"/>')

    def dot(self, elem_id: str, z: complex, color: str, r: float = 2.6):
        cx, cy = self.xy(z)
        self.parts.append(
            f'<circle id="{elem_id}" cx="{self.fmt(cx)}" cy="{self.fmt(cy)}" '
            f'r="{r}" fill="{color}" stroke="none"/>')

    def line(self, elem_id: str, p: complex, q: complex, stroke: str, width: float):
        x1, y1 = self.xy(p)
        x2, y2 = self.xy(q)
        self.parts.append(
            f'<line id="{elem_id}" x1="{self.fmt(x1)}" y1="{self.fmt(y1)}" '
            f'x2="{self.fmt(x2)}" y2="{self.fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{width}"/>')

    def arc(self, elem_id: str, p: complex, q: complex, radius: float,
            large: bool, sweep: int, stroke: str, width: float):
        x1, y1 = self.xy(p)
        x2, y2 = self.xy(q)
        r = self.fmt(radius * self.scale)
        self.parts.append(
            f'<path id="{elem_id}" d="M {self.fmt(x1)} {self.fmt(y1)} '
            f'A {r} {r} 0 {1 if large else 0} {sweep} '
            f'{self.fmt(x2)} {self.fmt(y2)}" fill="none" '
            f'stroke="{stroke}" stroke-width="{width}"/>')

    def text(self, elem_id: str, z: complex, s: str):
        x, y = self.xy(z)
        self.parts.append(
            f'<text id="{elem_id}" x="{self.fmt(x)}" y="{self.fmt(y)}" '
            f'font-size="14" font-family="serif" text-anchor="middle">{s}</text>')


def _draw_segment(cv: _Canvas, elem_id: str, cycle: GeneralizedCycle,
                  p: complex, q: complex, stroke: str, width: float):
    """Geodesic segment between two interior points along their geodesic."""
    if cycle.is_line:
        cv.line(elem_id, p, q, stroke, width)
        return
    ec, er = cycle.euclid_center_radius()
    ang = cmath.phase((q - ec) / (p - ec))
    # interior-to-interior arcs of an orthogonal circle always span < pi
    sweep = 0 if ang > 0 else 1
    cv.arc(elem_id, p, q, er, False, sweep, stroke, width)


def _draw_cycle(cv: _Canvas, elem_id: str, cycle: GeneralizedCycle,
                stroke: str, width: float):
    """Whole cycle, clipped to the unit disk when it reaches the absolute."""
    if cycle.is_line:
        d = 1j * cycle.b / abs(cycle.b)
        z0 = -cycle.c * cycle.b / (2.0 * abs(cycle.b) ** 2)
        half = math.sqrt(max(0.0, 1.0 - abs(z0) ** 2))
        cv.line(elem_id, z0 - half * d, z0 + half * d, stroke, width)
        return
    ec, er = cycle.euclid_center_radius()
    if abs(ec) + er <= 1.0 + 1e-12:
        cv.circle(elem_id, ec, er, stroke, width)
        return
    crossings = intersect(cycle, _ABSOLUTE)
    if len(crossings) < 2:
        return  # wholly outside the disk: nothing to draw
    p, q = crossings
    t0 = cmath.phase(p - ec)
    delta = (cmath.phase(q - ec) - t0) % (2.0 * math.pi)
    mid = ec + er * cmath.exp(1j * (t0 + delta / 2.0))
    if abs(mid) > 1.0:
        # the ccw arc from p leaves the disk; draw the other one
        p, q = q, p
        delta = 2.0 * math.pi - delta
    cv.arc(elem_id, p, q, er, delta > math.pi, 0, stroke, width)


def render_svg(cfg: TriangleConfig, spec: FigureSpec = FigureSpec()) -> str:
    cv = _Canvas(spec)
    tri = cfg.triangle
    verts = tri.vertices

    cv.circle("absolute", 0j, 1.0, "#000000", 1.5)

    if "triangle" in spec.layers:
        stroke, width = _STYLES["triangle"]
        pairs = {"a": (tri.b, tri.c), "b": (tri.c, tri.a), "c": (tri.a, tri.b)}
        for v in ("a", "b", "c"):
            p, q = pairs[v]
            _draw_segment(cv, f"side-{v}", cfg.sides[v], p, q, stroke, width)
        for v in ("a", "b", "c"):
            cv.dot(f"vertex-{v}", verts[v], "#1a1a1a", 3.0)
            cv.text(f"label-{v}", verts[v] * 1.12 if abs(verts[v]) > 1e-9
                    else verts[v] + 0.06, v)

    if "cevians" in spec.layers:
        stroke, width = _STYLES["cevians"]
        for v, line in sorted(cfg.bisector_cevians.items()):
            if v in cfg.feet.bisector:
                _draw_segment(cv, f"bisector-cevian-{v}", line, verts[v],
                              cfg.feet.bisector[v], stroke, width)
        for v, line in sorted(cfg.pseudoaltitude_cevians.items()):
            if v in cfg.feet.pseudoaltitude:
                _draw_segment(cv, f"pseudoaltitude-cevian-{v}", line, verts[v],
                              cfg.feet.pseudoaltitude[v], "#bbbbbb", width)

    if "circumcircle" in spec.layers:
        stroke, width = _STYLES["circumcircle"]
        _draw_cycle(cv, "circumcircle", cfg.circumcircle, stroke, width)

    if "euler" in spec.layers and cfg.euler_circle is not None:
        stroke, width = _STYLES["euler"]
        _draw_cycle(cv, "euler-circle", cfg.euler_circle, stroke, width)

    if "incircle" in spec.layers and cfg.incircle is not None:
        stroke, width = _STYLES["incircle"]
        _draw_cycle(cv, "incircle", cfg.incircle.cycle, stroke, width)

    if "excircles" in spec.layers:
        stroke, width = _STYLES["excircles"]
        for v, spec_ in sorted(cfg.excircles.items()):
            if spec_ is not None:
                _draw_cycle(cv, f"excircle-{v}", spec_.cycle, stroke, width)

    if "feet" in spec.layers:
        color, _ = _STYLES["feet"]
        for v, z in sorted(cfg.feet.bisector.items()):
            cv.dot(f"foot-bisector-{v}", z, color, 2.2)
        for v, z in sorted(cfg.feet.pseudoaltitude.items()):
            cv.dot(f"foot-pseudoaltitude-{v}", z, "#ff7f0e", 2.2)

    if "centers" in spec.layers:
        named = {
            "circumcenter": cfg.circumcenter,
            "euler-center": cfg.euler_center,
            "bisector-point": cfg.bisector_point,
            "pseudo-orthocenter": cfg.pseudo_orthocenter,
            "incenter": cfg.incircle.center if cfg.incircle else None,
        }
        for name, z in named.items():
            if z is not None:
                cv.dot(f"point-{name}", z, "#d62728", 2.4)

    body = "\n".join(cv.parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" '
        f'height="{spec.size}" viewBox="0 0 {spec.size} {spec.size}">\n'
        f'{body}\n</svg>\n'
    )
