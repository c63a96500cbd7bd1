"""Cevian constructions on a triangle and the centers built from them.

Two families of cevian feet are found by bisection along the side line:

* the pseudoaltitude foot from A balances sigma(B, X, A) = sigma(A, X, C)
  as X runs along line BC; the balance function is strictly monotone on
  the whole ideal chord, so a sign change brackets the unique root (the
  foot may lie beyond the segment BC, like Euclidean obtuse feet);
* the area bisector foot balances area(ABX) = area(AXC) and always lies
  strictly between B and C.

The three bisector feet span the Euler circle, which also passes through
the three pseudoaltitude feet; the apex-to-foot geodesics of each family
meet in the bisector point and the pseudo-orthocenter respectively, when
they meet inside the disk at all.  Tangent circles (incircle, excircles)
come from angle-bisector geodesics instead of root finding.

Everything degenerate is flagged on the returned TriangleConfig rather
than raised: large triangles routinely lose their circumcenter, their
pseudo-orthocenter, or one or more excircles beyond the absolute.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .errors import BracketFailure, DivergentCevians, GeometryError
from .geom_core import (
    DiskIsometry,
    Triangle,
    mobius_to_origin,
    sigma,
    triangle_area,
)
from .cycles import (
    GeneralizedCycle,
    circle_from_center_radius,
    cycle_through,
    diameter_with_direction,
    geodesic_through,
    hyp_center_radius,
    interior_intersections,
    membership_residual,
    point_geodesic_distance,
    transform,
)

VERTICES = ("a", "b", "c")

# bisection runs until the bracket is this narrow (line-frame units)
BRACKET_WIDTH = 1e-14

# initial brackets stay this far from the triangle vertices
EDGE_INSET = 1e-9

# outward expansion never passes this ideal-chord coordinate
IDEAL_LIMIT = 1.0 - 1e-6


@dataclass(frozen=True)
class _LineFrame:
    """Side line mapped onto the real axis, first endpoint at the origin."""

    back: DiskIsometry
    t_far: float  # frame coordinate of the second endpoint


def _line_frame(b: complex, c: complex) -> _LineFrame:
    w = mobius_to_origin(b, c)
    iso = DiskIsometry(b, -cmath.phase(w), False)
    return _LineFrame(iso.inverse(), abs(w))


def _expand_bracket(f, lo: float, hi: float, limit: float):
    """Grow [lo, hi] outward (doubling, clamped to +-limit) until f changes sign."""
    flo, fhi = f(lo), f(hi)
    decreasing = flo >= fhi
    step = 0.5 * (hi - lo)
    for _ in range(80):
        if flo * fhi <= 0.0:
            return lo, hi, flo
        outward_right = (flo > 0.0) == decreasing
        if outward_right:
            if hi >= limit:
                break
            hi = min(hi + step, limit)
            fhi = f(hi)
        else:
            if lo <= -limit:
                break
            lo = max(lo - step, -limit)
            flo = f(lo)
        step *= 2.0
    raise BracketFailure("no sign change up to the ideal endpoints")


def _bisect(f, lo: float, hi: float, flo: float) -> tuple[float, float]:
    width = hi - lo
    for _ in range(200):
        if width <= BRACKET_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid, 0.0
        if (fm > 0.0) == (flo > 0.0):
            lo = mid
        else:
            hi = mid
        width = hi - lo
    return 0.5 * (lo + hi), width


def pseudoaltitude_foot(tri: Triangle, vertex: str) -> tuple[complex, float]:
    """Foot of the pseudoaltitude from a vertex; returns (point, bracket width)."""
    apex, b1, b2 = tri.opposite(vertex)
    fr = _line_frame(b1, b2)

    def f(t: float) -> float:
        x = fr.back(t)
        return sigma(b1, x, apex) - sigma(apex, x, b2)

    lo, hi, flo = _expand_bracket(f, EDGE_INSET, fr.t_far - EDGE_INSET, IDEAL_LIMIT)
    t, width = _bisect(f, lo, hi, flo)
    return fr.back(t), width


def bisector_foot(tri: Triangle, vertex: str) -> tuple[complex, float]:
    """Foot of the area-bisecting cevian from a vertex; always inside the segment."""
    apex, b1, b2 = tri.opposite(vertex)
    fr = _line_frame(b1, b2)

    def g(t: float) -> float:
        x = fr.back(t)
        return triangle_area(apex, b1, x) - triangle_area(apex, x, b2)

    lo, hi = EDGE_INSET, fr.t_far - EDGE_INSET
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return fr.back(lo), 0.0
    if glo * ghi > 0.0:
        raise BracketFailure("area balance does not change sign on the segment")
    t, width = _bisect(g, lo, hi, glo)
    return fr.back(t), width


def side_lines(tri: Triangle) -> dict[str, GeneralizedCycle]:
    """Geodesic carrying the side opposite each vertex."""
    return {
        "a": geodesic_through(tri.b, tri.c),
        "b": geodesic_through(tri.c, tri.a),
        "c": geodesic_through(tri.a, tri.b),
    }


def vertex_bisector(tri: Triangle, vertex: str, external: bool = False) -> GeneralizedCycle:
    """Internal (or external) angle-bisector geodesic at a vertex.

    The direction is found in the frame with the vertex at the origin,
    where the bisector of two unit directions is just their sum.
    """
    v, p, q = tri.opposite(vertex)
    u1 = mobius_to_origin(v, p)
    u2 = mobius_to_origin(v, q)
    u1, u2 = u1 / abs(u1), u2 / abs(u2)
    u = u1 + u2
    if abs(u) < 1e-12:
        # straight angle: fall back to the perpendicular
        u = 1j * u1
    u /= abs(u)
    if external:
        u *= 1j
    return transform(DiskIsometry.translation(-v), diameter_with_direction(u))


def concurrency_point(lines) -> tuple[complex, float]:
    """Common point of three geodesics and the worst distance to the odd one out.

    Each pair is intersected inside the disk; the candidate with the
    smallest residual against its third line wins.  Divergence (no pair
    meets inside the disk) is an error for the caller to flag.
    """
    lines = list(lines)
    best = None
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        pts = interior_intersections(lines[i], lines[j])
        if pts:
            r = point_geodesic_distance(pts[0], lines[k])
            if best is None or r < best[1]:
                best = (pts[0], r)
    if best is None:
        raise DivergentCevians("no pair of cevians meets inside the disk")
    return best


@dataclass(frozen=True)
class CircleSpec:
    """A tangent circle with its construction diagnostics."""

    center: complex
    radius: float
    cycle: GeneralizedCycle
    side_spread: float  # max - min distance to the three side lines
    concurrency_residual: float  # distance from center to the third bisector


def _tangent_spec(tri: Triangle, center: complex, third: GeneralizedCycle) -> CircleSpec:
    sides = side_lines(tri)
    ds = [point_geodesic_distance(center, sides[v]) for v in VERTICES]
    radius = sum(ds) / 3.0
    return CircleSpec(center, radius, circle_from_center_radius(center, radius),
                      max(ds) - min(ds), point_geodesic_distance(center, third))


def incircle(tri: Triangle) -> CircleSpec:
    ga = vertex_bisector(tri, "a")
    gb = vertex_bisector(tri, "b")
    gc = vertex_bisector(tri, "c")
    pts = interior_intersections(ga, gb)
    if not pts:
        raise DivergentCevians("internal bisectors diverge")
    return _tangent_spec(tri, pts[0], gc)


def excircle(tri: Triangle, vertex: str) -> CircleSpec | None:
    """Escribed circle beyond the side opposite `vertex`, or None if absent.

    The center is the meet of the internal bisector at the vertex with an
    external bisector at another; if that pair diverges the circle does
    not exist (any interior meet is automatically equidistant from all
    three side lines, so pair intersection is a sound existence test).
    """
    internal = vertex_bisector(tri, vertex)
    others = [v for v in VERTICES if v != vertex]
    e1 = vertex_bisector(tri, others[0], external=True)
    e2 = vertex_bisector(tri, others[1], external=True)
    pts = interior_intersections(internal, e1)
    if not pts:
        return None
    return _tangent_spec(tri, pts[0], e2)


@dataclass
class CevianFeet:
    """The six feet with the bracket widths their bisections reached."""

    bisector: dict[str, complex] = field(default_factory=dict)
    pseudoaltitude: dict[str, complex] = field(default_factory=dict)
    bracket_width: dict[str, float] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return len(self.bisector) == 3 and len(self.pseudoaltitude) == 3


@dataclass
class TriangleConfig:
    """Every derived object of one triangle, with degeneracy flags."""

    triangle: Triangle
    sides: dict[str, GeneralizedCycle]
    feet: CevianFeet
    bisector_cevians: dict[str, GeneralizedCycle]
    pseudoaltitude_cevians: dict[str, GeneralizedCycle]
    circumcircle: GeneralizedCycle
    circumcenter: complex | None
    circumradius: float | None
    euler_circle: GeneralizedCycle | None
    euler_center: complex | None
    euler_radius: float | None
    euler_membership: dict[str, float]
    bisector_point: complex | None
    bisector_residual: float | None
    pseudo_orthocenter: complex | None
    orthocenter_residual: float | None
    incircle: CircleSpec | None
    excircles: dict[str, CircleSpec | None]
    flags: list[str]

    def flagged(self, *prefixes: str) -> bool:
        """True if any flag starts with one of the given prefixes."""
        return any(f.startswith(p) for f in self.flags for p in prefixes)


def build_config(tri: Triangle) -> TriangleConfig:
    flags: set[str] = set()
    feet = CevianFeet()
    for v in VERTICES:
        try:
            foot, w = bisector_foot(tri, v)
            feet.bisector[v] = foot
            feet.bracket_width[f"bisector_{v}"] = w
        except GeometryError:
            flags.add(f"bracket_failure_bisector_{v}")
        try:
            foot, w = pseudoaltitude_foot(tri, v)
            feet.pseudoaltitude[v] = foot
            feet.bracket_width[f"pseudoaltitude_{v}"] = w
        except GeometryError:
            flags.add(f"bracket_failure_pseudoaltitude_{v}")

    circumcircle = cycle_through(tri.a, tri.b, tri.c)
    circumcenter = circumradius = None
    try:
        circumcenter, circumradius = hyp_center_radius(circumcircle)
    except GeometryError:
        flags.add("no_circumcenter")

    euler_circle = euler_center = euler_radius = None
    euler_membership: dict[str, float] = {}
    if len(feet.bisector) == 3:
        euler_circle = cycle_through(feet.bisector["a"], feet.bisector["b"],
                                     feet.bisector["c"])
        for v, foot in feet.pseudoaltitude.items():
            euler_membership[v] = membership_residual(euler_circle, foot)
        try:
            euler_center, euler_radius = hyp_center_radius(euler_circle)
        except GeometryError:
            flags.add("no_euler_center")
    else:
        flags.add("no_euler_circle")

    verts = tri.vertices
    bisector_cevians = {v: geodesic_through(verts[v], feet.bisector[v])
                        for v in feet.bisector}
    pseudoaltitude_cevians = {v: geodesic_through(verts[v], feet.pseudoaltitude[v])
                              for v in feet.pseudoaltitude}

    bisector_point = bisector_residual = None
    if len(bisector_cevians) == 3:
        try:
            bisector_point, bisector_residual = concurrency_point(
                bisector_cevians[v] for v in VERTICES)
        except DivergentCevians:
            flags.add("divergent_bisector_cevians")
    else:
        flags.add("divergent_bisector_cevians")

    pseudo_orthocenter = orthocenter_residual = None
    if len(pseudoaltitude_cevians) == 3:
        try:
            pseudo_orthocenter, orthocenter_residual = concurrency_point(
                pseudoaltitude_cevians[v] for v in VERTICES)
        except DivergentCevians:
            flags.add("divergent_pseudoaltitude_cevians")
    else:
        flags.add("divergent_pseudoaltitude_cevians")

    inc = None
    try:
        inc = incircle(tri)
    except GeometryError:
        flags.add("no_incircle")

    excircles: dict[str, CircleSpec | None] = {}
    for v in VERTICES:
        try:
            excircles[v] = excircle(tri, v)
        except GeometryError:
            excircles[v] = None
        if excircles[v] is None:
            flags.add(f"excircle_absent_{v}")

    return TriangleConfig(
        triangle=tri,
        sides=side_lines(tri),
        feet=feet,
        bisector_cevians=bisector_cevians,
        pseudoaltitude_cevians=pseudoaltitude_cevians,
        circumcircle=circumcircle,
        circumcenter=circumcenter,
        circumradius=circumradius,
        euler_circle=euler_circle,
        euler_center=euler_center,
        euler_radius=euler_radius,
        euler_membership=euler_membership,
        bisector_point=bisector_point,
        bisector_residual=bisector_residual,
        pseudo_orthocenter=pseudo_orthocenter,
        orthocenter_residual=orthocenter_residual,
        incircle=inc,
        excircles=excircles,
        flags=sorted(flags),
    )
