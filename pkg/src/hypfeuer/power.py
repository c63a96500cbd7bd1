"""Power of a point, radical axes, homothety and inversion on cycles.

The pseudolength of a segment is tanh of half its hyperbolic length,
i.e. the Euclidean length of its image after translating one endpoint to
the origin.  With distances measured this way the classical Euclidean
power machinery survives verbatim in the disk:

* power(P, c) = product of pseudolengths P->X, P->Y over any chord XY of
  c through P (negative when P is enclosed); computed in closed form by
  translating P to the origin, where it is the constant-over-quadratic
  coefficient ratio of the translated cycle;
* the locus of equal power of two cycles is always a geodesic (the
  radical axis): the equal-power condition factors through the algebra
  with one factor supported on the absolute and the other a coefficient
  cross-combination that satisfies the geodesic condition identically;
* homothety with pseudolength ratio k about a center fixes the center
  and multiplies chord pseudolengths by k; inversion swaps them against
  a fixed pseudolength power.

Homothetic centers of two circles are built by intersecting the geodesic
through their hyperbolic centers with the disk diameter through the
Euclidean homothety center of the coefficient circles, after moving the
pair into general position by a random isometry; each center is then
verified by the equal-crossing-angle property on random test lines.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from random import Random

from .errors import (
    CenterInput,
    ConcentricCycles,
    DegenerateConfiguration,
    ImageOutsideDisk,
    InvalidSignPattern,
    MissingCenter,
    NoInteriorCenter,
)
from .geom_core import (
    DiskIsometry,
    as_complex,
    hyp_distance,
    mobius_from_origin,
    mobius_to_origin,
    random_isometry,
)
from .cycles import (
    GeneralizedCycle,
    _translate_raw,
    diameter_with_direction,
    geodesic_through,
    hyp_center_radius,
    interior_intersections,
    intersect,
    point_geodesic_distance,
    transform,
)


def pseudolength(p, q) -> float:
    """tanh(d(p, q) / 2): the Euclidean length of pq seen from p's frame."""
    zp, zq = as_complex(p), as_complex(q)
    return abs((zq - zp) / (1.0 - zp.conjugate() * zq))


def power_of_point(p, cycle: GeneralizedCycle) -> float:
    """Chord-product power of p with respect to a cycle (negative inside)."""
    z = as_complex(p)
    a2, _, c2 = _translate_raw(z, cycle.a, cycle.b, cycle.c)
    if abs(a2) < 1e-15:
        raise DegenerateConfiguration("power undefined: cycle through the absolute inverse")
    return c2 / a2


def radical_axis(c1: GeneralizedCycle, c2: GeneralizedCycle) -> GeneralizedCycle:
    """The geodesic of points with equal power with respect to c1 and c2.

    The combination below has equal leading and constant coefficients by
    construction, so it is exactly a geodesic; no projection step is
    needed.  It degenerates (no direction left) precisely when the two
    cycles are concentric.
    """
    # a geodesic has equal leading/constant coefficients, which makes its
    # power identically 1: against anything else powers can never agree,
    # and against another geodesic they agree everywhere
    if abs(c1.c - c1.a) < 1e-12 or abs(c2.c - c2.a) < 1e-12:
        raise ConcentricCycles("constant power on a geodesic member")
    ar = c1.a * c2.c - c2.a * c1.c
    br = (c1.a - c1.c) * c2.b - (c2.a - c2.c) * c1.b
    if abs(br) ** 2 - ar * ar <= 1e-28:
        raise ConcentricCycles("radical axis has no interior locus")
    return GeneralizedCycle.of(ar, br, ar)


def radical_center(c1: GeneralizedCycle, c2: GeneralizedCycle,
                   c3: GeneralizedCycle) -> tuple[complex, float]:
    """Common point of the three pairwise radical axes, with residual."""
    r12 = radical_axis(c1, c2)
    r13 = radical_axis(c1, c3)
    r23 = radical_axis(c2, c3)
    pts = interior_intersections(r12, r13)
    if not pts:
        raise NoInteriorCenter("radical axes meet outside the disk")
    return pts[0], point_geodesic_distance(pts[0], r23)


def homothety_point(center, k: float, p) -> complex:
    """Image of p under the homothety about center with pseudolength ratio k."""
    w = k * mobius_to_origin(as_complex(center), as_complex(p))
    if abs(w) >= 1.0:
        raise ImageOutsideDisk(f"scaled pseudolength {abs(w):.6g} >= 1")
    return mobius_from_origin(as_complex(center), w)


def homothety_cycle(center, k: float, cycle: GeneralizedCycle) -> GeneralizedCycle:
    """Image of a cycle under the homothety about center with ratio k."""
    z = as_complex(center)
    a2, b2, c2 = _translate_raw(z, cycle.a, cycle.b, cycle.c)
    # in the centered frame w -> k w sends (A, B, C) to (A, kB, k^2 C)
    a3, b3, c3 = a2, k * b2, k * k * c2
    a4, b4, c4 = _translate_raw(-z, a3, b3, c3)
    return GeneralizedCycle.of(a4, b4, c4)


def inversion_point(center, r2: float, p) -> complex:
    """Inversion about center with pseudolength power r2 > 0."""
    w = mobius_to_origin(as_complex(center), as_complex(p))
    if abs(w) < 1e-14:
        raise CenterInput("inversion center has no image")
    w2 = r2 / w.conjugate()
    if abs(w2) >= 1.0:
        raise ImageOutsideDisk(f"inverted pseudolength {abs(w2):.6g} >= 1")
    return mobius_from_origin(as_complex(center), w2)


def inversion_cycle(center, r2: float, cycle: GeneralizedCycle) -> GeneralizedCycle:
    """Image of a cycle under inversion about center with power r2."""
    z = as_complex(center)
    a2, b2, c2 = _translate_raw(z, cycle.a, cycle.b, cycle.c)
    # in the centered frame w -> r2 / conj(w) sends (A, B, C) to (C, r2 B, r2^2 A)
    a3, b3, c3 = c2, r2 * b2, r2 * r2 * a2
    a4, b4, c4 = _translate_raw(-z, a3, b3, c3)
    return GeneralizedCycle.of(a4, b4, c4)


def rotation_half_turn_cycle(center, cycle: GeneralizedCycle) -> GeneralizedCycle:
    """Image of a cycle under the half turn about a point."""
    z = as_complex(center)
    a2, b2, c2 = _translate_raw(z, cycle.a, cycle.b, cycle.c)
    a4, b4, c4 = _translate_raw(-z, a2, -b2, c2)
    return GeneralizedCycle.of(a4, b4, c4)


@dataclass(frozen=True)
class HomotheticCenters:
    """Positive and negative homothetic centers with equal-angle spreads."""

    positive: complex | None
    negative: complex | None
    positive_spread: float | None
    negative_spread: float | None


def crossing_angle(c1: GeneralizedCycle, c2: GeneralizedCycle, at: complex) -> float:
    """Unsigned angle between two cycles at a common point, in [0, pi/2]."""
    g1 = c1.gradient(at)
    g2 = c2.gradient(at)
    if abs(g1) < 1e-15 or abs(g2) < 1e-15:
        raise DegenerateConfiguration("vanishing gradient at crossing")
    phi = abs(cmath.phase(g2 / g1))
    return min(phi, math.pi - phi)


def _equal_angle_spread(center: complex, c1: GeneralizedCycle, c2: GeneralizedCycle,
                        o1: complex, r1: float, rng: Random) -> float:
    """Worst crossing-angle spread over 8 random secants through the center.

    Secants are drawn through a random interior point of the first
    circle so they are guaranteed to cross it; the defining property of
    a homothetic center then makes them cross the second circle too.
    """
    worst = 0.0
    lines = 0
    attempts = 0
    while lines < 8 and attempts < 64:
        attempts += 1
        rho = math.tanh(r1 / 2.0) * 0.9 * math.sqrt(rng.random())
        phi = rng.uniform(0.0, 2.0 * math.pi)
        probe = mobius_from_origin(o1, rho * cmath.exp(1j * phi))
        if abs(probe - center) < 1e-6:
            continue
        line = geodesic_through(center, probe)
        angles = []
        for cy in (c1, c2):
            for z in intersect(line, cy):
                angles.append(crossing_angle(line, cy, z))
        if len(angles) < 4:
            continue
        worst = max(worst, max(angles) - min(angles))
        lines += 1
    if lines < 8:
        raise DegenerateConfiguration("could not draw 8 secants through the center")
    return worst


def homothetic_centers(c1: GeneralizedCycle, c2: GeneralizedCycle,
                       rng: Random | None = None) -> HomotheticCenters:
    """Both homothetic centers of two circles, absent entries as None.

    The construction intersects the geodesic through the hyperbolic
    centers with the disk diameter through the Euclidean homothety
    center of the coefficient circles.  A random isometry is applied
    first so the pair sits in general position (in particular the
    working frame never has the two centers on a common diameter
    degenerately), and the result is mapped back.
    """
    rng = rng if rng is not None else Random(0)
    iso = random_isometry(rng)
    back = iso.inverse()
    d1, d2 = transform(iso, c1), transform(iso, c2)
    o1, r1 = hyp_center_radius(d1)
    o2, r2 = hyp_center_radius(d2)
    if hyp_distance(o1, o2) < 1e-10:
        # concentric: both centers coincide with the common center
        center = back(o1)
        return HomotheticCenters(center, center, 0.0, 0.0)
    center_line = geodesic_through(o1, o2)
    e1, s1 = d1.euclid_center_radius()
    e2, s2 = d2.euclid_center_radius()
    out: dict[int, complex | None] = {}
    spread: dict[int, float | None] = {}
    for sign in (1, -1):
        # projective form of (s2 e1 -+ s1 e2) / (s2 -+ s1): only the
        # direction matters, so equal radii cost nothing
        v = s2 * e1 - sign * s1 * e2
        if abs(v) < 1e-15:
            out[sign], spread[sign] = None, None
            continue
        diam = diameter_with_direction(v / abs(v))
        pts = interior_intersections(center_line, diam)
        if not pts:
            out[sign], spread[sign] = None, None
            continue
        out[sign] = back(pts[0])
        spread[sign] = _equal_angle_spread(pts[0], d1, d2, o1, r1, rng)
    return HomotheticCenters(out[1], out[-1], spread[1], spread[-1])


def monge_line(c1: GeneralizedCycle, c2: GeneralizedCycle, c3: GeneralizedCycle,
               signs: tuple[int, int, int],
               rng: Random | None = None) -> tuple[GeneralizedCycle, float, list[complex]]:
    """Line through the three pairwise homothetic centers chosen by signs.

    signs[0] picks the center of the pair (c2, c3), and cyclically; the
    product of the three signs must be positive for the collinearity to
    hold, so odd patterns are rejected.  Returns the geodesic through
    the first two centers, the distance of the third from it, and the
    three centers.
    """
    if any(s not in (1, -1) for s in signs) or signs[0] * signs[1] * signs[2] != 1:
        raise InvalidSignPattern(f"sign pattern {signs} spans no line")
    rng = rng if rng is not None else Random(0)
    pairs = ((c2, c3), (c3, c1), (c1, c2))
    centers: list[complex] = []
    for (x, y), s in zip(pairs, signs):
        hc = homothetic_centers(x, y, rng)
        chosen = hc.positive if s == 1 else hc.negative
        if chosen is None:
            kind = "positive" if s == 1 else "negative"
            raise MissingCenter(f"{kind} center of a pair does not exist")
        centers.append(chosen)
    line = geodesic_through(centers[0], centers[1])
    return line, point_geodesic_distance(centers[2], line), centers
