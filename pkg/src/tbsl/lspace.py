"""L-space slope sets: interval propagation and the closed-form regions.

Two propagation devices drive everything:

* on a rational homology solid torus, two known L-space filling slopes
  spread to the whole closed arc between them that avoids the homological
  longitude (``rr_propagate``);

* on a two-component link with unknotted components and a known L-space
  multislope (r1, r2) with r1·r2 > lk² and equal signs, the full quadrant
  beyond the seed is L-space (``rect_propagate``).

For the exceptional family b(6n+2, -3) the quadrant [n, inf) × [n, inf) is
the exact finite L-space set; its mirror gets the negated quadrant; every
other fibered hyperbolic two-bridge link has no finite L-space surgery at
all.  ``verify_ln_chain`` replays the derivation of the quadrant from the
propagation devices instead of trusting the closed form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable

from .errors import OutOfScope
from .exactq import (
    INFINITY,
    CircleInterval,
    Slope,
    as_rat,
    interval_between,
    strictly_between,
)
from .regions import Framing, Region2
from .surgery import SurgeryDiagram, drilled_longitude, homological_longitude, rolfsen_fill
from .twobridge import LinkFamily, TwoBridgeLink, classify, ln_link


def rr_propagate(known: Iterable, longitude) -> tuple[CircleInterval, ...]:
    """Closure of known L-space slopes under pairwise arc filling.

    Adds, for each pair of known slopes, the closed arc between them that
    avoids the longitude; the result is the minimal union of closed arcs,
    which for a nonempty finite set is a single arc (or a single point).
    """
    longitude = Slope.of(longitude)
    points = []
    for s in known:
        s = Slope.of(s)
        if s not in points:
            points.append(s)
    if not points:
        raise ValueError("need at least one known slope")
    if longitude in points:
        raise ValueError("longitude cannot be a known L-space slope")
    if len(points) == 1:
        return (CircleInterval.point(points[0]),)

    def cmp(x: Slope, y: Slope) -> int:
        if x == y:
            return 0
        return -1 if strictly_between(longitude, x, y) else 1

    ordered = sorted(points, key=cmp_to_key(cmp))
    return (interval_between(ordered[0], ordered[-1], longitude),)


def rect_propagate(seed: tuple, lk: int) -> Region2:
    """Quadrant of L-space multislopes spread from one seed.

    Positive seeds give [r1, inf] × [r2, inf]; negative seeds the mirrored
    [inf, r1] × [inf, r2].  Requires r1·r2 > lk² with equal nonzero signs.
    """
    r1, r2 = as_rat(seed[0]), as_rat(seed[1])
    if r1 * r2 <= lk * lk:
        raise ValueError(f"seed ({r1},{r2}) does not satisfy r1*r2 > lk^2 = {lk * lk}")
    if r1 > 0 and r2 > 0:
        rect = (CircleInterval.closed(r1, INFINITY), CircleInterval.closed(r2, INFINITY))
    elif r1 < 0 and r2 < 0:
        rect = (CircleInterval.closed(INFINITY, r1), CircleInterval.closed(INFINITY, r2))
    else:
        raise ValueError("seed coordinates must have equal nonzero signs")
    # the propagation is sound because each arc avoids the homological
    # longitude of the torus left by filling the other coordinate
    if rect[1].contains(homological_longitude(lk, r1)) or rect[0].contains(
        homological_longitude(lk, r2)
    ):
        raise AssertionError("quadrant arcs reached a homological longitude")
    return Region2(Framing.CANONICAL, (rect,), restrict_to_finite=False)


def lspace_region(link: TwoBridgeLink) -> Region2:
    """Exact set of finite L-space multislopes, canonical framing.

    The quadrant [n, inf)² for the n-th exceptional link, its negation for
    the mirror, empty for every other fibered hyperbolic link.
    """
    cls = classify(link)
    if cls.family is LinkFamily.TORUS:
        raise OutOfScope(
            f"{link} is a torus link: out of scope (surgeries are graph manifolds)"
        )
    if cls.family is LinkFamily.NON_FIBERED:
        raise OutOfScope(f"{link} is not fibered")
    if cls.family is LinkFamily.LN:
        n = cls.n
        rect = (CircleInterval.closed(n, INFINITY), CircleInterval.closed(n, INFINITY))
        return Region2(Framing.CANONICAL, (rect,), restrict_to_finite=True)
    if cls.family is LinkFamily.LN_MIRROR:
        n = cls.n
        rect = (CircleInterval.closed(INFINITY, -n), CircleInterval.closed(INFINITY, -n))
        return Region2(Framing.CANONICAL, (rect,), restrict_to_finite=True)
    return Region2.empty(Framing.CANONICAL)


def _ln_seed_diagram(third_slope: Slope | None) -> SurgeryDiagram:
    # three-component seed link: two unknots with linking 0, a third axial
    # component linking each of them once; canonical-framing slopes (1, 1, .)
    return SurgeryDiagram(
        linking=((0, 0, 1), (0, 0, 1), (1, 1, 0)),
        slopes=(Slope(1), Slope(1), third_slope),
        framing=Framing.CANONICAL,
    )


def verify_ln_chain(n: int, extra_seed: tuple[int, int] = (5, -3)) -> bool:
    """Mechanically replay the derivation of the L-space quadrant for index n.

    Steps: the drilled third component of the seed diagram has homological
    longitude 2; the inf and 1 fillings are L-spaces (lens space and the
    three-sphere), so arc propagation gives the closed arc [inf, 1]; the
    slope -1/(n-1) lies in it (inf itself for n = 1); filling there lands on
    the (n, n) multislope of the n-th exceptional link with linking n - 1;
    quadrant propagation from that seed reproduces ``lspace_region``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if drilled_longitude(_ln_seed_diagram(None), 2) != Slope(2):
        return False
    arcs = rr_propagate({INFINITY, Slope(1)}, Slope(2))
    t = INFINITY if n == 1 else Slope(Fraction(-1, n - 1))
    if not any(arc.contains(t) for arc in arcs):
        return False
    filled = rolfsen_fill(_ln_seed_diagram(t), 2)
    if filled.slopes != (Slope(n), Slope(n)):
        return False
    lk = filled.linking[0][1]
    if abs(lk) != n - 1:
        return False
    # the coefficient map must be the same affine shift at any other seed
    a, b = extra_seed
    other = _ln_seed_diagram(t).with_slope(0, Slope(a)).with_slope(1, Slope(b))
    if rolfsen_fill(other, 2).slopes != (Slope(a + n - 1), Slope(b + n - 1)):
        return False
    region = rect_propagate((Fraction(n), Fraction(n)), abs(lk))
    return region.restricted().equals(lspace_region(ln_link(n)))
