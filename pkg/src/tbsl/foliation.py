"""Taut-foliation regions and the surgery verdict engine.

The branched-surface constructions attach, to each sign pattern of the
monodromy twists, explicit multislope regions carrying coorientable taut
foliations (``lemma_regions``, Seifert framing).  Combined with the family
case analysis they cover every finite multislope except, for the
exceptional links, the quadrant that is exactly the L-space set; so the
foliation region is defined as the complement of the L-space region, and
the constructive covers are kept as independent witnesses
(``cover_witnesses``, ``ln_taut_witness_strips``) that reproduce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import OutOfScope
from .exactq import INFINITY, CircleInterval, Slope
from .lspace import lspace_region
from .monodromy import SignCensus
from .regions import Framing, Region2
from .surgery import SurgeryDiagram, framing_convert, is_qhs, rolfsen_fill
from .twobridge import LinkFamily, TwoBridgeLink, classify, linking_number


def _iv(lo, hi) -> CircleInterval:
    return CircleInterval.open(lo, hi)


_RATIONAL_LINE = CircleInterval.punctured(INFINITY)


def lemma_regions(census: SignCensus) -> Region2:
    """Seifert-framing multislopes carrying foliations, from the sign census.

    One positive river twist or two positive bridge twists give the open
    quadrant below slope one on both components, the negative versions its
    mirror, and mixed signs give the corresponding split quadrants.
    """
    rects = []
    if census.pos_rivers >= 1 or census.pos_bridges >= 2:
        rects.append((_iv(INFINITY, 1), _iv(INFINITY, 1)))
    if census.neg_rivers >= 1 or census.neg_bridges >= 2:
        rects.append((_iv(-1, INFINITY), _iv(-1, INFINITY)))
    if census.pos_rivers >= 1 and census.neg_rivers >= 1:
        rects.append((_iv(INFINITY, 1), _iv(-1, INFINITY)))
        rects.append((_iv(-1, INFINITY), _iv(INFINITY, 1)))
    if census.pos_bridges >= 1 and census.neg_bridges >= 1:
        rects.append((_iv(0, INFINITY), _iv(INFINITY, 0)))
        rects.append((_iv(INFINITY, 0), _iv(0, INFINITY)))
    return Region2(Framing.SEIFERT, tuple(rects), restrict_to_finite=True)


def foliation_region(link: TwoBridgeLink) -> Region2:
    """Finite multislopes with coorientable taut foliations, canonical framing.

    Equals the complement of the L-space region inside Q²: everything for
    the generic families, the complement of the quadrant for the
    exceptional links and their mirrors.
    """
    cls = classify(link)
    if cls.family is LinkFamily.TORUS:
        raise OutOfScope(
            f"{link} is a torus link: out of scope (graph-manifold surgeries)"
        )
    if cls.family is LinkFamily.NON_FIBERED:
        raise OutOfScope(f"{link} is not fibered")
    return lspace_region(link).complement()


class Verdict(Enum):
    NOT_QHS_TAUT_BY_BETTI = "NotQHS_TautByBetti"
    L_SPACE = "LSpace"
    NLS_WITH_TAUT_FOLIATION = "NLSWithTautFoliation"
    INFINITY_FILLING = "InfinityFilling"


def verdict(link: TwoBridgeLink, slope: tuple) -> Verdict:
    """Classify one surgery of a fibered hyperbolic link (canonical framing).

    Infinite fillings are reported as such (the results are the
    three-sphere, lens spaces or S²×S¹); fillings with positive first Betti
    number carry taut foliations for homological reasons; the rest split
    into L-spaces and non-L-spaces with taut foliations.
    """
    cls = classify(link)
    if not cls.is_hyperbolic_fibered:
        raise OutOfScope(f"{link} is not a fibered hyperbolic link")
    s1, s2 = Slope.of(slope[0]), Slope.of(slope[1])
    if s1.is_infinity or s2.is_infinity:
        return Verdict.INFINITY_FILLING
    lk = abs(linking_number(cls.fibered_expansion))
    diagram = SurgeryDiagram(
        ((0, lk), (lk, 0)), (s1, s2), Framing.CANONICAL
    )
    if not is_qhs(diagram):
        return Verdict.NOT_QHS_TAUT_BY_BETTI
    if lspace_region(link).contains((s1, s2)):
        return Verdict.L_SPACE
    return Verdict.NLS_WITH_TAUT_FOLIATION


# ---------------------------------------------------------------------------
# constructive cover witnesses


def _seifert_union(*rects) -> Region2:
    return Region2(Framing.SEIFERT, tuple(rects), restrict_to_finite=True)


def _family1_aux_diagram(a, b) -> SurgeryDiagram:
    # three-component companion of the smallest all-negative link; the third
    # component is filled at Seifert slope -1
    return SurgeryDiagram(
        linking=((0, -1, 1), (-1, 0, -1), (1, -1, 0)),
        slopes=(Slope.of(a), Slope.of(b), Slope(-1)),
        framing=Framing.SEIFERT,
    )


def family1_small_route_region() -> Region2:
    """Canonical-framing foliation region for the length-3 all-negative link.

    Pushes the two auxiliary-surface slope boxes through the framing change
    and the -1 twist (the shift is probed from the surgery calculus, not
    hard-coded), then adds the shifted census regions.
    """
    # boxes realised by the two auxiliary branched surfaces; the third
    # coordinate is held at -1, interior to both realised third factors
    if not (_iv(INFINITY, 0).contains(Slope(-1)) and _iv(INFINITY, 1).contains(Slope(-1))):
        raise AssertionError("filling slope left a realised box")
    probe = rolfsen_fill(
        framing_convert(_family1_aux_diagram(0, 0), Framing.CANONICAL), 2
    )
    c1, c2 = probe.slopes[0].value, probe.slopes[1].value
    lk = probe.linking[0][1]
    aux = Region2(
        Framing.CANONICAL,
        (
            (_iv(INFINITY, 1).shifted(c1), _iv(0, INFINITY).shifted(c2)),
            (_iv(INFINITY, 1).shifted(c1), _iv(INFINITY, 1).shifted(c2)),
        ),
        restrict_to_finite=True,
    )
    census_region = _seifert_union(
        (_iv(INFINITY, 1), _iv(INFINITY, 1)), (_iv(-1, INFINITY), _iv(-1, INFINITY))
    )
    shifted = census_region.shifted(-lk, -lk).with_framing(Framing.CANONICAL)
    return aux.union(aux.swapped()).union(shifted)


def family2_route_region(k: int, h: int) -> Region2:
    """Seifert-framing foliation region for the rewritten interior links.

    The four-component companion realises the boxes (0, inf) × R and
    (inf, 1)² on the surviving components once its last two components are
    filled at -1/k and -1/h; both fillings must be interior to the realised
    third and fourth factors.
    """
    if k < 1 or h < 1:
        raise ValueError("k and h must be positive")
    third, fourth = Slope(Fraction(-1, k)), Slope(Fraction(-1, h))
    if not (_iv(INFINITY, 0).contains(third) and _iv(INFINITY, 0).contains(fourth)):
        raise AssertionError("filling slopes left the first realised box")
    if not (_iv(INFINITY, 1).contains(third) and _iv(INFINITY, 1).contains(fourth)):
        raise AssertionError("filling slopes left the second realised box")
    region = _seifert_union(
        (_iv(0, INFINITY), _RATIONAL_LINE),
        (_iv(INFINITY, 1), _iv(INFINITY, 1)),
    )
    return region.union(region.swapped())


def family2_aux_diagram(a, b, k: int, h: int) -> SurgeryDiagram:
    """Four-component companion of the rewritten interior links.

    Linking data transcribed so that the framing change is (-1, -1, 0, 0)
    and the two twists land on the published coefficients; see the tests
    for the consistency checks pinning it down.
    """
    return SurgeryDiagram(
        linking=(
            (0, 1, 1, -1),
            (1, 0, -1, 1),
            (1, -1, 0, 0),
            (-1, 1, 0, 0),
        ),
        slopes=(Slope.of(a), Slope.of(b), Slope(Fraction(-1, k)), Slope(Fraction(-1, h))),
        framing=Framing.SEIFERT,
    )


def _ln_aux_diagram(a, b, n: int) -> SurgeryDiagram:
    # three-component companion of the exceptional links; third component
    # filled at Seifert slope -1/n
    return SurgeryDiagram(
        linking=((0, 1, 1), (1, 0, -1), (1, -1, 0)),
        slopes=(Slope.of(a), Slope.of(b), Slope(Fraction(-1, n))),
        framing=Framing.SEIFERT,
    )


#: Seifert-framing boxes realised by the four branched surfaces on the
#: exceptional links' companion; first two coordinates, with the realised
#: interval for the filled third coordinate alongside.
_LN_SURFACE_BOXES: tuple[tuple[CircleInterval, CircleInterval, CircleInterval], ...] = (
    (_iv(INFINITY, 1), _RATIONAL_LINE, _iv(-1, 0)),
    (_iv(0, 2), _iv(0, INFINITY), _iv(INFINITY, 0)),
    (_iv(0, 2), _iv(INFINITY, 0), _iv(-1, 0)),
    (_iv(INFINITY, 2), _iv(-1, 1), _iv(-1, 0)),
)


def ln_taut_witness_strips(n: int, include_swap: bool = True) -> Region2:
    """Canonical-framing strips witnessing foliations off the quadrant.

    Each strip is a realised Seifert-framing box of the companion link with
    third coordinate held at -1/n, pushed through the framing change and the
    twist; their union (with the coordinate swap) covers everything with
    min(r1, r2) < n while staying clear of [n, inf)².  Needs n >= 2 so that
    -1/n is interior to the realised third factors.
    """
    if n < 2:
        raise ValueError("the strip cover needs n >= 2")
    third = Slope(Fraction(-1, n))
    probe = rolfsen_fill(framing_convert(_ln_aux_diagram(0, 0, n), Framing.CANONICAL), 2)
    c1, c2 = probe.slopes[0].value, probe.slopes[1].value
    rects = []
    for bx, by, bthird in _LN_SURFACE_BOXES:
        if not bthird.contains(third):
            raise AssertionError("filling slope left a realised box")
        rects.append((bx.shifted(c1), by.shifted(c2)))
    strips = Region2(Framing.CANONICAL, tuple(rects), restrict_to_finite=True)
    if include_swap:
        strips = strips.union(strips.swapped())
    return strips


@dataclass(frozen=True)
class CoverWitness:
    name: str
    region: Region2
    target: Region2


def cover_witnesses() -> tuple[CoverWitness, ...]:
    """The constructive covers that must exactly fill their targets."""
    seifert_plane = Region2.finite_plane(Framing.SEIFERT)
    mixed_rivers = lemma_regions(SignCensus(1, 1, 1, 0))
    river_bridge_mix = lemma_regions(SignCensus(1, 0, 1, 2))
    family1_generic = lemma_regions(SignCensus(1, 0, 0, 2)).union(
        _seifert_union(
            (_iv(INFINITY, 1), _iv(0, INFINITY)), (_iv(0, INFINITY), _iv(INFINITY, 1))
        )
    )
    family1_small = family1_small_route_region()
    family2 = family2_route_region(1, 1)
    return (
        CoverWitness("mixed-rivers", mixed_rivers, seifert_plane),
        CoverWitness("positive-river-mixed-bridges", river_bridge_mix, seifert_plane),
        CoverWitness("family1-generic", family1_generic, seifert_plane),
        CoverWitness(
            "family1-small", family1_small, Region2.finite_plane(Framing.CANONICAL)
        ),
        CoverWitness("family2", family2, seifert_plane),
    )
