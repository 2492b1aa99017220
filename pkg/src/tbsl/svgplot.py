"""Deterministic SVG rendering of slope-plane regions.

All pixel coordinates are computed with exact rationals and formatted as
fixed-point decimals by integer arithmetic, so the same input always
produces byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

from .exactq import CircleInterval
from .regions import Region2

_SIZE = 420
_MARGIN = 30
_PLOT = _SIZE - 2 * _MARGIN


def _fixed(x: Fraction, places: int = 2) -> str:
    """Fixed-point decimal string of a rational, computed without floats."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator) * 10**places
    q, r = divmod(scaled, x.denominator)
    # round half away from zero, deterministically
    if 2 * r >= x.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _interval_segments(iv: CircleInterval, w: int) -> list[tuple[Fraction, Fraction]]:
    """Real segments of an arc clipped to the window [-w, w]."""
    lo, hi, win = iv.lo, iv.hi, Fraction(w)
    if iv.full_circle:
        return [(-win, win)]
    if lo == hi:
        if iv.lo_closed:  # single point: no area
            return []
        return [(-win, win)]  # punctured line: full strip up to measure zero
    if lo.is_infinity and hi.is_infinity:
        return [(-win, win)]
    if lo.is_infinity:
        return [(-win, min(hi.value, win))] if hi.value > -win else []
    if hi.is_infinity:
        return [(max(lo.value, -win), win)] if lo.value < win else []
    if lo.value < hi.value:
        a, b = max(lo.value, -win), min(hi.value, win)
        return [(a, b)] if a < b else []
    segments = []
    if lo.value < win:
        segments.append((max(lo.value, -win), win))
    if hi.value > -win:
        segments.append((-win, min(hi.value, win)))
    return segments


def _px(x: Fraction, w: int) -> Fraction:
    return _MARGIN + (Fraction(x) + w) * _PLOT / (2 * w)


def _py(y: Fraction, w: int) -> Fraction:
    return _SIZE - _MARGIN - (Fraction(y) + w) * _PLOT / (2 * w)


def _shade(region: Region2, w: int, colour: str, opacity: str) -> list[str]:
    parts = []
    for ix, iy in region.canonical().rects:
        for x0, x1 in _interval_segments(ix, w):
            for y0, y1 in _interval_segments(iy, w):
                px, py = _px(x0, w), _py(y1, w)
                pw, ph = _px(x1, w) - px, _py(y0, w) - py
                parts.append(
                    f'<rect x="{_fixed(px)}" y="{_fixed(py)}" '
                    f'width="{_fixed(pw)}" height="{_fixed(ph)}" '
                    f'fill="{colour}" fill-opacity="{opacity}"/>'
                )
    return parts


def region_svg(
    lspace: Region2, foliation: Region2, window: int, title: str = ""
) -> str:
    """Plot the L-space region (orange) and foliation region (blue)."""
    w = max(1, int(window))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    out.extend(_shade(foliation, w, "#4477cc", "0.45"))
    out.extend(_shade(lspace, w, "#ee8833", "0.75"))
    for t in range(-w, w + 1):
        x, y = _fixed(_px(Fraction(t), w)), _fixed(_py(Fraction(t), w))
        major = t in (-w, 0, w)
        stroke = "#333333" if major else "#bbbbbb"
        out.append(
            f'<line x1="{x}" y1="{_MARGIN}" x2="{x}" y2="{_SIZE - _MARGIN}" '
            f'stroke="{stroke}" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{_MARGIN}" y1="{y}" x2="{_SIZE - _MARGIN}" y2="{y}" '
            f'stroke="{stroke}" stroke-width="1"/>'
        )
    out.append(
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_PLOT}" height="{_PLOT}" '
        f'fill="none" stroke="black" stroke-width="1.5"/>'
    )
    # window labels; the boundary of the frame stands in for slope inf
    out.append(
        f'<text x="{_MARGIN}" y="{_SIZE - 8}" font-size="12" font-family="monospace">'
        f"[-{w}, {w}]^2  (frame boundary = slope inf)</text>"
    )
    if title:
        out.append(
            f'<text x="{_MARGIN}" y="20" font-size="13" font-family="monospace">'
            f"{title}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
