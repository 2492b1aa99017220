"""Exact arithmetic on the circle of surgery slopes.

Slopes live on the circle Q ∪ {inf}: the rationals together with a single
point at infinity.  All arithmetic is exact; ``fractions.Fraction`` (always
reduced, positive denominator) carries the rational values and ``inf`` is a
distinguished extra point carried by :class:`Slope`, never inside a
``Fraction``.

The circle is traversed in the direction of increasing slope, and ``inf``
is the point where +infinity is glued to -infinity.  This fixes the meaning
of every interval, including the arcs that pass through infinity:

* ``(inf, 1)``  is the set of rationals strictly below 1;
* ``(1, inf)``  is the set of rationals strictly above 1;
* ``[inf, 1]``  additionally contains ``inf`` and ``1``;
* ``(2, -2)``   wraps: rationals above 2, then ``inf``, then rationals
  below -2;
* ``(inf, inf)`` is the whole rational line (the circle punctured at
  ``inf``), while ``[a, a]`` is the single point ``a``.

The module also provides continued-fraction evaluation and the unique
all-even continued-fraction expansion used to normalise two-bridge data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce to an exact rational; floats are rejected, not approximated."""
    if isinstance(x, float):
        raise TypeError(f"floats are not exact slopes; pass a Fraction or string: {x!r}")
    return Fraction(x)


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A point of the slope circle: a rational number or ``inf``.

    ``None`` encodes the point at infinity.  The total order puts ``inf``
    above every rational; the circle wraps there.
    """

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None and not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", as_rat(self.value))

    @classmethod
    def of(cls, x) -> "Slope":
        if isinstance(x, Slope):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        return cls(as_rat(x))

    @classmethod
    def parse(cls, text: str) -> "Slope":
        text = text.strip()
        if text == "inf":
            return INFINITY
        return cls(Fraction(text))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __lt__(self, other) -> bool:
        other = Slope.of(other)
        if self.is_infinity:
            return False
        if other.is_infinity:
            return True
        return self.value < other.value

    def __neg__(self) -> "Slope":
        return self if self.is_infinity else Slope(-self.value)

    def shifted(self, d) -> "Slope":
        """Translate by a rational amount; ``inf`` is fixed."""
        return self if self.is_infinity else Slope(self.value + as_rat(d))

    def __str__(self) -> str:
        return "inf" if self.is_infinity else str(self.value)

    def __repr__(self) -> str:
        return f"Slope({self})"


INFINITY = Slope(None)


def strictly_between(a: Slope, x: Slope, b: Slope) -> bool:
    """Is ``x`` interior to the arc swept from ``a`` to ``b`` (increasing)?

    With ``a == b`` the arc is the whole circle punctured at ``a``.
    """
    if a == b:
        return x != a
    if a < b:
        return a < x < b
    return x > a or x < b


@dataclass(frozen=True)
class CircleInterval:
    """An arc of the slope circle with exact endpoints and open/closed flags.

    The arc runs from ``lo`` to ``hi`` in the direction of increasing slope
    (wrapping at ``inf``).  ``lo == hi`` with both ends closed is the single
    point; with both ends open it is the punctured circle.  ``full_circle``
    marks the whole circle.
    """

    lo: Slope
    hi: Slope
    lo_closed: bool
    hi_closed: bool
    full_circle: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Slope.of(self.lo))
        object.__setattr__(self, "hi", Slope.of(self.hi))
        if self.full_circle:
            object.__setattr__(self, "lo", INFINITY)
            object.__setattr__(self, "hi", INFINITY)
            object.__setattr__(self, "lo_closed", True)
            object.__setattr__(self, "hi_closed", True)
        elif self.lo == self.hi and self.lo_closed != self.hi_closed:
            raise ValueError(
                "degenerate interval must be a point [a,a] or a punctured circle (a,a)"
            )

    @classmethod
    def open(cls, lo, hi) -> "CircleInterval":
        return cls(Slope.of(lo), Slope.of(hi), False, False)

    @classmethod
    def closed(cls, lo, hi) -> "CircleInterval":
        return cls(Slope.of(lo), Slope.of(hi), True, True)

    @classmethod
    def point(cls, a) -> "CircleInterval":
        a = Slope.of(a)
        return cls(a, a, True, True)

    @classmethod
    def punctured(cls, a) -> "CircleInterval":
        a = Slope.of(a)
        return cls(a, a, False, False)

    @classmethod
    def full(cls) -> "CircleInterval":
        return cls(INFINITY, INFINITY, True, True, full_circle=True)

    @property
    def is_point(self) -> bool:
        return not self.full_circle and self.lo == self.hi and self.lo_closed

    def contains(self, x) -> bool:
        x = Slope.of(x)
        if self.full_circle:
            return True
        if self.lo == self.hi:
            return (x == self.lo) if self.lo_closed else (x != self.lo)
        if strictly_between(self.lo, x, self.hi):
            return True
        if x == self.lo:
            return self.lo_closed
        if x == self.hi:
            return self.hi_closed
        return False

    __contains__ = contains

    def endpoints(self) -> tuple[Slope, Slope]:
        return (self.lo, self.hi)

    def negated(self) -> "CircleInterval":
        """The pointwise image under slope negation (``inf`` is fixed)."""
        if self.full_circle:
            return self
        return CircleInterval(-self.hi, -self.lo, self.hi_closed, self.lo_closed)

    def shifted(self, d) -> "CircleInterval":
        if self.full_circle:
            return self
        return CircleInterval(
            self.lo.shifted(d), self.hi.shifted(d), self.lo_closed, self.hi_closed
        )

    def __str__(self) -> str:
        if self.full_circle:
            return "full"
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{self.lo},{self.hi}{rb}"

    def __repr__(self) -> str:
        return f"CircleInterval({self})"


_INTERVAL_RE = re.compile(r"^([\[(])\s*([^,\s]+)\s*,\s*([^,\s\])]+)\s*([\])])$")


def parse_interval(text: str) -> CircleInterval:
    """Inverse of ``str(CircleInterval)``."""
    text = text.strip()
    if text == "full":
        return CircleInterval.full()
    m = _INTERVAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an interval: {text!r}")
    lb, lo, hi, rb = m.groups()
    return CircleInterval(Slope.parse(lo), Slope.parse(hi), lb == "[", rb == "]")


@dataclass(frozen=True)
class EvenExpansion:
    """An odd-length continued-fraction expansion with nonzero even entries.

    Such an expansion is unique for its value, and the value always has an
    even numerator and odd denominator.  Entries all equal to ±2 certify a
    fibered two-bridge link.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if len(self.coeffs) % 2 != 1:
            raise ValueError("even expansion must have odd length")
        if any(a == 0 or a % 2 != 0 for a in self.coeffs):
            raise ValueError("even expansion entries must be nonzero even integers")

    def halves(self) -> tuple[int, ...]:
        return tuple(a // 2 for a in self.coeffs)

    @property
    def all_plus_minus_two(self) -> bool:
        return all(abs(a) == 2 for a in self.coeffs)

    def negated(self) -> "EvenExpansion":
        return EvenExpansion(tuple(-a for a in self.coeffs))

    def reversed_(self) -> "EvenExpansion":
        return EvenExpansion(tuple(reversed(self.coeffs)))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coeffs)


def cf_eval(coeffs: Iterable[int]) -> Slope:
    """Value of the continued fraction a1 + 1/(a2 + 1/(... + 1/an)).

    Evaluated projectively, so a vanishing tail contributes 1/0 = inf and
    a + inf = inf; the result is a reduced rational or ``inf``.
    """
    coeffs = [int(a) for a in coeffs]
    if not coeffs:
        raise ValueError("empty continued fraction")
    if any(a == 0 for a in coeffs):
        raise ValueError("zero entries are not supported")
    p_prev, q_prev = 1, 0
    p, q = coeffs[0], 1
    for a in coeffs[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    if q == 0:
        return INFINITY
    return Slope(Fraction(p, q))


def even_expand(x) -> EvenExpansion:
    """The unique all-even continued-fraction expansion of ``x``.

    Requires a reduced fraction with even numerator, odd denominator and
    ``|x| > 1`` (otherwise no expansion with nonzero even entries exists).
    Greedy: each step takes the unique even integer within distance one of
    the current value; parity guarantees existence and uniqueness, and the
    denominators strictly decrease, so this terminates with odd length.
    """
    x = as_rat(x)
    num, den = x.numerator, x.denominator
    if num == 0:
        raise ValueError("cannot expand 0")
    if num % 2 != 0 or den % 2 == 0:
        raise ValueError(f"{x} does not have even numerator and odd denominator")
    if abs(num) <= den:
        raise ValueError(f"|{x}| <= 1 admits no expansion with nonzero even entries")
    coeffs: list[int] = []
    while True:
        if den == 1:
            coeffs.append(num)
            break
        f = num // den  # floor; exactly one of f, f+1 is even
        a = f if f % 2 == 0 else f + 1
        coeffs.append(a)
        num, den = den, num - a * den
        if den < 0:
            num, den = -num, -den
    return EvenExpansion(tuple(coeffs))


def interval_between(a, b, avoid) -> CircleInterval:
    """The closed arc from ``a`` to ``b`` that does not contain ``avoid``."""
    a, b, avoid = Slope.of(a), Slope.of(b), Slope.of(avoid)
    if a == b:
        raise ValueError("endpoints must differ")
    if avoid in (a, b):
        raise ValueError("avoided point must differ from both endpoints")
    if strictly_between(a, avoid, b):
        return CircleInterval.closed(b, a)
    return CircleInterval.closed(a, b)
