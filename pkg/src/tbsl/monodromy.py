"""Dehn-twist factorisation of the fibration monodromy and its sign census.

The fiber surface of a ±2 expansion of length n carries core curves
indexed 1..n.  The monodromy is the product of one twist per curve, the
even-indexed ("river") twists first in ascending order, then the
odd-indexed ("bridge") twists ascending.  The twist at index i has
exponent -sgn(b_i) for even i and sgn(b_i) for odd i, where b_i is half
the i-th expansion entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactq import EvenExpansion


@dataclass(frozen=True)
class MonodromyWord:
    """Ordered twist letters (curve_index, exponent), rivers before bridges."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        idx = [i for i, _ in self.letters]
        if sorted(idx) != list(range(1, len(idx) + 1)):
            raise ValueError("word must contain each index 1..n exactly once")
        evens = [i for i in idx if i % 2 == 0]
        odds = [i for i in idx if i % 2 == 1]
        if idx != evens + odds or evens != sorted(evens) or odds != sorted(odds):
            raise ValueError("even indices must precede odd ones, each block ascending")
        if any(e not in (1, -1) for _, e in self.letters):
            raise ValueError("exponents must be ±1")

    def __str__(self) -> str:
        return " ".join(f"t{i}" if e == 1 else f"t{i}^-1" for i, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class SignCensus:
    pos_rivers: int
    neg_rivers: int
    pos_bridges: int
    neg_bridges: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.pos_rivers, self.neg_rivers, self.pos_bridges, self.neg_bridges)

    @property
    def rivers(self) -> int:
        return self.pos_rivers + self.neg_rivers

    @property
    def bridges(self) -> int:
        return self.pos_bridges + self.neg_bridges


def twist_word(e: EvenExpansion) -> MonodromyWord:
    """Twist word of a ±2 expansion."""
    if not e.all_plus_minus_two:
        raise ValueError("monodromy word requires a ±2 expansion")
    halves = e.halves()
    n = len(halves)
    letters = []
    for i in range(2, n + 1, 2):
        letters.append((i, -halves[i - 1]))
    for i in range(1, n + 1, 2):
        letters.append((i, halves[i - 1]))
    return MonodromyWord(tuple(letters))


def sign_census(w: MonodromyWord) -> SignCensus:
    """Count exponent signs at river (even) and bridge (odd) indices."""
    pr = sum(1 for i, e in w.letters if i % 2 == 0 and e == 1)
    nr = sum(1 for i, e in w.letters if i % 2 == 0 and e == -1)
    pb = sum(1 for i, e in w.letters if i % 2 == 1 and e == 1)
    nb = sum(1 for i, e in w.letters if i % 2 == 1 and e == -1)
    return SignCensus(pr, nr, pb, nb)
