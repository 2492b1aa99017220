#!/usr/bin/env python3
"""Census of two-bridge links up to a numerator bound.

Tabulates how many unoriented classes fall into each surgery family, lists
the exceptional quadrant links found, and cross-checks that the L-space and
foliation regions partition the finite multislope plane for every
hyperbolic fibered class.
"""

import argparse
from collections import Counter
from math import gcd

from tbsl import (
    Framing,
    Region2,
    TwoBridgeLink,
    classify,
    foliation_region,
    lspace_region,
    render_link,
)


def unoriented_classes(max_p):
    seen = set()
    for p in range(2, max_p + 1, 2):
        for q in range(-p + 1, p, 2):
            if q == 0 or gcd(p, abs(q)) != 1:
                continue
            link = TwoBridgeLink(p, q)
            qm = q % p
            key = (p, min(qm, pow(qm, -1, p)))
            if key in seen:
                continue
            seen.add(key)
            yield link


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=100)
    args = parser.parse_args()

    plane = Region2.finite_plane(Framing.CANONICAL)
    counts = Counter()
    quadrant_links = []
    partition_checked = 0
    for link in unoriented_classes(args.max_p):
        cls = classify(link)
        counts[cls.family.value] += 1
        if cls.n is not None:
            quadrant_links.append(render_link(link))
        if cls.is_hyperbolic_fibered:
            ls, fol = lspace_region(link), foliation_region(link)
            assert ls.union(fol).equals(plane) and ls.intersect(fol).is_empty()
            partition_checked += 1

    total = sum(counts.values())
    print(f"unoriented two-bridge classes with p <= {args.max_p}: {total}")
    for family, count in sorted(counts.items()):
        print(f"  {family:<18} {count}")
    print(f"partition verified for {partition_checked} hyperbolic fibered classes")
    if quadrant_links:
        print("links with nonempty L-space region:")
        for line in quadrant_links:
            print(f"  {line}")


if __name__ == "__main__":
    main()
