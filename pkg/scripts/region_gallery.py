#!/usr/bin/env python3
"""Render SVG slope-plane plots for a list of links."""

import argparse
import pathlib

from tbsl import classify, foliation_region, lspace_region, parse_link
from tbsl.svgplot import region_svg


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "links",
        nargs="*",
        default=["b(8,5)", "b(14,-3)", "b(20,-3)", "b(30,-11)", "L(-2,-2,-2)"],
        help='link specs, e.g. "b(8,5)" or "L(2,-2,-2)"',
    )
    parser.add_argument("--out", default="out", help="output directory")
    args = parser.parse_args()

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for spec in args.links:
        link = parse_link(spec)
        cls = classify(link)
        window = max(5, (cls.n or 0) + 2)
        svg = region_svg(
            lspace_region(link),
            foliation_region(link),
            window,
            title=f"{link} [{cls.tag()}]",
        )
        path = outdir / f"{str(link).replace('(', '_').strip(')').replace(',', '_')}.svg"
        path.write_text(svg)
        print(f"{link} [{cls.tag()}] -> {path}")


if __name__ == "__main__":
    main()
