"""Cube polynomials for each family over a range of n.

Each row also carries the 4-cycle count, an independent check on the
quadratic coefficient, and C(G, -1).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from assoc_mersenne.bitstring import Family
from assoc_mersenne.cli import parse_range
from assoc_mersenne.explore import count_four_cycles, cube_polynomial, rows_to_csv
from assoc_mersenne.graph import build_graph


@dataclass
class CubeTableConfig:
    families: tuple[Family, ...] = tuple(Family)
    n_values: tuple[int, ...] = tuple(range(1, 13))


def build_rows(cfg: CubeTableConfig) -> list[dict]:
    rows = []
    for family in cfg.families:
        for n in cfg.n_values:
            g = build_graph(family, n)
            poly = cube_polynomial(g)
            rows.append({
                "family": family.value,
                "n": n,
                "coefficients": str(poly),
                "four_cycles": count_four_cycles(g),
                "at_minus_1": poly(-1),
            })
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", default="QFLRM")
    ap.add_argument("--n", type=parse_range, default=list(range(1, 13)))
    args = ap.parse_args(argv)
    cfg = CubeTableConfig(tuple(Family.from_letter(c) for c in args.families), tuple(args.n))
    sys.stdout.write(rows_to_csv(build_rows(cfg), ["family", "n", "coefficients", "four_cycles", "at_minus_1"]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
