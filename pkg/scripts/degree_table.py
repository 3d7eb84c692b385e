"""Degree distributions of the family graphs, one CSV row per (family, n)."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from assoc_mersenne.bitstring import Family
from assoc_mersenne.cli import parse_range
from assoc_mersenne.explore import degree_distribution_report, rows_to_csv


@dataclass
class DegreeTableConfig:
    families: list[Family] = field(default_factory=lambda: [Family.CIRCULAR_RUN_CONSTRAINED, Family.RUN_CONSTRAINED])
    n_values: tuple[int, ...] = tuple(range(3, 17))


def build_rows(cfg: DegreeTableConfig) -> list[dict]:
    rows = []
    for family in cfg.families:
        for row in degree_distribution_report(family, cfg.n_values):
            dist = row.pop("distribution")
            row["max_degree"] = max(dist)
            row["min_degree"] = min(dist)
            row["distribution"] = " ".join(f"{d}:{c}" for d, c in dist.items())
            rows.append(row)
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", default="MR", help="letters, e.g. MRL")
    ap.add_argument("--n", type=parse_range, default=list(range(3, 17)))
    args = ap.parse_args(argv)
    cfg = DegreeTableConfig([Family.from_letter(c) for c in args.families], tuple(args.n))
    columns = ["family", "n", "order", "size", "min_degree", "max_degree", "distribution"]
    sys.stdout.write(rows_to_csv(build_rows(cfg), columns))
    return 0


if __name__ == "__main__":
    sys.exit(main())
