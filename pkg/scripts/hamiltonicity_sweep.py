"""Hamiltonian path and cycle search over a range of n for one family.

    python3 scripts/hamiltonicity_sweep.py --family R --n 2..14 --budget 1000000
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from assoc_mersenne.bitstring import Family
from assoc_mersenne.cli import parse_range
from assoc_mersenne.explore import hamiltonian_cycle, hamiltonian_path, rows_to_csv
from assoc_mersenne.graph import build_graph


@dataclass
class SweepConfig:
    family: Family = Family.RUN_CONSTRAINED
    n_values: tuple[int, ...] = tuple(range(2, 15))
    budget: int = 10**6


def verdict(found):
    return "indeterminate" if found is None else ("yes" if found else "no")


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in cfg.n_values:
        g = build_graph(cfg.family, n)
        t0 = time.perf_counter()
        path = hamiltonian_path(g, budget=cfg.budget)
        cycle = hamiltonian_cycle(g, budget=cfg.budget)
        rows.append({
            "n": n,
            "order": g.order,
            "path": verdict(path.found),
            "cycle": verdict(cycle.found),
            "cycle_reason": cycle.reason,
            "steps": path.steps + cycle.steps,
            "seconds": f"{time.perf_counter() - t0:.2f}",
        })
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="R")
    ap.add_argument("--n", type=parse_range, default=list(range(2, 15)))
    ap.add_argument("--budget", type=int, default=10**6)
    args = ap.parse_args(argv)
    cfg = SweepConfig(Family.from_letter(args.family), tuple(args.n), args.budget)
    columns = ["n", "order", "path", "cycle", "cycle_reason", "steps", "seconds"]
    sys.stdout.write(rows_to_csv(sweep(cfg), columns))
    return 0


if __name__ == "__main__":
    sys.exit(main())
