"""Command-line front end.

    assoc-mersenne families -f M -n 5 --counts
    assoc-mersenne verify --all -n 3..12
    assoc-mersenne metrics -f M -n 6 --format json
    assoc-mersenne export -f M -n 7 --format dot -o m7.dot
    assoc-mersenne explore cube-poly -f M -n 3

Exit status: 0 success, 1 verification failure or I/O error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .bitstring import Family
from .families import MAX_N, MAX_N_HYPERCUBE, build_M_recursive, build_R_recursive, enumerate_family
from .graph import build_graph, edge_count, export_dot
from .metrics import DisconnectedGraphError, metric_summary
from .verify import CHECKS, FAIL, run_checks

log = logging.getLogger("assoc_mersenne")

METRICS_MAX_N = 18
EXPLORE_MAX_N = 24


@dataclass
class RunConfig:
    command: str
    family: Family | None
    n_values: list[int]
    fmt: str
    verbose: bool = False
    budget: int = 0
    output: str | None = None


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'5' -> [5]; '3..12' -> [3, ..., 12]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n or range {text!r}; use N or A..B")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return list(range(lo, hi + 1))


def _family(letter: str) -> Family:
    try:
        return Family.from_letter(letter)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _check_cap(family: Family, n_values: list[int], cap: int | None = None) -> None:
    if cap is None:
        cap = MAX_N_HYPERCUBE if family is Family.HYPERCUBE else MAX_N
    if n_values and n_values[-1] > cap:
        raise UsageError(f"n={n_values[-1]} exceeds the cap of {cap} for {family.value}")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    log.info("wrote %s", path)


def cmd_families(cfg: RunConfig, method: str, counts: bool) -> int:
    _check_cap(cfg.family, cfg.n_values)
    builders = {Family.RUN_CONSTRAINED: build_R_recursive, Family.CIRCULAR_RUN_CONSTRAINED: build_M_recursive}
    if method != "brute" and cfg.family not in builders:
        raise UsageError(f"no recursive construction for {cfg.family.value}")
    status = 0
    chunks = []
    payload = []
    for n in cfg.n_values:
        brute = enumerate_family(cfg.family, n) if method in ("brute", "both") else None
        rec = None
        if method in ("recursive", "both"):
            if cfg.family is Family.RUN_CONSTRAINED and n == 0:
                rec = enumerate_family(cfg.family, 0)
            else:
                rec = builders[cfg.family](n)
        chosen = brute if brute is not None else rec
        if brute is not None and rec is not None and brute.as_set() != rec.as_set():
            log.error("n=%d: brute force and recursive construction differ", n)
            status = 1
        if cfg.fmt == "json":
            payload.append({"n": n, "order": len(chosen)} if counts else chosen.to_dict())
        elif counts:
            chunks.append(f"n={n} |V|={len(chosen)}\n")
        else:
            chunks.append("".join(m + "\n" for m in chosen.members))
    if cfg.fmt == "json":
        chunks = [json.dumps(payload if len(payload) > 1 else payload[0], indent=2) + "\n"]
    _emit("".join(chunks), cfg.output)
    return status


def cmd_verify(cfg: RunConfig, claims: list[str], explicit: bool) -> int:
    results = run_checks(claims, cfg.n_values, report_skips=explicit)
    if cfg.fmt == "json":
        text = json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    else:
        text = "".join(r.line() + "\n" for r in results)
    _emit(text, cfg.output)
    return 1 if any(r.status == FAIL for r in results) else 0


def cmd_metrics(cfg: RunConfig) -> int:
    _check_cap(cfg.family, cfg.n_values, METRICS_MAX_N)
    rows = []
    for n in cfg.n_values:
        g = build_graph(cfg.family, n)
        if g.order == 0:
            raise UsageError(f"{cfg.family.value}_{n} has no vertices")
        rows.append(metric_summary(g).to_dict(verbose=cfg.verbose))
    if cfg.fmt == "json":
        text = json.dumps(rows if len(rows) > 1 else rows[0], indent=2) + "\n"
    else:
        text = "".join(
            f"n={r['n']} radius={r['radius']} diameter={r['diameter']} "
            f"center={','.join(r['center'])} |periphery|={len(r['periphery'])}\n"
            for r in rows
        )
    _emit(text, cfg.output)
    return 0


def cmd_export(cfg: RunConfig) -> int:
    _check_cap(cfg.family, cfg.n_values)
    if len(cfg.n_values) != 1:
        raise UsageError("export takes a single n")
    g = build_graph(cfg.family, cfg.n_values[0])
    text = export_dot(g) if cfg.fmt == "dot" else json.dumps(g.to_dict(), indent=2) + "\n"
    _emit(text, cfg.output)
    return 0


def cmd_explore(cfg: RunConfig, what: str, cycle: bool) -> int:
    from .explore import (
        cube_polynomial,
        degree_distribution_report,
        hamiltonian_cycle,
        hamiltonian_path,
        rows_to_csv,
    )

    _check_cap(cfg.family, cfg.n_values, EXPLORE_MAX_N)
    rows = []
    if what == "cube-poly":
        for n in cfg.n_values:
            poly = cube_polynomial(build_graph(cfg.family, n))
            rows.append({"n": n, "family": cfg.family.value, "coefficients": str(poly),
                         "value_at_minus_1": poly(-1), "value_at_0": poly(0)})
        columns = ["n", "family", "coefficients", "value_at_minus_1", "value_at_0"]
        if cfg.fmt == "table" and len(rows) == 1:
            _emit(rows[0]["coefficients"] + "\n", cfg.output)
            return 0
    elif what == "degrees":
        for row in degree_distribution_report(cfg.family, cfg.n_values):
            row["distribution"] = " ".join(f"{k}:{c}" for k, c in row["distribution"].items())
            rows.append(row)
        columns = ["n", "family", "order", "size", "distribution"]
    else:
        search = hamiltonian_cycle if cycle else hamiltonian_path
        for n in cfg.n_values:
            res = search(build_graph(cfg.family, n), budget=cfg.budget)
            d = res.to_dict()
            d["found"] = "indeterminate" if res.found is None else res.found
            d["witness"] = " ".join(res.witness) if res.witness else ""
            rows.append(d)
        columns = ["n", "family", "kind", "found", "exhausted", "steps", "reason", "witness"]
    if cfg.fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif cfg.fmt == "csv":
        text = rows_to_csv(rows, columns)
    else:
        text = "".join(" ".join(f"{c}={row[c]}" for c in columns) + "\n" for row in rows)
    _emit(text, cfg.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="assoc-mersenne", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True, formats=("table", "json")):
        if family:
            p.add_argument("-f", "--family", type=_family, required=True, help="one of Q, F, L, R, M")
        p.add_argument("-n", type=parse_range, required=True, metavar="N|A..B")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                       help="diagnostics on stderr")

    p = sub.add_parser("families", help="list or count family members")
    common(p)
    p.add_argument("--counts", action="store_true", help="print |V| only")
    p.add_argument("--method", choices=("brute", "recursive", "both"), default="brute")

    p = sub.add_parser("verify", help="compare the closed forms with brute force")
    common(p, family=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--thm", choices=sorted(CHECKS), action="append")

    p = sub.add_parser("metrics", help="radius, diameter, center and periphery")
    common(p)
    p.add_argument("--full", action="store_true", help="include the per-vertex eccentricity map")

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    common(p, formats=("dot", "json"))

    p = sub.add_parser("explore", help="cube polynomials, degree tables, Hamiltonicity")
    p.add_argument("what", choices=("cube-poly", "degrees", "hamilton"))
    common(p, formats=("table", "csv", "json"))
    p.add_argument("--cycle", action="store_true", help="search for a cycle instead of a path")
    p.add_argument("--budget", type=int, default=10**8, help="backtracking step limit")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    cfg = RunConfig(
        command=args.command,
        family=getattr(args, "family", None),
        n_values=args.n,
        fmt=args.format,
        verbose=getattr(args, "full", False),
        budget=getattr(args, "budget", 0),
        output=args.output,
    )
    try:
        if args.command == "families":
            return cmd_families(cfg, args.method, args.counts)
        if args.command == "verify":
            claims = sorted(CHECKS) if args.all else list(dict.fromkeys(args.thm))
            return cmd_verify(cfg, claims, explicit=not args.all)
        if args.command == "metrics":
            return cmd_metrics(cfg)
        if args.command == "export":
            return cmd_export(cfg)
        return cmd_explore(cfg, args.what, args.cycle)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
