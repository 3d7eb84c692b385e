"""Experiment harnesses: cube polynomials, degree distributions, Hamiltonicity."""
from __future__ import annotations

import csv
import io
import sys
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bitstring import Family, hamming
from .graph import Graph, build_graph, degree_sequence, edge_count

DEFAULT_BUDGET = 10**8


@dataclass
class CubePolynomial:
    coefficients: list[int]

    def __call__(self, x: int) -> int:
        return sum(c * x**k for k, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        return ",".join(map(str, self.coefficients))


def subcube_levels(g: Graph) -> list[set[tuple[int, int]]]:
    """Level k holds every (base, mask) with |mask| = k whose subcube lies in V(g).

    base has zeros on the mask bits; the subcube is {base | s : s subset of mask}.
    """
    if g.order == 0:
        return []
    codes = {int(v, 2) if v else 0 for v in g.vertices}
    levels = [{(c, 0) for c in codes}]
    while True:
        nxt = set()
        for base, mask in levels[-1]:
            top = mask.bit_length()
            for b in range(top, g.n):
                bit = 1 << b
                if not base & bit and (base | bit, mask) in levels[-1]:
                    nxt.add((base, mask | bit))
        if not nxt:
            return levels
        levels.append(nxt)


def cube_polynomial(g: Graph) -> CubePolynomial:
    """Counts of induced subgraphs isomorphic to Q_0, Q_1, ... via coordinate subcubes."""
    return CubePolynomial([len(level) for level in subcube_levels(g)])


def count_four_cycles(g: Graph) -> int:
    """Label-free count of 4-cycles: sum over vertex pairs of C(common neighbours, 2), halved.

    In a bipartite graph every 4-cycle is induced, so this equals the number of
    induced Q_2.
    """
    nbrs = [set(a) for a in g.adjacency]
    total = 0
    for i, j in combinations(range(g.order), 2):
        total += comb(len(nbrs[i] & nbrs[j]), 2)
    return total // 2


def degree_distribution(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(degree_sequence(g)).items(), reverse=True))


def degree_distribution_report(family: Family | str, n_values) -> list[dict]:
    rows = []
    for n in n_values:
        g = build_graph(family, n)
        dist = degree_distribution(g)
        assert sum(dist.values()) == g.order
        assert sum(k * c for k, c in dist.items()) == 2 * edge_count(g)
        rows.append({"n": n, "family": Family(family).value, "order": g.order,
                     "size": edge_count(g), "distribution": dist})
    return rows


@dataclass
class HamiltonicityResult:
    n: int
    family: Family
    closed: bool
    found: bool | None  # None: budget ran out first
    witness: list[str] | None = None
    exhausted: bool = True
    steps: int = 0
    reason: str = ""

    @property
    def has_path(self) -> bool | None:
        return self.found if not self.closed else (True if self.found else None)

    @property
    def has_cycle(self) -> bool | None:
        return self.found if self.closed else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family.value,
            "kind": "cycle" if self.closed else "path",
            "found": self.found,
            "exhausted": self.exhausted,
            "steps": self.steps,
            "reason": self.reason,
            "witness": self.witness,
        }


class _BudgetExceeded(Exception):
    pass


def validate_hamiltonian(g: Graph, walk: list[str], closed: bool) -> bool:
    """Independent check: walk covers V(g) once, consecutive words differ in one bit
    and are adjacent in g (and wraps around when closed)."""
    if sorted(walk) != list(g.vertices):
        return False
    pairs = list(zip(walk, walk[1:]))
    if closed and len(walk) > 2:
        pairs.append((walk[-1], walk[0]))
    elif closed:
        return False
    return all(hamming(a, b) == 1 and b in g.neighbors(a) for a, b in pairs)


class _Search:
    def __init__(self, g: Graph, closed: bool, budget: int):
        self.adj = g.adjacency
        self.m = g.order
        self.closed = closed
        self.budget = budget
        self.steps = 0
        self.visited = [False] * self.m
        self.free_deg = [len(a) for a in self.adj]  # unvisited neighbours
        self.path: list[int] = []

    def _visit(self, v: int) -> None:
        self.visited[v] = True
        self.path.append(v)
        for u in self.adj[v]:
            self.free_deg[u] -= 1

    def _unvisit(self, v: int) -> None:
        self.visited[v] = False
        self.path.pop()
        for u in self.adj[v]:
            self.free_deg[u] += 1

    def _hopeless(self, end: int) -> bool:
        # every unvisited vertex must still be enterable and, bar the last one, leavable
        start = self.path[0]
        near_end = set(self.adj[end])
        near_start = set(self.adj[start]) if self.closed else set()
        dead_ends = 0
        for u in range(self.m):
            if self.visited[u]:
                continue
            avail = self.free_deg[u] + (u in near_end) + (u in near_start)
            if avail == 0:
                return True
            if avail == 1:
                dead_ends += 1
                if dead_ends > 1:
                    return True
        return self._split(end)

    def _split(self, end: int) -> bool:
        seen = [False] * self.m
        todo = [end]
        seen[end] = True
        reached = 0
        while todo:
            x = todo.pop()
            for y in self.adj[x]:
                if not self.visited[y] and not seen[y]:
                    seen[y] = True
                    reached += 1
                    todo.append(y)
        return reached != self.m - len(self.path)

    def _extend(self) -> bool:
        self.steps += 1
        if self.steps > self.budget:
            raise _BudgetExceeded
        end = self.path[-1]
        if len(self.path) == self.m:
            return not self.closed or self.path[0] in self.adj[end]
        if self._hopeless(end):
            return False
        options = sorted((u for u in self.adj[end] if not self.visited[u]),
                         key=lambda u: (self.free_deg[u], u))
        for u in options:
            self._visit(u)
            if self._extend():
                return True
            self._unvisit(u)
        return False

    def run(self, start: int) -> bool:
        self._visit(start)
        return self._extend()


def _parity_sides(g: Graph) -> tuple[list[int], list[int]]:
    even = [i for i, v in enumerate(g.vertices) if v.count("1") % 2 == 0]
    odd = [i for i, v in enumerate(g.vertices) if v.count("1") % 2]
    return even, odd


def _hamiltonian(g: Graph, closed: bool, budget: int) -> HamiltonicityResult:
    res = HamiltonicityResult(g.n, g.family, closed, None)
    m = g.order
    if m == 0:
        res.found, res.reason = False, "empty graph"
        return res
    if m == 1:
        res.found = not closed
        res.witness = list(g.vertices) if res.found else None
        res.reason = "single vertex"
        return res
    degrees = [len(a) for a in g.adjacency]
    leaves = [i for i, d in enumerate(degrees) if d == 1]
    even, odd = _parity_sides(g)
    if min(degrees) == 0:
        res.found, res.reason = False, "isolated vertex"
        return res
    if closed:
        if leaves:
            res.found, res.reason = False, "vertex of degree 1"
            return res
        if len(even) != len(odd):
            res.found, res.reason = False, f"bipartite sides {len(even)} != {len(odd)}"
            return res
        starts = [0]
    else:
        if len(leaves) > 2:
            res.found, res.reason = False, f"{len(leaves)} vertices of degree 1"
            return res
        if abs(len(even) - len(odd)) > 1:
            res.found, res.reason = False, f"bipartite sides {len(even)}, {len(odd)} differ by more than 1"
            return res
        if leaves:
            starts = leaves[:1]
        elif len(even) != len(odd):
            starts = even if len(even) > len(odd) else odd
        else:
            starts = list(range(m))
        if len(even) != len(odd):
            big = set(even if len(even) > len(odd) else odd)
            starts = [s for s in starts if s in big]
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * m + 100))
    try:
        for s in starts:
            search = _Search(g, closed, budget - res.steps)
            try:
                ok = search.run(s)
            except _BudgetExceeded:
                res.steps = budget
                res.exhausted = False
                res.found = None
                res.reason = "budget exhausted"
                return res
            res.steps += search.steps
            if ok:
                res.found = True
                res.witness = [g.vertices[i] for i in search.path]
                if not validate_hamiltonian(g, res.witness, closed):
                    raise AssertionError("search returned an invalid Hamiltonian walk")
                res.reason = "witness found"
                return res
    finally:
        sys.setrecursionlimit(old_limit)
    res.found = False
    res.reason = "search space exhausted"
    return res


def hamiltonian_path(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonicityResult:
    return _hamiltonian(g, closed=False, budget=budget)


def hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonicityResult:
    return _hamiltonian(g, closed=True, budget=budget)


def rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    return buf.getvalue()
