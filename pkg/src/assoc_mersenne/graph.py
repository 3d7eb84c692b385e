"""Induced hypercube subgraphs, edge counting, and exporters."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .bitstring import Family, hamming, is_member
from .families import R_words, M_blocks, VertexSet, enumerate_family, rotation_closure
from .sequences import fib


@dataclass(frozen=True)
class Graph:
    """Subgraph of Q_n induced by a set of words; adjacency holds sorted vertex indices."""

    family: Family
    n: int
    vertices: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def neighbors(self, v: str) -> list[str]:
        return [self.vertices[j] for j in self.adjacency[self._index[v]]]

    def degree(self, v: str) -> int:
        return len(self.adjacency[self._index[v]])

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, smaller label first, sorted."""
        out = []
        for i, nbrs in enumerate(self.adjacency):
            out.extend((self.vertices[i], self.vertices[j]) for j in nbrs if j > i)
        return sorted(out)

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "order": self.order,
            "size": edge_count(self),
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def induced_graph(family: Family | str, n: int, words: Iterable[str]) -> Graph:
    """Induced subgraph of Q_n on the given words, built by single-bit flips."""
    verts = tuple(sorted(set(words)))
    if any(len(v) != n for v in verts):
        raise ValueError(f"all words must have length {n}")
    code = {int(v, 2): i for i, v in enumerate(verts)} if n else {}
    adjacency = []
    for v in verts:
        x = int(v, 2) if v else 0
        nbrs = sorted(code[y] for y in (x ^ (1 << k) for k in range(n)) if y in code)
        adjacency.append(tuple(nbrs))
    return Graph(Family(family), n, verts, tuple(adjacency))


@lru_cache(maxsize=64)
def _build_cached(family: Family, n: int) -> Graph:
    vs = enumerate_family(family, n)
    return induced_graph(family, n, vs.members)


def build_graph(family: Family | str, n: int) -> Graph:
    """The graph Q_n, Γ_n, Λ_n, R_n or M_n selected by family."""
    return _build_cached(Family(family), n)


def edge_count(g: Graph) -> int:
    return sum(len(a) for a in g.adjacency) // 2


def degree_sequence(g: Graph) -> list[int]:
    return sorted((len(a) for a in g.adjacency), reverse=True)


def _R_size(m: int) -> int:
    # |R_0| is taken as 1 (the null word), unlike F_0 = 0
    return 1 if m == 0 else fib(m)


SMALL_R_EDGES = (0, 0, 0, 1, 2)
SMALL_M_EDGES = (0, 0, 0, 3, 4)


@lru_cache(maxsize=None)
def edge_count_R_recursive(n: int) -> int:
    """|E(R_n)| from the block recursion over 1^i 0^(i+1) R_(n-2i-1)."""
    if n < 0:
        raise ValueError("negative n")
    if n < len(SMALL_R_EDGES):
        return SMALL_R_EDGES[n]
    top = (n + 1) // 2 - 1
    inside = sum(edge_count_R_recursive(n - 2 * i - 1) for i in range(top + 1))
    across = _R_size(n - 3) + 2 * sum(_R_size(n - 2 * i - 1) for i in range(2, top + 1))
    return inside + across


def edge_count_R_closed(n: int) -> int:
    """(3n-2) F_(n-8) + (5n-4) F_(n-7); valid for n >= 8."""
    if n < 8:
        raise ValueError("closed form needs n >= 8")
    return (3 * n - 2) * fib(n - 8) + (5 * n - 4) * fib(n - 7)


def edge_count_M_recursive(n: int) -> int:
    """|E(M_n)| from the rotation-block recursion; tabulated below n = 5."""
    if n < 0:
        raise ValueError("negative n")
    if n < len(SMALL_M_EDGES):
        return SMALL_M_EDGES[n]
    top = (n + 1) // 2 - 1
    inside = sum((2 * i + 1) * edge_count_R_recursive(n - 2 * i - 1) for i in range(top + 1))
    across = 3 * _R_size(n - 3) + 2 * sum((2 * i + 1) * _R_size(n - 2 * i - 1) for i in range(2, top + 1))
    return inside + across


@dataclass
class ClassNeighborReport:
    n: int
    passed: bool
    lower_blocks_ok: bool
    checked: int = 0
    violations: list = field(default_factory=list)  # (vertex, block, lower-block neighbours)
    any_block_violations: int = 0  # same count taken over every other block, informational

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "lower_blocks_ok": self.lower_blocks_ok,
            "checked": self.checked,
            "violations": [list(v) for v in self.violations],
            "any_block_violations": self.any_block_violations,
        }


def verify_class_neighbors(n: int) -> ClassNeighborReport:
    """Check how vertices of rotation block i > 0 attach to lower blocks of M_n.

    Every vertex of block i must have exactly two neighbours in blocks j < i
    (exactly one when i = 1), and the two one-bit-cleared variants of each
    block must be members of M_n.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    g = build_graph(Family.CIRCULAR_RUN_CONSTRAINED, n)
    blocks = M_blocks(n)
    block_of = {v: i for i, blk in enumerate(blocks) for v in blk}

    lower_blocks_ok = True
    for i in range(1, len(blocks)):
        inner = R_words(n - 2 * i - 1)
        for anchor in ("1" * (i - 1) + "0" * (i + 2), "0" + "1" * (i - 1) + "0" * (i + 1)):
            if not all(is_member(Family.CIRCULAR_RUN_CONSTRAINED, w) for w in rotation_closure(anchor, inner)):
                lower_blocks_ok = False

    report = ClassNeighborReport(n=n, passed=True, lower_blocks_ok=lower_blocks_ok)
    for v in g.vertices:
        i = block_of[v]
        if i == 0:
            continue
        expected = 1 if i == 1 else 2
        nb = [block_of[u] for u in g.neighbors(v)]
        lower = sum(1 for j in nb if j < i)
        report.checked += 1
        if lower != expected:
            report.violations.append((v, i, lower))
        if sum(1 for j in nb if j != i) != expected:
            report.any_block_violations += 1
    report.passed = lower_blocks_ok and not report.violations
    return report


def export_dot(g: Graph) -> str:
    """Undirected DOT text with nodes and edges in canonical order."""
    lines = [f'graph "{g.family.value}_{g.n}" {{']
    lines.extend(f'  "{v}";' for v in g.vertices)
    lines.extend(f'  "{a}" -- "{b}";' for a, b in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def audit_adjacency(g: Graph) -> list[str]:
    """Quadratic cross-check of the adjacency lists; returns a list of problems."""
    problems = []
    for i, u in enumerate(g.vertices):
        listed = set(g.adjacency[i])
        if i in listed:
            problems.append(f"loop at {u}")
        if len(listed) != len(g.adjacency[i]):
            problems.append(f"duplicate neighbour at {u}")
        for j, v in enumerate(g.vertices):
            adjacent = hamming(u, v) == 1
            if adjacent != (j in listed):
                problems.append(f"pair {u},{v}: hamming-1={adjacent}, listed={j in listed}")
            if (j in listed) != (i in set(g.adjacency[j])):
                problems.append(f"asymmetric pair {u},{v}")
    return problems
