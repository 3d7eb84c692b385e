"""Distances, eccentricities and the metric constructions for M_n.

``distances_from`` is a plain breadth-first search. ``distance_matrix`` hands
the all-pairs problem to scipy's compiled graph routines; tests compare the
two against each other.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .bitstring import Family, is_member, rotate, runs, weight
from .families import MAX_N, VerificationError, enumerate_family, rotation_closure
from .graph import Graph


class DisconnectedGraphError(ValueError):
    pass


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def distances_from(g: Graph, v: str) -> dict[str, int]:
    """Breadth-first distances from v to every vertex of g."""
    src = g.index(v)
    dist = [-1] * g.order
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    if min(dist) < 0:
        missing = g.vertices[dist.index(-1)]
        raise DisconnectedGraphError(f"{missing} unreachable from {v}")
    return dict(zip(g.vertices, dist))


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths as an int matrix indexed like g.vertices."""
    if g.order == 0:
        return np.zeros((0, 0), dtype=np.int64)
    rows = [i for i, nb in enumerate(g.adjacency) for _ in nb]
    cols = [j for nb in g.adjacency for j in nb]
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.order, g.order))
    d = shortest_path(adj, method="D", directed=False, unweighted=True)
    if np.isinf(d).any():
        raise DisconnectedGraphError(f"{g.family.value}_{g.n} is disconnected")
    return d.astype(np.int64)


@dataclass
class MetricSummary:
    n: int
    eccentricity: dict[str, int]
    radius: int
    diameter: int
    center: list[str]
    periphery: list[str]

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.eccentricity.values()).items()))

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "n": self.n,
            "radius": self.radius,
            "diameter": self.diameter,
            "center": self.center,
            "periphery": self.periphery,
            "eccentricity_histogram": {str(k): v for k, v in self.histogram().items()},
        }
        if verbose:
            out["eccentricity"] = dict(self.eccentricity)
        return out


def eccentricities(g: Graph, dist: np.ndarray | None = None) -> dict[str, int]:
    if dist is None:
        dist = distance_matrix(g)
    return dict(zip(g.vertices, (int(x) for x in dist.max(axis=1))))


def metric_summary(g: Graph, dist: np.ndarray | None = None) -> MetricSummary:
    if g.order == 0:
        raise ValueError("metrics of the empty graph are undefined")
    ecc = eccentricities(g, dist)
    rad, diam = min(ecc.values()), max(ecc.values())
    return MetricSummary(
        n=g.n,
        eccentricity=ecc,
        radius=rad,
        diameter=diam,
        center=[v for v in g.vertices if ecc[v] == rad],
        periphery=[v for v in g.vertices if ecc[v] == diam],
    )


def eccentricity_lower_bound(n: int, w: int) -> int:
    """w + ceil((n - w) / 2) - 1."""
    return w + _ceil_half(n - w) - 1


@lru_cache(maxsize=8)
def _vertex_set(n: int) -> frozenset[str]:
    return enumerate_family(Family.CIRCULAR_RUN_CONSTRAINED, n).as_set()


def _in_M(s: str) -> bool:
    # set lookup for the sizes we enumerate, the predicate beyond that
    if len(s) <= MAX_N:
        return s in _vertex_set(len(s))
    return is_member(Family.CIRCULAR_RUN_CONSTRAINED, s)


def _require_M(s: str, n: int | None = None) -> None:
    if n is not None and len(s) != n:
        raise ValueError(f"{s!r} has length {len(s)}, expected {n}")
    if not s or not _in_M(s):
        raise ValueError(f"{s!r} is not a vertex of M_{len(s)}")


def _even_segment(r: int, s: int) -> str:
    return "0" * r + "1" * (s // 2) + "0" * (s // 2)


def _odd_closing_segment(r: int, s: int) -> str:
    return "0" * r + "1" * ((s - 1) // 2) + "0" * ((s + 1) // 2)


def _paired_segments(segments: list[tuple[int, int]]) -> list[str]:
    # first and last segments have odd zero-runs, everything in between even
    (r1, s1), (rt, st) = segments[0], segments[-1]
    out = ["0" * r1 + "1" * ((s1 + 1) // 2) + "0" * ((s1 - 1) // 2)]
    for r, s in segments[1:-1]:
        out.append("0" * (r + 1) + "1" * (s // 2) + "0" * (s // 2 - 1))
    out.append("0" * (rt + 1) + "1" * ((st - 1) // 2) + "0" * ((st - 1) // 2))
    return out


def far_vertex(nu: str) -> str:
    """A vertex of M_n far from nu in Hamming distance.

    nu is rotated so it reads 1^r1 0^s1 ... 1^rt 0^st. Segments whose zero-runs
    have odd length are paired off in order; each pair, with the even segments
    between, is rewritten as one block, an unpaired last odd segment gets the
    single-odd rewrite, and every other segment 1^r 0^s becomes
    0^r 1^(s/2) 0^(s/2). The result is rotated back.
    """
    _require_M(nu)
    n = len(nu)
    if n < 3:
        raise ValueError("need n >= 3")
    if "1" not in nu:
        h = _ceil_half(n) - 1
        return "1" * h + "0" * (n - h)
    k = next(j for j in range(n) if nu[j] == "1" and nu[j - 1] == "0")
    blocks = runs(rotate(nu, k))
    segments = [(blocks[i].length, blocks[i + 1].length) for i in range(0, len(blocks), 2)]
    odd = [i for i, (_, s) in enumerate(segments) if s % 2]

    pieces: list[str] = [""] * len(segments)
    done = [False] * len(segments)
    for a, b in zip(odd[0::2], odd[1::2]):
        for offset, piece in enumerate(_paired_segments(segments[a:b + 1])):
            pieces[a + offset] = piece
            done[a + offset] = True
    if len(odd) % 2:
        last = odd[-1]
        pieces[last] = _odd_closing_segment(*segments[last])
        done[last] = True
    for i, (r, s) in enumerate(segments):
        if not done[i]:
            pieces[i] = _even_segment(r, s)
    return rotate("".join(pieces), -k)


def far_vertex_strong_bound(nu: str) -> int:
    """The sharper Hamming target the construction reaches when the odd zero-runs pair up."""
    n, w = len(nu), weight(nu)
    if "1" not in nu:
        return eccentricity_lower_bound(n, 0)
    odd = sum(1 for r in runs(rotate(nu, next(j for j in range(n) if nu[j] == "1" and nu[j - 1] == "0")))
              if r.symbol == 0 and r.length % 2)
    return w + _ceil_half(n - w) - (odd % 2)


def _clearing_order(s: str) -> list[int]:
    # positions of ones, read cyclically from the start of a 1-run so that a
    # run wrapping past b_n is cleared from its true left end
    ones = [i for i, b in enumerate(s) if b == "1"]
    if not ones:
        return []
    k = next(j for j in range(len(s)) if s[j] == "1" and s[j - 1] == "0")
    return sorted(ones, key=lambda i: (i - k) % len(s))


def monotone_path(alpha: str, beta: str, n: int | None = None) -> list[str]:
    """Walk alpha -> 0^n -> beta of length w(alpha) + w(beta).

    alpha's ones are cleared one at a time in cyclic order from the start of a
    1-run, then beta's ones are set in the reverse of that order for beta.
    Every step is checked to be a vertex of M_n.
    """
    n = len(alpha) if n is None else n
    _require_M(alpha, n)
    _require_M(beta, n)
    path = [alpha]
    cur = list(alpha)
    for i in _clearing_order(alpha):
        cur[i] = "0"
        path.append("".join(cur))
    for i in reversed(_clearing_order(beta)):
        cur[i] = "1"
        path.append("".join(cur))
    bad = [s for s in path if not _in_M(s)]
    if bad:
        raise VerificationError(f"monotone path leaves M_{n} at {bad[0]}")
    return path


def predicted_center(n: int) -> tuple[int, set[str]]:
    if n < 3:
        raise ValueError("need n >= 3")
    return _ceil_half(n) - 1, {"0" * n}


def predicted_periphery(n: int) -> tuple[int, set[str]]:
    """Diameter 2(ceil(n/2) - 1) and the union of rotation classes claimed to be peripheral."""
    if n < 3:
        raise ValueError("need n >= 3")
    h = _ceil_half(n) - 1
    if n % 2:
        anchors = ["1" * h + "0" * (h + 1)]
    elif n % 4 == 0:
        t = n // 4
        anchors = [
            "100" + "1" * (2 * t - 2) + "0" * (2 * t - 1),
            "1" * (t - 1) + "0" * t + "1" * t + "0" * (t + 1),
            "1" * (2 * t - 1) + "0" * (2 * t + 1),
        ]
    else:
        t = (n - 2) // 4
        anchors = [
            "100" + "1" * (2 * t - 1) + "0" * (2 * t),
            "1" * (t - 1) + "0" * t + "1" * (t + 1) + "0" * (t + 2),
            "1" * t + "0" * (t + 1) + "1" * t + "0" * (t + 1),
            "1" * (2 * t) + "0" * (2 * t + 2),
        ]
    out: set[str] = set()
    for a in anchors:
        out |= rotation_closure(a)
    return 2 * h, out
