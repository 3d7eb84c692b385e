"""Partial-cube and median-graph checks for labelled hypercube subgraphs.

The isometry test compares graph distance with Hamming distance under the
given labelling. Two median tests are provided: the majority-rule closure,
which only decides the question for isometric subgraphs, and a direct count of
medians from the distance matrix, which is the ground truth.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .metrics import distance_matrix


@dataclass
class IsometryReport:
    n: int
    isometric: bool
    witness: tuple[str, str] | None = None
    witness_distance: int | None = None
    witness_hamming: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "isometric": self.isometric,
            "witness": list(self.witness) if self.witness else None,
            "witness_distance": self.witness_distance,
            "witness_hamming": self.witness_hamming,
        }


@dataclass
class MedianReport:
    n: int
    is_median_closed: bool | None = None
    is_median_graph: bool | None = None
    # majority closure only decides the median property on isometric subgraphs
    advisory_only: bool = False
    witness: tuple[str, str, str] | None = None
    witness_majority: str | None = None
    witness_median_count: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "is_median_closed": self.is_median_closed,
            "is_median_graph": self.is_median_graph,
            "advisory_only": self.advisory_only,
            "witness": list(self.witness) if self.witness else None,
            "witness_majority": self.witness_majority,
            "witness_median_count": self.witness_median_count,
        }


def _codes(g: Graph) -> np.ndarray:
    return np.array([int(v, 2) if v else 0 for v in g.vertices], dtype=np.int64)


def hamming_matrix(g: Graph) -> np.ndarray:
    codes = _codes(g)
    return np.bitwise_count(codes[:, None] ^ codes[None, :]).astype(np.int64)


def is_isometric_subgraph(g: Graph, dist: np.ndarray | None = None) -> IsometryReport:
    """Whether graph distance equals Hamming distance for every vertex pair.

    On failure the witness is the first failing pair (in vertex order) among
    those of smallest Hamming distance.
    """
    if dist is None:
        dist = distance_matrix(g)
    ham = hamming_matrix(g)
    bad = np.argwhere(np.triu(dist != ham, k=1))
    if len(bad) == 0:
        return IsometryReport(g.n, True)
    h = ham[bad[:, 0], bad[:, 1]]
    i, j = bad[np.flatnonzero(h == h.min())[0]]
    return IsometryReport(
        g.n, False, (g.vertices[i], g.vertices[j]), int(dist[i, j]), int(ham[i, j])
    )


def majority(u: str, v: str, w: str) -> str:
    """Coordinatewise two-out-of-three vote."""
    if not len(u) == len(v) == len(w):
        raise ValueError("majority needs words of equal length")
    return "".join("1" if (a + b + c).count("1") >= 2 else "0" for a, b, c in zip(u, v, w))


def is_median_closed(g: Graph, dist: np.ndarray | None = None) -> MedianReport:
    """Whether the majority of every vertex triple is again a vertex."""
    report = MedianReport(g.n)
    report.advisory_only = not is_isometric_subgraph(g, dist).isometric
    codes = _codes(g)
    lookup = {int(c): i for i, c in enumerate(codes)}
    members = np.sort(codes)
    m = len(codes)
    for i in range(m):
        for j in range(i, m):
            rest = codes[j:]
            maj = (codes[i] & codes[j]) | (codes[i] & rest) | (codes[j] & rest)
            pos = np.searchsorted(members, maj)
            pos[pos == m] = 0
            missing = np.flatnonzero(members[pos] != maj)
            if len(missing):
                k = j + int(missing[0])
                report.is_median_closed = False
                report.witness = (g.vertices[i], g.vertices[j], g.vertices[k])
                report.witness_majority = majority(*report.witness)
                assert int(report.witness_majority, 2) not in lookup
                return report
    report.is_median_closed = True
    return report


def median_count(dist: np.ndarray, i: int, j: int, k: int) -> int:
    """Number of vertices lying on shortest paths between each pair of i, j, k."""
    on_ij = dist[i] + dist[j] == dist[i, j]
    on_ik = dist[i] + dist[k] == dist[i, k]
    on_jk = dist[j] + dist[k] == dist[j, k]
    return int(np.count_nonzero(on_ij & on_ik & on_jk))


def is_median_graph(g: Graph, dist: np.ndarray | None = None) -> MedianReport:
    """Whether every vertex triple has exactly one median, from graph distances alone."""
    if dist is None:
        dist = distance_matrix(g)
    report = MedianReport(g.n)
    m = g.order
    # between[a, b, x]: x lies on a shortest a-b path
    between = dist[:, None, :] + dist[None, :, :] == dist[:, :, None]
    for i in range(m):
        for j in range(i, m):
            # counts[k] = #{x : x between i-j, i-k and j-k}
            common = between[i, j][None, :] & between[i, j:] & between[j, j:]
            counts = common.sum(axis=1)
            bad = np.flatnonzero(counts != 1)
            if len(bad):
                k = j + int(bad[0])
                report.is_median_graph = False
                report.witness = (g.vertices[i], g.vertices[j], g.vertices[k])
                report.witness_median_count = int(counts[bad[0]])
                return report
    report.is_median_graph = True
    return report
