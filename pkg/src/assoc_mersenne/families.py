"""Vertex sets of the hypercube subfamilies.

Two independent routes produce each set: ``enumerate_family`` walks the binary
words of length n and keeps those passing the membership predicate, while
``build_R_recursive`` / ``build_M_recursive`` assemble the same sets from the
run decompositions. The bijection ``phi`` between circularly run-constrained
words and Lucas words also lives here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bitstring import Family, check_word, is_lucas, is_member, rotate, runs

MAX_N = 32
MAX_N_HYPERCUBE = 24


class VerificationError(AssertionError):
    """A structural claim that the construction relies on turned out false."""


class ExcludedStringError(ValueError):
    """Lucas word outside the image of phi (an alternating word of even length)."""


@dataclass(frozen=True)
class VertexSet:
    family: Family
    n: int
    members: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s) -> bool:
        return s in self.as_set()

    def as_set(self) -> frozenset[str]:
        return frozenset(self.members)

    def to_dict(self) -> dict:
        return {"family": self.family.value, "n": self.n, "members": list(self.members)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_range(family: Family | str, n: int) -> None:
    family = Family(family)
    cap = MAX_N_HYPERCUBE if family is Family.HYPERCUBE else MAX_N
    if not isinstance(n, int) or not 0 <= n <= cap:
        raise ValueError(f"n={n} outside 0..{cap} for {family.value}")


def _prefix_viable(p: str, n: int, family: Family) -> bool:
    # Necessary conditions only; the final membership test is what decides.
    if family is Family.HYPERCUBE:
        return True
    if family in (Family.FIBONACCI, Family.LUCAS):
        return not p.endswith("11")
    if p[-1] != "1":
        return True
    blocks = runs(p)
    ones = blocks[-1].length
    if ones == 1 and len(blocks) >= 3 and blocks[-2].length <= blocks[-3].length:
        # a 1-run just got closed off by a 0-run that is too short
        return False
    room = n - len(p)
    if family is Family.CIRCULAR_RUN_CONSTRAINED:
        if blocks[0].symbol == 1:
            # the trailing ones may wrap onto the leading ones
            return True
        room += blocks[0].length
    return room >= ones + 1


def _generate(family: Family, n: int) -> list[str]:
    level = [""]
    for _ in range(n):
        level = [p + b for p in level for b in "01" if _prefix_viable(p + b, n, family)]
    return [s for s in level if is_member(family, s)]


@lru_cache(maxsize=64)
def _enumerate_cached(family: Family, n: int) -> VertexSet:
    if family is Family.CIRCULAR_RUN_CONSTRAINED and n == 0:
        # the graph on zero vertices; order M_0 = 0
        return VertexSet(family, 0, ())
    return VertexSet(family, n, tuple(_generate(family, n)))


def enumerate_family(family: Family | str, n: int) -> VertexSet:
    """All words of length n in the family, by direct test of the definition."""
    family = Family(family)
    check_range(family, n)
    return _enumerate_cached(family, n)


def rotation_closure(alpha: str, inserts: Iterable[str] = ("",)) -> set[str]:
    """All cyclic placements of alpha around each inserted word.

    For alpha = a_1..a_t this is { a_i..a_t s a_1..a_{i-1} : i = 1..t, s in inserts }.
    With the default insert (the null word) it is the set of rotations of alpha.
    """
    check_word(alpha)
    if not alpha:
        raise ValueError("alpha must be non-empty")
    inserts = list(inserts)
    return {alpha[i:] + s + alpha[:i] for i in range(len(alpha)) for s in inserts}


@lru_cache(maxsize=None)
def _R_words(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("",)
    if n == 1:
        return ("0",)
    out: list[str] = []
    for i in range((n + 1) // 2):
        head = "1" * i + "0" * (i + 1)
        out.extend(head + w for w in _R_words(n - 2 * i - 1))
    if len(set(out)) != len(out):
        raise VerificationError(f"run decomposition of R_{n} has overlapping blocks")
    return tuple(out)


def R_words(n: int) -> tuple[str, ...]:
    """Run-constrained words of length n via the recursive decomposition; R_0 = {λ}."""
    if n < 0:
        raise ValueError("negative length")
    return _R_words(n)


def build_R_recursive(n: int) -> VertexSet:
    if n < 1:
        raise ValueError("n must be at least 1")
    check_range(Family.RUN_CONSTRAINED, n)
    return VertexSet(Family.RUN_CONSTRAINED, n, R_words(n))


def M_blocks(n: int) -> list[set[str]]:
    """Rotation blocks of M_n: block i holds the placements of 1^i 0^(i+1) around R_(n-2i-1).

    Raises VerificationError if two blocks share a word or a block has fewer
    than (2i+1)|R_(n-2i-1)| distinct words.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    blocks = []
    seen: set[str] = set()
    for i in range((n + 1) // 2):
        inner = R_words(n - 2 * i - 1)
        block = rotation_closure("1" * i + "0" * (i + 1), inner)
        if len(block) != (2 * i + 1) * len(inner):
            raise VerificationError(f"block {i} of M_{n} has coinciding placements")
        if seen & block:
            raise VerificationError(f"block {i} of M_{n} overlaps an earlier block")
        seen |= block
        blocks.append(block)
    return blocks


def build_M_recursive(n: int) -> VertexSet:
    check_range(Family.CIRCULAR_RUN_CONSTRAINED, n)
    if n == 0:
        return VertexSet(Family.CIRCULAR_RUN_CONSTRAINED, 0, ())
    members = set().union(*M_blocks(n))
    return VertexSet(Family.CIRCULAR_RUN_CONSTRAINED, n, tuple(members))


def _one_run_start(s: str) -> int | None:
    for k in range(len(s)):
        if s[k] == "1" and s[k - 1] == "0":
            return k
    return None


def phi(s: str) -> str:
    """Map a circularly run-constrained word to a Lucas word.

    Each circular factor 1^i 0^(i+1) becomes (10)^i 0; lone zeros stay put.
    """
    check_word(s)
    if not s or not is_member(Family.CIRCULAR_RUN_CONSTRAINED, s):
        raise ValueError(f"{s!r} is not circularly run-constrained")
    k = _one_run_start(s)
    if k is None:
        return s
    parts = []
    blocks = runs(rotate(s, k))
    for idx in range(0, len(blocks), 2):
        ones = blocks[idx].length
        zeros = blocks[idx + 1].length
        parts.append("10" * ones + "0" * (zeros - ones))
    return rotate("".join(parts), -k)


def phi_inverse(s: str) -> str:
    """Inverse of ``phi``: each circular factor (10)^i 0 goes back to 1^i 0^(i+1)."""
    check_word(s)
    n = len(s)
    if n == 0 or not is_lucas(s):
        raise ValueError(f"{s!r} is not a Lucas word")
    if "1" not in s:
        return s
    k = next((j for j in range(n) if s[j] == "1" and s[j - 1] == "0" and s[j - 2] == "0"), None)
    if k is None:
        raise ExcludedStringError(f"{s!r} is alternating and has no preimage")
    t = rotate(s, k)
    out = []
    pos = 0
    while pos < n:
        if t[pos] == "0":
            out.append("0")
            pos += 1
            continue
        i = 0
        while t.startswith("10", pos):
            i += 1
            pos += 2
        if pos >= n or t[pos] != "0":
            raise VerificationError(f"factorisation of {s!r} broke at position {pos}")
        out.append("1" * i + "0" * (i + 1))
        pos += 1
    return rotate("".join(out), -k)


def alternating_pair(n: int) -> set[str]:
    """The two alternating words of even length n, empty for odd n."""
    if n % 2 or n == 0:
        return set()
    return {"10" * (n // 2), "01" * (n // 2)}


def lucas_restricted(n: int) -> VertexSet:
    """Lucas words of length n minus the two alternating words when n is even."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lucas = enumerate_family(Family.LUCAS, n)
    return VertexSet(Family.LUCAS, n, tuple(lucas.as_set() - alternating_pair(n)))
