"""Binary words, runs, and the membership predicates of the five string families.

A word is a plain ``str`` over ``'0'``/``'1'`` with b_1 leftmost; the empty
string is the null word. The same text form is used in the CLI and in JSON.
"""
from __future__ import annotations

import enum
from itertools import groupby
from typing import NamedTuple


class Family(str, enum.Enum):
    HYPERCUBE = "hypercube"
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    RUN_CONSTRAINED = "run_constrained"
    CIRCULAR_RUN_CONSTRAINED = "circular_run_constrained"

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @classmethod
    def from_letter(cls, letter: str) -> "Family":
        for fam, ch in _LETTERS.items():
            if ch == letter.upper():
                return fam
        raise ValueError(f"unknown family letter {letter!r}; expected one of Q, F, L, R, M")


_LETTERS = {
    Family.HYPERCUBE: "Q",
    Family.FIBONACCI: "F",
    Family.LUCAS: "L",
    Family.RUN_CONSTRAINED: "R",
    Family.CIRCULAR_RUN_CONSTRAINED: "M",
}


class Run(NamedTuple):
    symbol: int
    length: int


def check_word(s: str) -> str:
    if not isinstance(s, str) or s.strip("01"):
        raise ValueError(f"not a binary word: {s!r}")
    return s


def weight(s: str) -> int:
    return check_word(s).count("1")


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    check_word(a)
    check_word(b)
    return sum(x != y for x, y in zip(a, b))


def rotate(s: str, k: int) -> str:
    """Left rotation by k places: rotate("1100", 1) == "1001"."""
    if not s:
        return s
    k %= len(s)
    return s[k:] + s[:k]


def rotations(s: str) -> set[str]:
    return {rotate(s, k) for k in range(max(len(s), 1))}


def runs(s: str) -> list[Run]:
    """Maximal constant blocks of s, left to right."""
    if not s:
        raise ValueError("the null word has no runs")
    return [Run(int(ch), sum(1 for _ in grp)) for ch, grp in groupby(s)]


def circular_anchor(s: str) -> int:
    """Index of the first block boundary of the cyclic word, or 0 if s is constant."""
    for i in range(len(s)):
        if s[i] != s[i - 1]:
            return i
    return 0


def circular_runs(s: str) -> list[Run]:
    """Maximal blocks of the cyclic word.

    The listing starts at the first block boundary at or after position 1, so a
    block wrapping from b_n around to b_1 is reported once.
    """
    if not s:
        raise ValueError("the null word has no runs")
    return runs(rotate(s, circular_anchor(s)))


def _ones_followed_by_longer_zeros(blocks: list[Run], cyclic: bool) -> bool:
    m = len(blocks)
    for idx, (sym, length) in enumerate(blocks):
        if sym != 1:
            continue
        nxt = idx + 1
        if nxt == m:
            if not cyclic or m == 1:
                return False
            nxt = 0
        if blocks[nxt].length <= length:
            return False
    return True


def is_fibonacci(s: str) -> bool:
    return "11" not in s


def is_lucas(s: str) -> bool:
    return is_fibonacci(s) and not (s[:1] == "1" and s[-1:] == "1")


def is_run_constrained(s: str) -> bool:
    if not s:
        return True
    return _ones_followed_by_longer_zeros(runs(s), cyclic=False)


def is_circular_run_constrained(s: str) -> bool:
    if not s:
        return True
    return _ones_followed_by_longer_zeros(circular_runs(s), cyclic=True)


_PREDICATES = {
    Family.HYPERCUBE: lambda s: True,
    Family.FIBONACCI: is_fibonacci,
    Family.LUCAS: is_lucas,
    Family.RUN_CONSTRAINED: is_run_constrained,
    Family.CIRCULAR_RUN_CONSTRAINED: is_circular_run_constrained,
}


def is_member(family: Family | str, s: str) -> bool:
    """Whether s belongs to the given family. The null word belongs to every family."""
    return _PREDICATES[Family(family)](s)
