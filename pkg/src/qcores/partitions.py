"""Brute-force ground truth for t-core counts.

Partitions are enumerated exhaustively, hook numbers are read off the
Ferrers-Young diagram via the conjugate shape, and counts are produced by
filtering.  Nothing here touches the series engine, so agreement between the
two sides is a real cross-check rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A nonincreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, exactly once each, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # Find the rightmost part > 1, shrink it, and redistribute the rest
        # greedily; when everything is 1 we are done.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rest = len(parts) - i
        parts[i] -= 1
        del parts[i + 1 :]
        while rest > 0:
            nxt = min(parts[-1], rest)
            parts.append(nxt)
            rest -= nxt


def hook_numbers(p: Partition) -> list[int]:
    """Hook number of every cell: arm + leg + 1, via the conjugate shape."""
    conj = p.conjugate().parts
    hooks = []
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            hooks.append((row - j) + (conj[j - 1] - i) + 1)
    return hooks


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no hook number is divisible by t."""
    if t < 1:
        raise ValueError(f"core size must be >= 1, got {t}")
    conj = p.conjugate().parts
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            if ((row - j) + (conj[j - 1] - i) + 1) % t == 0:
                return False
    return True


@lru_cache(maxsize=None)
def _core_count(t: int, n: int) -> int:
    return sum(1 for p in enumerate_partitions(n) if is_t_core(p, t))


def count_cores(t: int, n: int, pairs: bool = False) -> int:
    """Number of t-core partitions of n, or of t-core partition pairs
    (ordered, weights summing to n) when pairs is set."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if t < 1:
        raise ValueError(f"core size must be >= 1, got {t}")
    if not pairs:
        return _core_count(t, n)
    return sum(_core_count(t, j) * _core_count(t, n - j) for j in range(n + 1))
