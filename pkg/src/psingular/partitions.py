"""Partition combinatorics: hooks, rim hooks, p-cores and partition counting.

Cells are addressed 1-based as ``(row, column)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "Partition",
    "CoreWeight",
    "conjugate",
    "hook_lengths",
    "hook_multiset",
    "remove_rim_hook",
    "p_core_and_weight",
    "p_core_by_removal",
    "is_p_core",
    "partitions_of",
    "count_partitions",
    "p_cores_of_size",
    "first_p_core",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Being a tuple, equality, hashing and ordering come for free; tuple
    ordering of partitions of the same size is lexicographic, so reverse
    sorting gives reverse-lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,4,1"`` or the exponent shorthand ``"5,1^3"``.

        The empty string (or ``"()"``) is the empty partition.
        """
        text = text.strip().strip("()[]").strip()
        if not text:
            return cls(())
        parts = []
        for tok in re.split(r"\s*,\s*", text):
            if "^" in tok:
                base, exp = tok.split("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(tok))
        return cls(parts)


@dataclass(frozen=True)
class CoreWeight:
    core: Partition
    weight: int


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition(())
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def hook_lengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Hook length grid; ``grid[i][j]`` is the hook of cell ``(i+1, j+1)``."""
    conj = conjugate(lam)
    return tuple(
        tuple(row - j + conj[j] - i - 1 for j in range(row))
        for i, row in enumerate(lam)
    )


def hook_multiset(lam: Sequence[int]) -> list[int]:
    return sorted(h for row in hook_lengths(lam) for h in row)


def remove_rim_hook(lam: Sequence[int], cell: tuple[int, int]) -> Partition:
    """Delete the rim hook attached to ``cell`` by walking along the rim.

    The rim hook of ``(i, j)`` runs from the end of row ``i`` down to the
    bottom cell of column ``j``; each row it passes keeps only the cells
    strictly left of the rim.
    """
    i, j = cell
    lam = list(lam)
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} is not in the diagram of {tuple(lam)}")
    bottom = sum(1 for x in lam if x >= j)
    new = lam[:]
    for r in range(i, bottom):
        new[r - 1] = lam[r] - 1
    new[bottom - 1] = j - 1
    return Partition(new)


def _beta_set(lam: Sequence[int], t: int) -> list[int]:
    padded = list(lam) + [0] * (t - len(lam))
    return [padded[i] + t - 1 - i for i in range(t)]


def _from_beta_set(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    t = len(beta)
    return Partition(beta[i] - (t - 1 - i) for i in range(t))


def p_core_and_weight(lam: Sequence[int], p: int) -> CoreWeight:
    """p-core and p-weight via the abacus.

    The beta-set has the least size ``t >= len(lam)`` divisible by ``p``;
    beads on each runner are slid to the lowest free positions.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    t = -(-len(lam) // p) * p
    beta = _beta_set(lam, t)
    counts = [0] * p
    for b in beta:
        counts[b % p] += 1
    core_beta = [r + p * k for r in range(p) for k in range(counts[r])]
    moved = sum(beta) - sum(core_beta)
    return CoreWeight(_from_beta_set(core_beta), moved // p)


def p_core_by_removal(lam: Sequence[int], p: int, rng=None) -> CoreWeight:
    """Reference p-core: strip p-rim hooks until none remain.

    With ``rng`` (a ``random.Random``) the hook to remove is chosen at
    random at each step, otherwise the first one in row-major order.
    """
    lam = Partition(lam)
    weight = 0
    while True:
        cells = [
            (i + 1, j + 1)
            for i, row in enumerate(hook_lengths(lam))
            for j, h in enumerate(row)
            if h == p
        ]
        if not cells:
            return CoreWeight(lam, weight)
        cell = rng.choice(cells) if rng is not None else cells[0]
        lam = remove_rim_hook(lam, cell)
        weight += 1


def is_p_core(lam: Sequence[int], p: int) -> bool:
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(h % p for row in hook_lengths(lam) for h in row)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, from ``(n)``."""
    if n < 0:
        return
    if n == 0:
        yield Partition(())
        return
    # Classic successor: decrement the last part > 1, redistribute the tail.
    parts = [n]
    while True:
        yield Partition(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        k = parts.pop() - 1
        rest = ones + 1
        parts.append(k)
        while rest > k:
            parts.append(k)
            rest -= k
        if rest:
            parts.append(rest)


_PARTITION_COUNTS = [1]


def count_partitions(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    table = _PARTITION_COUNTS
    while len(table) <= n:
        m = len(table)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table.append(total)
    return table[n]


def p_cores_of_size(m: int, p: int) -> list[Partition]:
    """Every p-core of size ``m``, in reverse-lexicographic order."""
    return [lam for lam in partitions_of(m) if is_p_core(lam, p)]


@lru_cache(maxsize=None)
def first_p_core(m: int, p: int) -> Partition | None:
    """Reverse-lexicographically first p-core of size ``m``.

    Same answer as ``p_cores_of_size(m, p)[0]`` but searches depth-first
    with pruning, so it stays fast for sizes where enumerating every
    partition is out of reach. Once part ``i+1`` is fixed, the hooks of
    all cells in columns beyond it are final; any multiple of ``p`` among
    them kills the branch.
    """
    if m == 0:
        return Partition(())

    parts: list[int] = []

    def settled_ok(nxt: int) -> bool:
        # Columns nxt+1 .. parts[-1] can no longer grow.
        height = len(parts)
        for col in range(parts[-1], nxt, -1):
            while parts[height - 1] < col:
                height -= 1
            for r in range(height):
                if (parts[r] - col + height - r) % p == 0:
                    return False
        return True

    def search(remaining: int, cap: int) -> bool:
        if remaining == 0:
            return settled_ok(0)
        for x in range(min(cap, remaining), 0, -1):
            if parts and not settled_ok(x):
                continue
            parts.append(x)
            if search(remaining - x, x):
                return True
            parts.pop()
        return False

    return Partition(parts) if search(m, m) else None
