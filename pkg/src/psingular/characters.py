"""Character degrees of S_n and censuses of p-singular characters of S_n and A_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence

from .padic import vp, vp_factorial
from .partitions import Partition, conjugate, hook_lengths, partitions_of

__all__ = [
    "OrbitRecord",
    "OrbitCensus",
    "degree",
    "degree_p_valuation",
    "degrees_of",
    "census_sn",
    "census_an",
]


def degree(lam: Sequence[int]) -> int:
    """Hook length formula: |lam|! over the product of all hooks."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(sum(lam)) // prod


def degree_p_valuation(lam: Sequence[int], p: int) -> int:
    """Exponent of p in ``degree(lam)``, without forming the degree."""
    hooks = sum(vp(h, p) for row in hook_lengths(lam) for h in row)
    return vp_factorial(sum(lam), p) - hooks


@lru_cache(maxsize=64)
def degrees_of(n: int) -> tuple[tuple[Partition, int], ...]:
    """``(lam, degree(lam))`` for every partition of n, reverse-lex order.

    Cached per n and shared by every prime.
    """
    return tuple((lam, degree(lam)) for lam in partitions_of(n))


@dataclass(frozen=True)
class OrbitRecord:
    """One S_n-orbit of irreducible characters of A_n.

    ``PAIR``: {lam, lam'} restrict to the same irreducible character.
    ``SPLIT``: a self-conjugate lam whose restriction is a sum of two
    conjugate characters of half the degree.
    """

    label: tuple[Partition, ...]
    kind: str
    degree_sn: int
    p_singular_an: bool

    @property
    def degrees_an(self) -> tuple[int, ...]:
        if self.kind == "SPLIT":
            half = self.degree_sn // 2
            return (half, half)
        return (self.degree_sn,)

    def to_json(self) -> dict:
        return {
            "label": [str(x) for x in self.label],
            "kind": self.kind,
            "degree": str(self.degree_sn),
            "p_singular": self.p_singular_an,
        }


@dataclass
class OrbitCensus:
    n: int
    p: int
    np_sn: int
    np_an: int
    np_star_an: int
    cdp_sn: frozenset
    records: list[OrbitRecord] = field(default_factory=list)

    @property
    def cdp_an(self) -> frozenset:
        """Degrees of the p-singular irreducible characters of A_n."""
        return frozenset(r.degrees_an[0] for r in self.records if r.p_singular_an)

    @property
    def aut_caveat(self) -> bool:
        # Aut(A_6) is bigger than S_6; orbit counts here are S_6-orbits.
        return self.n == 6

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "np_sn": self.np_sn,
            "np_an": self.np_an,
            "np_star_an": self.np_star_an,
            "cdp_sn": [str(d) for d in sorted(self.cdp_sn)],
            "aut_caveat": self.aut_caveat,
            "records": [r.to_json() for r in self.records],
        }


def census_sn(n: int, p: int) -> tuple[int, frozenset]:
    """Number of p-singular irreducible characters of S_n and their degrees."""
    degs = [d for _, d in degrees_of(n) if d % p == 0]
    return len(degs), frozenset(degs)


@lru_cache(maxsize=64)
def _orbits(n: int) -> tuple[tuple[tuple[Partition, ...], str, int], ...]:
    # S_n-orbits on Irr(A_n), independent of p
    out = []
    for lam, d in degrees_of(n):
        conj = conjugate(lam)
        if conj == lam:
            out.append(((lam,), "SPLIT", d))
        elif lam > conj:
            out.append(((lam, conj), "PAIR", d))
    return tuple(out)


def census_an(n: int, p: int) -> OrbitCensus:
    if n < 5:
        raise ValueError("A_n is simple only for n >= 5")
    records = []
    np_an = 0
    for label, kind, d in _orbits(n):
        if kind == "SPLIT":
            singular = (d // 2) % p == 0
            np_an += 2 * singular
        else:
            singular = d % p == 0
            np_an += singular
        records.append(OrbitRecord(label, kind, d, singular))
    np_sn, cdp_sn = census_sn(n, p)
    return OrbitCensus(
        n=n,
        p=p,
        np_sn=np_sn,
        np_an=np_an,
        np_star_an=sum(r.p_singular_an for r in records),
        cdp_sn=cdp_sn,
        records=records,
    )
