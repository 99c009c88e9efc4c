"""p-blocks of symmetric groups (Nakayama) with defects, heights and block statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .characters import degree_p_valuation, degrees_of
from .padic import dl_sylow_symmetric, vp_factorial
from .partitions import Partition, p_core_and_weight

__all__ = [
    "Block",
    "BlockStats",
    "BlockReport",
    "blocks_symmetric",
    "character_height",
    "block_stats",
    "check_block_bounds",
]


@dataclass(frozen=True)
class Block:
    n: int
    p: int
    core: Partition
    weight: int
    a: int
    d: int
    members: tuple[Partition, ...]

    @property
    def defect(self) -> int:
        return self.d


@dataclass(frozen=True)
class BlockStats:
    np_B: int
    cd_B: frozenset
    heights: frozenset
    mh_B: float  # math.inf when every height is zero


@dataclass
class BlockReport:
    block: Block
    stats: BlockStats
    dl_D: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        b, s = self.block, self.stats
        return {
            "core": str(b.core),
            "weight": b.weight,
            "defect": b.d,
            "a": b.a,
            "members": len(b.members),
            "np_B": s.np_B,
            "cd_B_size": len(s.cd_B),
            "heights": sorted(s.heights),
            "mh_B": None if s.mh_B == math.inf else s.mh_B,
            "dl_D": self.dl_D,
            "checks": dict(self.checks),
        }


def blocks_symmetric(n: int, p: int) -> list[Block]:
    """Group the partitions of n by p-core.

    Blocks come out sorted by core size, then reverse-lex on the core, so
    the principal (smallest core) block is first.
    """
    a = vp_factorial(n, p)
    groups: dict[Partition, list[Partition]] = {}
    weights: dict[Partition, int] = {}
    for lam, _ in degrees_of(n):
        cw = p_core_and_weight(lam, p)
        groups.setdefault(cw.core, []).append(lam)
        weights[cw.core] = cw.weight
    out = []
    for core in sorted(groups, key=lambda c: (c.size, tuple(-x for x in c))):
        w = weights[core]
        out.append(Block(n, p, core, w, a, vp_factorial(p * w, p), tuple(groups[core])))
    return out


def character_height(lam, p: int) -> int:
    """Height from ``nu_p(chi(1)) = a - d + he``."""
    lam = Partition(lam)
    n = lam.size
    w = p_core_and_weight(lam, p).weight
    a = vp_factorial(n, p)
    d = vp_factorial(p * w, p)
    return degree_p_valuation(lam, p) - (a - d)


def _heights(b: Block) -> list[int]:
    base = b.a - b.d
    return [degree_p_valuation(lam, b.p) - base for lam in b.members]


def block_stats(b: Block) -> BlockStats:
    degs = dict(degrees_of(b.n))
    heights = _heights(b)
    positive = [h for h in heights if h > 0]
    return BlockStats(
        np_B=len(positive),
        cd_B=frozenset(degs[lam] for lam in b.members),
        heights=frozenset(heights),
        mh_B=min(positive) if positive else math.inf,
    )


def check_block_bounds(b: Block) -> BlockReport:
    """Check the derived-length bounds and Brauer height zero on one block.

    The defect group is a Sylow p-subgroup of S_{pw}, so its derived
    length is ``dl_sylow_symmetric(p*w, p)``.
    """
    stats = block_stats(b)
    dl = dl_sylow_symmetric(b.p * b.weight, b.p) if b.weight else 0
    checks = {
        "bhz": (stats.np_B == 0) == (b.weight < b.p),
        "dl_le_np1": dl <= stats.np_B + 1,
        "dl_le_heights": dl <= len(stats.heights),
    }
    return BlockReport(b, stats, dl, checks)
