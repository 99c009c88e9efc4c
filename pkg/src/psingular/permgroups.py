"""A small exact permutation group engine.

Permutations are tuples of images on ``0..N-1`` and act on the right:
``x^(gh) = (x^g)^h``. Externally they are written 1-based, e.g.
``"[2,1,4,3]"``.

The stabilizer chain is built by Knuth's deterministic incremental
Schreier-Sims: every Schreier generator is sifted, and a new base point is
the first point moved by the element that needs it. That is plenty for the
p-groups of degree <= 48 this is used on.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .padic import padic_digits

__all__ = [
    "Perm",
    "PermGroup",
    "identity",
    "mul",
    "inverse",
    "commutator",
    "is_identity",
    "sign",
    "format_perm",
    "parse_perm",
    "sylow_sn_generators",
    "even_part",
    "group_order",
    "derived_subgroup",
    "derived_series",
    "derived_length",
]

MAX_DEGREE = 48

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(g: Perm, h: Perm) -> Perm:
    """``g`` then ``h``."""
    return tuple(h[x] for x in g)


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def commutator(a: Perm, b: Perm) -> Perm:
    """``a^-1 b^-1 a b``."""
    return mul(mul(inverse(a), inverse(b)), mul(a, b))


def is_identity(g: Perm) -> bool:
    return all(i == x for i, x in enumerate(g))


def sign(g: Perm) -> int:
    seen = [False] * len(g)
    parity = 0
    for i in range(len(g)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def format_perm(g: Perm) -> str:
    return json.dumps([x + 1 for x in g], separators=(",", ":"))


def parse_perm(text: str) -> Perm:
    images = [int(x) - 1 for x in json.loads(text)]
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"not a permutation: {text}")
    return tuple(images)


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[Perm] = []
        # orbit point -> coset rep u with point^u == orbit point
        self.transversal: dict[int, Perm] = {point: identity(n)}


class PermGroup:
    """Permutation group on ``degree`` points with a lazily built BSGS."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        if degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} exceeds the engine cap {MAX_DEGREE}")
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
            if not is_identity(g):
                gens.append(g)
        self.generators: list[Perm] = gens
        self._levels: list[_Level] | None = None

    # -- stabilizer chain -------------------------------------------------
    @property
    def levels(self) -> list[_Level]:
        if self._levels is None:
            self._levels = []
            for g in self.generators:
                self._add(0, g)
        return self._levels

    def _sift(self, g: Perm, start: int) -> Perm:
        for lvl in self._levels[start:]:
            u = lvl.transversal.get(g[lvl.point])
            if u is None:
                return g
            g = mul(g, inverse(u))
        return g

    def _add(self, i: int, g: Perm) -> None:
        # Knuth's A_i: make g a member of the group stored at levels >= i.
        if is_identity(self._sift(g, i)):
            return
        levels = self._levels
        if i == len(levels):
            moved = next(x for x in range(self.degree) if g[x] != x)
            levels.append(_Level(moved, self.degree))
        lvl = levels[i]
        lvl.gens.append(g)
        for u in list(lvl.transversal.values()):
            self._close(i, mul(u, g))

    def _close(self, i: int, tau: Perm) -> None:
        # Knuth's C_i: extend the orbit at level i, or push the Schreier
        # generator tau * rep^-1 one level down.
        lvl = self._levels[i]
        trans = lvl.transversal
        stack = [tau]
        while stack:
            tau = stack.pop()
            y = tau[lvl.point]
            rep = trans.get(y)
            if rep is not None:
                sch = mul(tau, inverse(rep))
                if not is_identity(sch):
                    self._add(i + 1, sch)
            else:
                trans[y] = tau
                for deeper in self._levels[i:]:
                    stack.extend(mul(tau, r) for r in deeper.gens)

    # -- queries ----------------------------------------------------------
    def order(self) -> int:
        total = 1
        for lvl in self.levels:
            total *= len(lvl.transversal)
        return total

    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def contains(self, g: Sequence[int]) -> bool:
        self.levels
        return is_identity(self._sift(tuple(g), 0))

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def is_trivial(self) -> bool:
        return not self.generators

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    def add_generator(self, g: Sequence[int]) -> bool:
        """Add ``g`` if it is not already a member; report whether it was new."""
        g = tuple(g)
        if self.contains(g):
            return False
        self.generators.append(g)
        self._add(0, g)
        return True

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def group_order(g: PermGroup) -> int:
    return g.order()


def _tower_generators(start: int, depth: int, p: int, n: int) -> list[Perm]:
    """Generators of the iterated wreath product C_p wr ... wr C_p (depth
    times) on points ``start .. start + p**depth - 1``.

    Generator ``l`` cycles the first ``p`` consecutive blocks of size
    ``p**(l-1)``.
    """
    gens = []
    for level in range(1, depth + 1):
        block = p ** (level - 1)
        img = list(range(n))
        for x in range(p * block):
            q, r = divmod(x, block)
            img[start + x] = start + ((q + 1) % p) * block + r
        gens.append(tuple(img))
    return gens


def sylow_sn_generators(n: int, p: int) -> PermGroup:
    """Sylow p-subgroup of S_n as a product of wreath towers on disjoint blocks."""
    if p > n:
        raise ValueError("p must not exceed n")
    digits = padic_digits(n, p).digits
    gens = []
    start = 0
    for i in range(len(digits) - 1, -1, -1):
        for _ in range(digits[i]):
            gens.extend(_tower_generators(start, i, p, n))
            start += p**i
    return PermGroup(n, gens)


def even_part(g: PermGroup) -> PermGroup:
    """Intersection with the alternating group (kernel of the sign map).

    Schreier generators for the transversal ``{1, t}``, ``t`` the first odd
    generator: even generators and their ``t``-conjugates, ``t*s`` and
    ``s*t^-1`` for odd ``s``.
    """
    gens = g.generators
    odd = [s for s in gens if sign(s) == -1]
    if not odd:
        return PermGroup(g.degree, gens)
    t = odd[0]
    t_inv = inverse(t)
    new = []
    for s in gens:
        if sign(s) == 1:
            new.append(s)
            new.append(mul(mul(t, s), t_inv))
        else:
            new.append(mul(t, s))
            new.append(mul(s, t_inv))
    return PermGroup(g.degree, new)


def derived_subgroup(g: PermGroup) -> PermGroup:
    """Normal closure in ``g`` of the commutators of its generators."""
    gens = g.generators
    h = PermGroup(g.degree)
    h._levels = []
    queue = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = commutator(a, b)
            if not is_identity(c) and h.add_generator(c):
                queue.append(c)
    while queue:
        c = queue.pop()
        for s in gens:
            conj = mul(mul(inverse(s), c), s)
            if h.add_generator(conj):
                queue.append(conj)
    return h


def derived_series(g: PermGroup) -> list[PermGroup]:
    series = [g]
    while not series[-1].is_trivial():
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            raise ValueError("group is not solvable: derived series stabilizes")
        series.append(nxt)
    return series


def derived_length(g: PermGroup) -> int:
    return len(derived_series(g)) - 1
