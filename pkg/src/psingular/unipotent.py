"""Cyclotomic values, orders mod p, and unipotent degrees of GL_n(eps*q)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .padic import is_prime, multiplicative_order, vp
from .partitions import Partition, hook_lengths, partitions_of

__all__ = [
    "CyclotomicContext",
    "UnipotentDegree",
    "cyclotomic_eval",
    "order_mod",
    "d_p",
    "phi_p_valuation",
    "unipotent_degree_gl",
    "lemma44_families",
    "verify_lemma44",
    "is_prime_power",
    "Lemma44Report",
    "SMALL_GL_EVEN_UNIPOTENT",
    "p_singular_unipotent_degrees",
]


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for r in range(2, q + 1):
        if q % r == 0:
            while q % r == 0:
                q //= r
            return q == 1
    return False


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=4096)
def cyclotomic_eval(m: int, q: int) -> int:
    """Phi_m(q) = (q^m - 1) / prod of Phi_d(q) over proper divisors d of m."""
    if m < 1:
        raise ValueError("m must be positive")
    if q < 2:
        raise ValueError("q must be at least 2")
    val = q**m - 1
    for d in _divisors(m)[:-1]:
        val, rem = divmod(val, cyclotomic_eval(d, q))
        assert rem == 0
    return val


def order_mod(q: int, m: int) -> int:
    return multiplicative_order(q, m)


def d_p(q: int, p: int) -> int:
    """Order of q mod p for odd p, order of q mod 4 for p = 2."""
    return order_mod(q, 4 if p == 2 else p)


@dataclass(frozen=True)
class CyclotomicContext:
    p: int
    q: int
    eps: int

    @property
    def d(self) -> int:
        return d_p(self.q, self.p)

    @property
    def e(self) -> int:
        return order_mod(self.eps * self.q, self.p)


def phi_p_valuation(m: int, q: int, p: int) -> int:
    """Exponent of the odd prime p in Phi_m(q), from the divisibility law.

    Nonzero only for ``m = d * p**t`` with ``d`` the order of q mod p;
    equal to 1 when ``t > 0`` and to the exponent of p in ``q**d - 1``
    when ``t = 0``. Does not evaluate Phi_m(q).
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if q % p == 0:
        raise ValueError("p divides q")
    d = order_mod(q, p)
    if m % d:
        return 0
    t = m // d
    if t == 1:
        return vp(q**d - 1, p)
    while t % p == 0:
        t //= p
    return 1 if t == 1 else 0


@dataclass(frozen=True)
class UnipotentDegree:
    lam: Partition
    q_exponent: int
    value: int


def unipotent_degree_gl(lam: Sequence[int], q: int, eps: int) -> UnipotentDegree:
    """q-analogue hook formula for the unipotent character of GL_n(eps*q).

    ``q^i - eps^i`` equals ``|(eps*q)^i - 1|`` and is positive for q >= 2,
    so numerator and denominator are products of positive integers.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    lam = Partition(lam)
    n = lam.size
    nlam = sum(i * part for i, part in enumerate(lam))
    num = 1
    for i in range(1, n + 1):
        num *= q**i - eps**i
    den = 1
    for row in hook_lengths(lam):
        for h in row:
            den *= q**h - eps**h
    val, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"non-integral unipotent degree for {lam}")
    return UnipotentDegree(lam, nlam, q**nlam * val)


def lemma44_families(p: int, k: int) -> list[Partition]:
    """k+1 partitions of p^k with p-divisible unipotent degrees of distinct size."""
    if not is_prime(p) or k < 1:
        raise ValueError("need a prime p and k >= 1")
    N = p**k
    if p == 2:
        if N < 8:
            raise ValueError("p = 2 needs 2^k >= 8")
        fam = [Partition((N - 2**j - 1, 2**j + 1)) for j in range(k - 1)]
        fam += [Partition((N - 3, 2, 1)), Partition((N - 4, 2, 1, 1))]
    else:
        if N < 5:
            raise ValueError("odd p needs p^k >= 5")
        fam = [Partition((N - p**j - 1, p**j + 1)) for j in range(k)]
        fam.append(Partition((N - 3, 2, 1)))
    return fam


@dataclass
class Lemma44Report:
    p: int
    k: int
    q: int
    eps: int
    degrees: list[tuple[Partition, int]]
    all_divisible: bool
    distinct: bool

    @property
    def passed(self) -> bool:
        return self.all_divisible and self.distinct and len(self.degrees) >= self.k + 1


def verify_lemma44(p: int, k: int, q: int, eps: int) -> Lemma44Report:
    if not is_prime_power(q) or q % p == 0:
        raise ValueError(f"q = {q} must be a prime power prime to {p}")
    if (q - eps) % p:
        raise ValueError(f"{p} does not divide q - eps = {q - eps}")
    fam = lemma44_families(p, k)
    degs = [(lam, unipotent_degree_gl(lam, q, eps).value) for lam in fam]
    vals = [v for _, v in degs]
    return Lemma44Report(
        p, k, q, eps, degs,
        all_divisible=all(v % p == 0 for v in vals),
        distinct=len(set(vals)) == len(vals),
    )


def p_singular_unipotent_degrees(n: int, q: int, eps: int, p: int) -> set[int]:
    """Distinct unipotent degrees of GL_n(eps*q) divisible by p."""
    degs = (unipotent_degree_gl(lam, q, eps).value for lam in partitions_of(n))
    return {v for v in degs if v % p == 0}


# GL_n(eps*q), q odd: number of distinct even unipotent degrees is at
# least this for n = 5..7, while GL_4 has a single one.
SMALL_GL_EVEN_UNIPOTENT = {4: 1, 5: 3, 6: 3, 7: 3}
