"""p-adic data and closed-form derived lengths of Sylow subgroups.

Conventions at the degenerate edges: the trivial group has derived length
0 and a nontrivial abelian group has derived length 1.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "PadicExpansion",
    "DlRange",
    "is_prime",
    "primes_up_to",
    "padic_digits",
    "multiplicative_order",
    "dl_sylow_symmetric",
    "dl_sylow_gl",
    "dl_sylow_classical_p2",
    "mann_max_dl",
    "dl_upper_log",
    "dl_upper_log_e",
    "vp_factorial",
    "vp",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def vp(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicExpansion:
    n: int
    p: int
    digits: tuple[int, ...]  # least significant first

    @property
    def k(self) -> int:
        return len(self.digits) - 1


@dataclass(frozen=True)
class DlRange:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def padic_digits(n: int, p: int) -> PadicExpansion:
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    digits = []
    m = n
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return PadicExpansion(n, p, tuple(digits))


def multiplicative_order(a: int, m: int) -> int:
    """Least ``t >= 1`` with ``a**t == 1 (mod m)``."""
    from math import gcd

    if m < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    a %= m
    t, x = 1, a
    while x != 1:
        x = x * a % m
        t += 1
    return t


def dl_sylow_symmetric(n: int, p: int) -> int:
    """Derived length of a Sylow p-subgroup of S_n: the top p-adic index."""
    if n < p:
        return 0
    return padic_digits(n, p).k


def dl_sylow_gl(n: int, q: int, eps: int, p: int) -> int:
    """Derived length of a Sylow p-subgroup of GL_n(eps*q), p not dividing q.

    Odd p: with ``e`` the order of ``eps*q`` mod p and ``w = n // e``, the
    group is a product of ``C_{p^b} wr P_{p^i}`` and has derived length
    ``k + 1`` where ``k`` is the top p-adic index of ``w``. For p = 2 the
    same count runs on the 2-adic digits of ``n``; both possible shapes of
    the base group (wreath or semidihedral) have derived length 2, so no
    case split is needed.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if q % p == 0:
        raise ValueError("p divides q: use dl_upper_log_e in defining characteristic")
    if n < 1:
        raise ValueError("n must be positive")
    if p == 2:
        return padic_digits(n, 2).k + 1
    e = multiplicative_order(eps * q, p)
    w = n // e
    if w == 0:
        return 0
    return padic_digits(w, p).k + 1


_CLASSICAL_FAMILIES = ("SP", "SO_ODD", "SO_EVEN")


def dl_sylow_classical_p2(family: str, n: int, q: int) -> DlRange:
    """Derived length of a Sylow 2-subgroup of Sp_2n(q), O_2n+1(q), O^±_2n(q).

    ``k`` is the top binary index of ``2n``. The even orthogonal case is
    only pinned down to ``{k, k+1}``.
    """
    family = family.upper().replace("-", "_")
    if family not in _CLASSICAL_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if n < 1:
        raise ValueError("n must be positive")
    k = padic_digits(2 * n, 2).k
    if family == "SO_EVEN":
        return DlRange(k, k + 1)
    return DlRange(k + 1, k + 1)


def mann_max_dl(log_order: int) -> int:
    """Largest possible derived length of a p-group of order p**log_order.

    Mann: derived length ``k + 1`` forces ``log_order >= 2**k + 2k - 2``.
    """
    if log_order < 1:
        raise ValueError("log_order must be positive")
    k = 0
    while 2 ** (k + 1) + 2 * (k + 1) - 2 <= log_order:
        k += 1
    return k + 1


def dl_upper_log(n: int) -> int:
    """floor(log2 n) + 1, bound for p-subgroups of GL_n(F)."""
    if n < 1:
        raise ValueError("n must be positive")
    return n.bit_length()


def dl_upper_log_e(n: int, e: int) -> int:
    """floor(log2(n/e)) + 1, bound for p-subgroups of GL_n(q)."""
    if e < 1 or n < 1:
        raise ValueError("n and e must be positive")
    if e > n:
        raise ValueError("e must not exceed n")
    # floor(log2(n/e)) is the largest t with e * 2**t <= n
    t = 0
    while e << (t + 1) <= n:
        t += 1
    return t + 1


def vp_factorial(n: int, p: int) -> int:
    """Legendre: exponent of p in n!."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    m = n // p
    while m:
        total += m
        m //= p
    return total
