import math

import pytest
from hypothesis import given, strategies as st

from psingular.padic import (
    DlRange,
    dl_sylow_classical_p2,
    dl_sylow_gl,
    dl_sylow_symmetric,
    dl_upper_log,
    dl_upper_log_e,
    is_prime,
    mann_max_dl,
    multiplicative_order,
    padic_digits,
    primes_up_to,
    vp,
    vp_factorial,
)


def test_digits_examples():
    e = padic_digits(9, 2)
    assert e.digits == (1, 0, 0, 1) and e.k == 3
    e = padic_digits(26, 5)
    assert e.digits == (1, 0, 1) and e.k == 2
    for p in (2, 3, 7):
        assert padic_digits(p, p).digits == (0, 1)
    with pytest.raises(ValueError):
        padic_digits(0, 2)
    with pytest.raises(ValueError):
        padic_digits(5, 4)


@given(st.integers(1, 10**6), st.sampled_from(primes_up_to(50)))
def test_digits_reconstruct(n, p):
    e = padic_digits(n, p)
    assert sum(a * p**i for i, a in enumerate(e.digits)) == n
    assert e.digits[-1] != 0
    assert all(0 <= a < p for a in e.digits)
    assert p**e.k <= n < p ** (e.k + 1)


def test_symmetric_examples():
    assert dl_sylow_symmetric(9, 2) == 3
    assert dl_sylow_symmetric(5, 3) == 1
    assert dl_sylow_symmetric(4, 5) == 0


def test_gl_examples():
    assert dl_sylow_gl(6, 2, 1, 3) == 2
    assert dl_sylow_gl(4, 3, 1, 2) == 3
    # order of 4 mod 5 is 2, so w = 1 and the Sylow subgroup is cyclic
    assert multiplicative_order(4, 5) == 2
    assert dl_sylow_gl(2, 4, 1, 5) == 1
    with pytest.raises(ValueError):
        dl_sylow_gl(4, 9, 1, 3)
    with pytest.raises(ValueError):
        dl_sylow_gl(4, 5, 0, 3)


def test_classical_examples():
    # 2n = 8 = 2^3, so k = 3 and dl = k + 1
    assert dl_sylow_classical_p2("SP", 4, 3) == DlRange(4, 4)
    assert dl_sylow_classical_p2("SO_EVEN", 4, 3) == DlRange(3, 4)
    # Sp_2(3) = SL_2(3) has quaternion Sylow 2-subgroups, dl 2
    assert dl_sylow_classical_p2("SP", 1, 3) == DlRange(2, 2)
    assert dl_sylow_classical_p2("so-odd", 3, 5).exact
    assert not dl_sylow_classical_p2("SO_EVEN", 3, 5).exact
    with pytest.raises(ValueError):
        dl_sylow_classical_p2("SP", 2, 4)
    with pytest.raises(ValueError):
        dl_sylow_classical_p2("SU", 2, 3)


def test_mann_examples():
    assert mann_max_dl(7) == 3
    assert mann_max_dl(1) == 1
    assert mann_max_dl(46) == 6
    assert mann_max_dl(15) == 4


@given(st.integers(1, 5000))
def test_mann_is_extremal(L):
    d = mann_max_dl(L)
    k = d - 1
    assert 2**k + 2 * k - 2 <= L
    assert 2 ** (k + 1) + 2 * (k + 1) - 2 > L
    # the weaker form used for nonabelian groups
    if d >= 2:
        assert d <= 1 + math.log2(L)


def test_log_bounds():
    assert dl_upper_log(1) == 1
    assert dl_upper_log(26) == 5
    assert dl_upper_log(248) == 8
    assert dl_upper_log_e(26, 1) == 5
    assert dl_upper_log_e(8, 2) == 3
    for n in range(1, 30):
        assert dl_upper_log_e(n, n) == 1
        assert dl_upper_log(n) == math.floor(math.log2(n)) + 1
    with pytest.raises(ValueError):
        dl_upper_log_e(3, 4)


def test_vp_factorial():
    assert vp_factorial(9, 2) == 7
    assert vp_factorial(9, 3) == 4
    assert vp_factorial(0, 5) == 0
    for n in range(0, 60):
        for p in (2, 3, 5, 7):
            assert vp_factorial(n, p) == vp(math.factorial(n), p)


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and is_prime(97) and not is_prime(91)


def test_symmetric_within_mann_and_log():
    for n in range(1, 201):
        for p in primes_up_to(50):
            dl = dl_sylow_symmetric(n, p)
            assert dl <= mann_max_dl(vp_factorial(n, p)) if n >= p else dl == 0
            if n >= p:
                assert p**dl <= n


def test_gl_within_log_e_bound():
    for p in primes_up_to(30)[1:]:
        for q in range(2, 21):
            if q % p == 0:
                continue
            for eps in (1, -1):
                e = multiplicative_order(eps * q, p)
                for n in range(e, 61):
                    assert dl_sylow_gl(n, q, eps, p) <= dl_upper_log_e(n, e)
