import pytest
from hypothesis import given, strategies as st

from psingular.padic import primes_up_to, vp
from psingular.partitions import Partition, partitions_of
from psingular.unipotent import (
    SMALL_GL_EVEN_UNIPOTENT,
    CyclotomicContext,
    cyclotomic_eval,
    d_p,
    is_prime_power,
    lemma44_families,
    order_mod,
    p_singular_unipotent_degrees,
    phi_p_valuation,
    unipotent_degree_gl,
    verify_lemma44,
)

PRIME_POWERS = [q for q in range(2, 10) if is_prime_power(q)]


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def test_cyclotomic_examples():
    assert cyclotomic_eval(1, 5) == 4
    assert cyclotomic_eval(6, 2) == 3
    assert cyclotomic_eval(12, 2) == 13
    with pytest.raises(ValueError):
        cyclotomic_eval(0, 2)


def test_order_examples():
    assert order_mod(2, 7) == 3
    assert order_mod(3, 4) == 2
    for q in (3, 5, 9, 11):
        assert order_mod(q, 2) == 1
    with pytest.raises(ValueError):
        order_mod(6, 4)


def test_context():
    c = CyclotomicContext(3, 2, -1)
    assert c.d == 2 and c.e == 1
    assert d_p(3, 2) == 2 and d_p(5, 2) == 1


def test_phi_valuation_examples():
    assert phi_p_valuation(3, 2, 7) == 1
    assert phi_p_valuation(21, 2, 7) == 1
    assert phi_p_valuation(5, 2, 7) == 0
    with pytest.raises(ValueError):
        phi_p_valuation(3, 14, 7)
    with pytest.raises(ValueError):
        phi_p_valuation(3, 3, 2)


def test_prime_power():
    assert [q for q in range(1, 20) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]


def test_unipotent_examples():
    assert unipotent_degree_gl((2, 1), 2, 1).value == 6
    for n in range(1, 13):
        for q in PRIME_POWERS:
            for eps in (1, -1):
                assert unipotent_degree_gl((n,), q, eps).value == 1
                steinberg = unipotent_degree_gl((1,) * n, q, eps)
                assert steinberg.value == q ** (n * (n - 1) // 2)


def test_unipotent_integral_positive():
    for n in range(1, 13):
        for lam in partitions_of(n):
            for q in PRIME_POWERS:
                r = next(x for x in range(2, q + 1) if q % x == 0)
                f = vp(q, r)
                for eps in (1, -1):
                    u = unipotent_degree_gl(lam, q, eps)
                    assert u.value > 0
                    assert vp(u.value, r) == f * u.q_exponent


@given(st.integers(1, 40), st.integers(2, 20))
def test_cyclotomic_product(m, q):
    prod = 1
    for d in _divisors(m):
        prod *= cyclotomic_eval(d, q)
    assert prod == q**m - 1


@pytest.mark.parametrize("p", primes_up_to(30)[1:])
def test_odd_divisibility_law(p):
    for q in range(2, 21):
        if q % p == 0:
            continue
        d = order_mod(q, p)
        for m in range(1, 61):
            v = vp(cyclotomic_eval(m, q), p)
            t = m // d
            shape = m % d == 0 and _is_power(t, p)
            assert (v > 0) == shape
            if shape and t > 1:
                assert v == 1
            assert phi_p_valuation(m, q, p) == v


def _is_power(t, p):
    while t % p == 0:
        t //= p
    return t == 1


def test_lemma44_families_examples():
    assert lemma44_families(3, 2) == [(7, 2), (5, 4), (6, 2, 1)]
    assert lemma44_families(2, 3) == [(6, 2), (5, 3), (5, 2, 1), (4, 2, 1, 1)]
    assert lemma44_families(5, 1) == [(3, 2), (2, 2, 1)]
    with pytest.raises(ValueError):
        lemma44_families(2, 2)
    with pytest.raises(ValueError):
        lemma44_families(3, 1)


@pytest.mark.parametrize("p,k", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)])
def test_families_shape(p, k):
    fam = lemma44_families(p, k)
    assert len(fam) == k + 1 == len(set(fam))
    assert all(Partition(lam).size == p**k for lam in fam)


def test_verify_lemma44_examples():
    r = verify_lemma44(3, 2, 4, 1)
    assert r.passed and len(r.degrees) == 3
    r = verify_lemma44(2, 3, 3, 1)
    assert r.passed and len({v for _, v in r.degrees}) == 4
    assert verify_lemma44(3, 2, 2, -1).passed
    with pytest.raises(ValueError):
        verify_lemma44(3, 2, 5, 1)
    with pytest.raises(ValueError):
        verify_lemma44(3, 2, 10, 1)


def test_small_gl_even_unipotent():
    for q in (3, 5, 7, 9):
        for eps in (1, -1):
            assert len(p_singular_unipotent_degrees(4, q, eps, 2)) == SMALL_GL_EVEN_UNIPOTENT[4]
            for n in (5, 6, 7):
                assert len(p_singular_unipotent_degrees(n, q, eps, 2)) >= SMALL_GL_EVEN_UNIPOTENT[n]
