import json
import math

import pytest
from hypothesis import given

from psingular.characters import census_an, census_sn, degree, degree_p_valuation, degrees_of
from psingular.padic import vp
from psingular.partitions import Partition, conjugate, partitions_of

from strategies import partitions, primes


def test_degree_examples():
    for n in range(1, 10):
        assert degree((n,)) == 1
    assert degree((2, 2)) == 2
    assert degree((5, 4)) == 42


def test_valuation_examples():
    assert degree_p_valuation((7,), 2) == 0
    assert degree_p_valuation((5, 4), 2) == 1
    assert degree_p_valuation((3, 1, 1), 2) == 1


def test_census_sn_examples():
    assert census_sn(4, 2) == (1, frozenset({2}))
    assert census_sn(5, 2) == (3, frozenset({4, 6}))
    assert census_sn(4, 5) == (0, frozenset())


def test_census_an_examples():
    c = census_an(5, 2)
    assert c.np_an == 1 and c.np_star_an == 1
    c = census_an(6, 3)
    assert c.np_star_an == 1
    [rec] = [r for r in c.records if r.p_singular_an]
    assert rec.kind == "PAIR" and rec.degree_sn == 9
    assert set(rec.label) == {Partition((4, 2)), Partition((2, 2, 1, 1))}
    assert census_an(9, 2).np_star_an >= 3
    with pytest.raises(ValueError):
        census_an(4, 2)


def test_census_an_json_schema():
    obj = census_an(9, 2).to_json()
    assert json.loads(json.dumps(obj)) == obj
    assert set(obj) >= {"n", "p", "np_sn", "np_an", "np_star_an", "cdp_sn", "records"}
    rec = next(r for r in obj["records"] if r["label"] == ["5,4", "2,2,2,2,1"])
    assert rec == {"label": ["5,4", "2,2,2,2,1"], "kind": "PAIR", "degree": "42", "p_singular": True}
    assert census_an(6, 2).aut_caveat and not census_an(7, 2).aut_caveat


@pytest.mark.parametrize("n", range(0, 31))
def test_sum_of_squares(n):
    assert sum(d * d for _, d in degrees_of(n)) == math.factorial(n)


@given(partitions(), primes)
def test_valuation_matches_degree(lam, p):
    assert degree_p_valuation(lam, p) == vp(degree(lam), p) if lam else True


@given(partitions())
def test_degree_conjugation_invariant(lam):
    assert degree(lam) == degree(conjugate(lam))


def test_self_conjugate_degrees_even():
    for n in range(2, 26):
        for lam, d in degrees_of(n):
            if conjugate(lam) == lam:
                assert d % 2 == 0


@pytest.mark.parametrize("n", range(5, 21))
def test_census_chain(n):
    for p in (2, 3, 5, 7):
        c = census_an(n, p)
        assert len(c.cdp_an) <= c.np_star_an <= c.np_an
        assert len(c.cdp_sn) <= c.np_sn
        assert c.np_star_an == sum(r.p_singular_an for r in c.records)
        covered = sorted(lam for r in c.records for lam in r.label)
        assert covered == sorted(partitions_of(n))
        for r in c.records:
            assert (r.kind == "SPLIT") == (len(r.label) == 1)
            if r.kind == "SPLIT":
                assert r.degrees_an == (r.degree_sn // 2,) * 2
                expect = r.degree_sn % (4 if p == 2 else p) == 0
                assert r.p_singular_an == expect
