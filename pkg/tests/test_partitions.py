import random

import pytest
from hypothesis import given, strategies as st

from psingular.partitions import (
    Partition,
    conjugate,
    count_partitions,
    first_p_core,
    hook_lengths,
    hook_multiset,
    is_p_core,
    p_core_and_weight,
    p_core_by_removal,
    p_cores_of_size,
    partitions_of,
    remove_rim_hook,
)

from strategies import partitions, primes


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, -1))
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition(()).size == 0

    def test_text_format(self):
        assert str(Partition((5, 4, 1))) == "5,4,1"
        assert Partition.parse("5,1^3") == Partition((5, 1, 1, 1))
        assert Partition.parse("") == Partition(())
        assert str(Partition.parse("5, 4 ,1")) == "5,4,1"

    @given(partitions())
    def test_parse_roundtrip(self, lam):
        assert Partition.parse(str(lam)) == lam


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate((3, 1, 1)) == (3, 1, 1)


def test_hook_examples():
    assert hook_lengths((2, 2)) == ((3, 2), (2, 1))
    assert hook_lengths((2, 1)) == ((3, 1), (1,))
    assert hook_lengths((1,)) == ((1,),)


def test_rim_hook_examples():
    assert remove_rim_hook((4, 3), (2, 2)) == (4, 1)
    assert remove_rim_hook((1,), (1, 1)) == ()
    out = remove_rim_hook((3, 2), (1, 2))
    assert out.size == 2 and out == (1, 1)
    with pytest.raises(ValueError):
        remove_rim_hook((3, 2), (2, 3))
    with pytest.raises(ValueError):
        remove_rim_hook((3, 2), (3, 1))


def test_core_examples():
    cw = p_core_and_weight((4, 3), 2)
    assert (cw.core, cw.weight) == ((2, 1), 2)
    cw = p_core_and_weight((3, 1), 3)
    assert (cw.core, cw.weight) == ((3, 1), 0)
    for n, p in [(6, 3), (10, 5), (8, 2)]:
        cw = p_core_and_weight((n,), p)
        assert (cw.core, cw.weight) == ((), n // p)


def test_is_p_core_examples():
    assert is_p_core((2, 1), 2)
    assert not is_p_core((2, 2), 3)
    assert is_p_core((), 5)


def test_enumeration_examples():
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions_of(9))) == 30
    assert count_partitions(0) == 1
    assert count_partitions(9) == 30
    assert count_partitions(45) == 89134


def test_cores_of_size_examples():
    assert p_cores_of_size(3, 2) == [(2, 1)]
    assert p_cores_of_size(4, 3) == [(3, 1), (2, 1, 1)]
    assert p_cores_of_size(3, 5) == list(partitions_of(3))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_first_p_core_matches_filter(p):
    for m in range(0, 22):
        cores = p_cores_of_size(m, p)
        assert first_p_core(m, p) == (cores[0] if cores else None)


def test_first_p_core_large():
    for p in (11, 13):
        for j in range(2, p):
            mu = first_p_core(p * j + 1, p)
            assert mu.size == p * j + 1 and is_p_core(mu, p)


@pytest.mark.parametrize("n", range(0, 16))
def test_enumeration_is_reverse_lex_and_complete(n):
    seq = list(partitions_of(n))
    assert len(seq) == len(set(seq)) == count_partitions(n)
    assert seq == sorted(seq, reverse=True)
    assert all(lam.size == n for lam in seq)


@given(partitions())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions())
def test_hook_formula_and_multiset(lam):
    conj = conjugate(lam)
    grid = hook_lengths(lam)
    for i, row in enumerate(grid):
        for j, h in enumerate(row):
            assert h == lam[i] - (j + 1) + conj[j] - (i + 1) + 1
    assert sorted(hook_multiset(lam)) == sorted(hook_multiset(conj))
    first_col = [row[0] for row in grid]
    assert all(a > b for a, b in zip(first_col, first_col[1:]))


@given(partitions(), st.data())
def test_rim_hook_removal_shrinks_by_hook(lam, data):
    if not lam:
        return
    i = data.draw(st.integers(1, len(lam)))
    j = data.draw(st.integers(1, lam[i - 1]))
    h = hook_lengths(lam)[i - 1][j - 1]
    out = remove_rim_hook(lam, (i, j))
    assert out.size == lam.size - h


@given(partitions(), primes)
def test_core_weight_identity(lam, p):
    cw = p_core_and_weight(lam, p)
    assert lam.size == cw.core.size + p * cw.weight
    assert is_p_core(cw.core, p)
    assert is_p_core(lam, p) == (cw.weight == 0)


@given(partitions(), primes, st.integers(0, 2**32))
def test_core_independent_of_removal_order(lam, p, seed):
    abacus = p_core_and_weight(lam, p)
    assert p_core_by_removal(lam, p) == abacus
    assert p_core_by_removal(lam, p, rng=random.Random(seed)) == abacus


@given(partitions(), primes)
def test_core_commutes_with_conjugation(lam, p):
    a = p_core_and_weight(lam, p)
    b = p_core_and_weight(conjugate(lam), p)
    assert b.core == conjugate(a.core) and b.weight == a.weight
