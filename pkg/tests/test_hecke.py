import random

import pytest

from hecketrace import braid as B
from hecketrace.braid import BraidWord
from hecketrace.errors import RankError, RankMismatch
from hecketrace.hecke import (Q_MINUS_QINV, HeckeElement, from_braid_word,
                              hecke_generator, hecke_identity, hecke_mul,
                              mul_by_generator)
from hecketrace.laurent import ONE, Q
from hecketrace.perm import perm_length, reduced_word

E2, S1 = (1, 2), (2, 1)


def test_generators():
    assert hecke_generator(2, 1, -1) == HeckeElement(2, {S1: 1, E2: -Q_MINUS_QINV})
    assert hecke_generator(2, 1, 1) == HeckeElement.basis(S1)
    assert hecke_identity(3) == HeckeElement(3, {(1, 2, 3): 1})
    with pytest.raises(RankError):
        hecke_generator(3, 3)


def test_mul_by_generator_examples():
    assert mul_by_generator(hecke_identity(2), 1) == HeckeElement.basis(S1)
    assert mul_by_generator(HeckeElement.basis(S1), 1) == HeckeElement(
        2, {S1: Q_MINUS_QINV, E2: 1})
    assert mul_by_generator(HeckeElement.basis((2, 1, 3)), 2) == HeckeElement.basis((2, 3, 1))


def test_hecke_mul_examples():
    x = from_braid_word(BraidWord(3, (1, -2, 1, 1)))
    assert hecke_mul(x, hecke_identity(3)) == x
    assert hecke_mul(HeckeElement.basis(S1), HeckeElement.basis(S1)) == HeckeElement(
        2, {S1: Q_MINUS_QINV, E2: 1})
    t1, t2 = hecke_generator(3, 1), hecke_generator(3, 2)
    assert (t1 * t2) * t1 == (t2 * t1) * t2


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        hecke_identity(2) * hecke_identity(3)


def test_from_braid_word_examples():
    assert from_braid_word(BraidWord(2, (1, -1))) == hecke_identity(2)
    assert from_braid_word(BraidWord(2, (1, 1))) == HeckeElement(2, {S1: Q_MINUS_QINV, E2: 1})
    assert from_braid_word(BraidWord(2, (-1,))) == HeckeElement(2, {S1: 1, E2: -Q_MINUS_QINV})


def test_quadratic_relation():
    # T - T^-1 = (q - q^-1) for every generator
    for n in range(2, 6):
        for i in range(1, n):
            diff = hecke_generator(n, i, 1) - hecke_generator(n, i, -1)
            assert diff == hecke_identity(n).scale(Q_MINUS_QINV)


def _rng_words(seed, count, max_rank=5, max_len=10):
    rng = random.Random(seed)
    for _ in range(count):
        rank = rng.randint(2, max_rank)
        yield rng, B.random_braid(rng, rank, rng.randint(0, max_len))


def test_basis_well_defined_under_relations():
    for rng, w in _rng_words(1, 300):
        x = from_braid_word(w)
        rewritten = B.random_relation_rewrite(w, rng)
        assert from_braid_word(rewritten) == x
        assert from_braid_word(B.free_reduce(w)) == x
        pos = rng.randint(0, len(w))
        i = rng.randint(1, w.rank - 1)
        padded = BraidWord(w.rank, w.letters[:pos] + (i, -i) + w.letters[pos:])
        assert from_braid_word(padded) == x


def test_braid_relation_words_agree():
    for n in range(3, 7):
        for i in range(1, n - 1):
            a = from_braid_word(BraidWord(n, (i, i + 1, i)))
            b = from_braid_word(BraidWord(n, (i + 1, i, i + 1)))
            assert a == b
        for i in range(1, n):
            for j in range(i + 2, n):
                assert (from_braid_word(BraidWord(n, (i, -j)))
                        == from_braid_word(BraidWord(n, (-j, i))))


def test_homomorphism():
    rng = random.Random(2)
    for _ in range(150):
        rank = rng.randint(1, 5)
        w = B.random_braid(rng, rank, rng.randint(0, 8))
        v = B.random_braid(rng, rank, rng.randint(0, 8))
        assert from_braid_word(w + v) == hecke_mul(from_braid_word(w), from_braid_word(v))


def test_associativity():
    rng = random.Random(3)
    for _ in range(60):
        rank = rng.randint(1, 4)
        x, y, z = (from_braid_word(B.random_braid(rng, rank, rng.randint(0, 5)))
                   for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_inverse_words_give_identity():
    for _, w in _rng_words(4, 100):
        assert from_braid_word(w + w.inverse()) == hecke_identity(w.rank)


def test_coefficients_never_involve_a():
    for _, w in _rng_words(5, 100):
        for p, c in from_braid_word(w).items():
            assert all(ea == 0 for (_, ea) in c.terms)
            assert perm_length(p) == len(reduced_word(p))


def test_include_and_debug_terms():
    x = from_braid_word(BraidWord(2, (1, 1)))
    big = x.include(3)
    assert big.rank == 3
    assert big == from_braid_word(BraidWord(3, (1, 1)))
    assert x.debug_terms() == [("12", "1"), ("21", "-q^-1 + q")]
    with pytest.raises(RankError):
        big.include(2)


def test_scalar_multiples():
    x = from_braid_word(BraidWord(3, (1, 2)))
    assert (Q * x) == x.scale(Q)
    assert x.scale(0).is_zero()
    assert x * ONE == x
