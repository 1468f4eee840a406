import itertools
import random
import threading

import pytest

from conftest import a, q, same_rational, to_sympy
from hecketrace import braid as B
from hecketrace.braid import BraidWord
from hecketrace.hecke import Q_MINUS_QINV, HeckeElement, from_braid_word
from hecketrace.laurent import A, Q, TraceValue
from hecketrace.perm import compose, from_word, identity, perm_length
from hecketrace.trace import (CONSTANTS, axiom_check, basis_trace, normal_form_decompose,
                              ocneanu_trace, random_hecke_element, trace_of_braid)

DELTA = CONSTANTS.delta
d_sym = (1 - a**2) / (1 - q**2)


def test_constants():
    assert DELTA == TraceValue(1 - A ** 2, 1)
    assert CONSTANTS.z_pos == -Q ** -1
    assert CONSTANTS.z_neg == -Q ** -1 * A ** 2
    assert TraceValue(CONSTANTS.z_pos - CONSTANTS.z_neg) == DELTA.scale(Q_MINUS_QINV)
    assert CONSTANTS.skein_consistent()


def test_trace_examples():
    assert ocneanu_trace(HeckeElement.identity(1)) == DELTA
    assert ocneanu_trace(HeckeElement.basis((2, 1))) == DELTA.scale(-Q ** -1)
    assert ocneanu_trace(from_braid_word(BraidWord(2, (-1,)))) == DELTA.scale(-Q ** -1 * A ** 2)


def test_identity_in_h2_matches_skein_expansion():
    # Oracle: (1/(q - q^-1)) * ((-q^-1) delta - (-q^-1 a^2) delta), in sympy
    expansion = (1 / (q - 1 / q)) * ((-1 / q) * d_sym - (-a**2 / q) * d_sym)
    assert same_rational(expansion, d_sym**2)
    value = ocneanu_trace(HeckeElement.identity(2))
    assert same_rational(to_sympy(value), expansion)
    assert value == DELTA * DELTA


def test_trace_of_braid_examples():
    assert trace_of_braid(BraidWord(1)) == DELTA
    assert trace_of_braid(BraidWord(2, (1,))) == DELTA.scale(-Q ** -1)
    # one quadratic-relation step, then the two base traces
    hand = (q - 1 / q) * (-1 / q) * d_sym + d_sym**2
    value = trace_of_braid(BraidWord(2, (1, 1)))
    assert same_rational(to_sympy(value), hand)
    assert value == DELTA.scale(Q_MINUS_QINV * -Q ** -1) + DELTA * DELTA


def test_normal_form_examples():
    assert normal_form_decompose(identity(4)).trivial
    assert normal_form_decompose((1, 2, 4, 3)) == ((1, 2, 3, 4), 3)
    u, k = normal_form_decompose(from_word(3, (1, 2)))
    assert u[2] == 3
    assert 2 == perm_length(u) + (3 - k)


@pytest.mark.parametrize("n", range(1, 6))
def test_normal_form_brute_force(n):
    for w in itertools.permutations(range(1, n + 1)):
        u, k = normal_form_decompose(w)
        assert u[-1] == n
        c = from_word(n, tuple(range(n - 1, k - 1, -1)))
        assert compose(u, c) == w
        assert perm_length(w) == perm_length(u) + (n - k)


def test_axiom_check_passes():
    report = axiom_check(n_max=5, samples=60, seed=21)
    assert report.passed, report.failures
    assert report.counts["commutativity"] == 60
    assert report.counts["markov_positive"] == 60


def test_axiom_examples():
    t1 = HeckeElement.basis((2, 1))
    conj = HeckeElement.generator(2, 1) * t1 * HeckeElement.generator(2, 1, -1)
    assert ocneanu_trace(conj) == ocneanu_trace(t1)
    stab = HeckeElement.identity(1).include(2).mul_by_generator(1)
    assert ocneanu_trace(stab) == DELTA.scale(CONSTANTS.z_pos)


def test_linearity():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(1, 4)
        x, y = random_hecke_element(rng, n), random_hecke_element(rng, n)
        c1, c2 = Q ** 2 - 3, A * Q ** -1 + 1
        lhs = ocneanu_trace(x.scale(c1) + y.scale(c2))
        assert lhs == ocneanu_trace(x).scale(c1) + ocneanu_trace(y).scale(c2)


def test_commutativity_on_words():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(1, 5)
        x = from_braid_word(B.random_braid(rng, n, rng.randint(0, 8)))
        y = from_braid_word(B.random_braid(rng, n, rng.randint(0, 8)))
        assert ocneanu_trace(x * y) == ocneanu_trace(y * x)


def test_conjugation_and_split_invariance():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(2, 5)
        w = B.random_braid(rng, n, rng.randint(0, 10))
        g = rng.choice((1, -1)) * rng.randint(1, n - 1)
        tw = trace_of_braid(w)
        assert trace_of_braid(B.conjugate(w, g)) == tw
        assert trace_of_braid(B.shift_disjoint(w)) == DELTA * tw


def test_trace_never_needs_other_denominators():
    for n in range(1, 6):
        for p in itertools.permutations(range(1, n + 1)):
            v = basis_trace(p)
            assert v.is_canonical()
            assert v.k <= n


def test_basis_trace_cache_is_thread_safe():
    perms = list(itertools.permutations(range(1, 6)))
    expected = {p: basis_trace(p) for p in perms}
    basis_trace.cache_clear()
    results = {}

    def work(chunk):
        for p in chunk:
            results[p] = basis_trace(p)

    threads = [threading.Thread(target=work, args=(perms[i::4],)) for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert results == expected
