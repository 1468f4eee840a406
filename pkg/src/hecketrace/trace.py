"""
The Jones-Ocneanu trace ``Tr: H_n -> Q(q, a)``.

Every ``w`` in ``S_n`` factors uniquely as ``w = u * c`` with ``u`` fixing
``n`` and ``c = s_{n-1} s_{n-2} ... s_k`` where ``k = w^{-1}(n)``; lengths
add. Then

    Tr_n(T_w) = z_pos * Tr_{n-1}(T_u T_{n-2} ... T_k)    if k < n
    Tr_n(T_w) = delta * Tr_{n-1}(T_u)                     if k == n
    Tr_1(T_e) = delta

so basis traces reduce rank by rank. They are memoized by permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .braid import BraidWord, random_braid
from .hecke import Q_MINUS_QINV, HeckeElement, from_braid_word
from .laurent import A, ONE_MINUS_Q2, ZERO, LaurentPoly, Q, TraceValue
from .perm import Permutation
from .report import PropertyReport

__all__ = [
    "TraceConstants", "CONSTANTS", "Coset", "normal_form_decompose",
    "basis_trace", "ocneanu_trace", "trace_of_braid",
    "axiom_check", "random_hecke_element",
]


@dataclass(frozen=True)
class TraceConstants:
    delta: TraceValue  # value of a closed free strand
    z_pos: LaurentPoly  # removing a positive kink
    z_neg: LaurentPoly  # removing a negative kink

    def skein_consistent(self) -> bool:
        return TraceValue(self.z_pos - self.z_neg) == self.delta.scale(Q_MINUS_QINV)


CONSTANTS = TraceConstants(
    delta=TraceValue(1 - A ** 2, 1),
    z_pos=-(Q ** -1),
    z_neg=-(Q ** -1) * A ** 2,
)

# T_i - T_i^{-1} = q - q^{-1} must survive partial closure; this pins which
# kink factor belongs to which crossing sign.
if not CONSTANTS.skein_consistent():
    raise RuntimeError("trace constants violate z_pos - z_neg == (q - q^-1) * delta")


class Coset(NamedTuple):
    """``w = u * s_{n-1} ... s_k``; ``k == n`` means the cycle part is trivial."""
    u: Permutation
    k: int

    @property
    def trivial(self) -> bool:
        return self.k == len(self.u)


def normal_form_decompose(p: Permutation) -> Coset:
    n = len(p)
    k = p.index(n) + 1
    if k == n:
        return Coset(tuple(p), n)
    u = p[:k - 1] + p[k:] + (n,)
    return Coset(u, k)


def _combine(pairs: Iterable[tuple[LaurentPoly, TraceValue]]) -> TraceValue:
    """``sum c * t`` over a common denominator, canonicalized once."""
    pairs = list(pairs)
    if not pairs:
        return TraceValue(ZERO, 0)
    top = max(t.k for _, t in pairs)
    powers = [ONE_MINUS_Q2 ** j for j in range(top + 1)]
    num = ZERO
    for c, t in pairs:
        num = num + c * t.num * powers[top - t.k]
    return TraceValue(num, top).canonical()


@lru_cache(maxsize=None)
def basis_trace(p: Permutation) -> TraceValue:
    """``Tr(T_p)`` in ``H_{len(p)}``."""
    n = len(p)
    if n == 1:
        return CONSTANTS.delta
    u, k = normal_form_decompose(p)
    if k == n:
        return CONSTANTS.delta * basis_trace(u[:-1])
    x = HeckeElement.basis(u[:-1])
    for i in range(n - 2, k - 1, -1):
        x = x.mul_by_generator(i)
    return ocneanu_trace(x).scale(CONSTANTS.z_pos)


def ocneanu_trace(x: HeckeElement) -> TraceValue:
    return _combine((c, basis_trace(p)) for p, c in x.items())


def trace_of_braid(w: BraidWord) -> TraceValue:
    return ocneanu_trace(from_braid_word(w))


# -- axiom cross-check --------------------------------------------------------

def random_hecke_element(rng: random.Random, rank: int, max_length: int = 8) -> HeckeElement:
    """A small random combination of braid images with random coefficients."""
    x = HeckeElement(rank)
    for _ in range(rng.randint(1, 2)):
        w = random_braid(rng, rank, rng.randint(0, max_length))
        c = LaurentPoly.monomial(rng.choice((1, -1, 2, -3)), rng.randint(-2, 2))
        x = x + from_braid_word(w).scale(c)
    return x


def axiom_check(n_max: int = 5, samples: int = 200, seed: int = 0) -> PropertyReport:
    """
    Check the trace against its defining properties on random elements:
    Tr(xy) = Tr(yx); Tr(i(x) T_n) = z_pos Tr(x); Tr(i(x) T_n^-1) = z_neg Tr(x);
    Tr(i(x)) = delta Tr(x); and linearity. ``i`` adds one strand.
    Every family gets one fresh sample per iteration; ranks stay within
    ``n_max`` including the added strand.
    """
    rng = random.Random(seed)
    report = PropertyReport(f"trace_axioms[n<={n_max}]", samples, seed)
    report.record("skein_constants", CONSTANTS.skein_consistent())
    c = CONSTANTS
    for _ in range(samples):
        n = rng.randint(1, n_max)
        x = random_hecke_element(rng, n)
        y = random_hecke_element(rng, n)
        lhs, rhs = ocneanu_trace(x * y), ocneanu_trace(y * x)
        report.record("commutativity", lhs == rhs, n=n, lhs=str(lhs), rhs=str(rhs))

        s, t = (LaurentPoly.monomial(rng.choice((1, -1, 2)), rng.randint(-2, 2))
                for _ in range(2))
        lhs = ocneanu_trace(x.scale(s) + y.scale(t))
        rhs = ocneanu_trace(x).scale(s) + ocneanu_trace(y).scale(t)
        report.record("linearity", lhs == rhs, n=n, lhs=str(lhs), rhs=str(rhs))

        if n_max < 2:
            continue
        m = rng.randint(1, n_max - 1)
        x = random_hecke_element(rng, m)
        tx = ocneanu_trace(x)
        big = x.include(m + 1)
        for name, sign, z in (("markov_positive", 1, c.z_pos),
                              ("markov_negative", -1, c.z_neg)):
            lhs = ocneanu_trace(big.mul_by_generator(m, sign))
            rhs = tx.scale(z)
            report.record(name, lhs == rhs, n=m, lhs=str(lhs), rhs=str(rhs))
        lhs = ocneanu_trace(big)
        rhs = c.delta * tx
        report.record("inclusion", lhs == rhs, n=m, lhs=str(lhs), rhs=str(rhs))
    return report
