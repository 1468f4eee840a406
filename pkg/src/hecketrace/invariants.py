"""
Link invariants of braid closures: HOMFLY via the normalized trace, the Jones
polynomial as its one-variable specialization, and the verifiers for the
looped coxeter family.

HOMFLY(w) = (q a^-1)^n(w) * (-a)^(eps * writhe(w)) * Tr(w)

The writhe sign ``eps`` is not hard-coded: :func:`writhe_sign` picks the one
candidate under which the empty rank-1 word and ``[1]`` in rank 2 (the same
unknot, related by a stabilization) get equal values. Likewise the Jones
substitution branch (``a = t, q = t^-1/2`` or its mirror ``a = t^-1,
q = t^1/2``) is fixed once by :func:`jones_branch` against the positive Hopf
link ``[1, 1]``, whose Jones polynomial is ``-t^(1/2) - t^(5/2)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import braid as B
from .braid import BraidWord, looped_coxeter
from .errors import DomainError, NotDivisible
from .hecke import Q_MINUS_QINV
from .laurent import ONE_MINUS_Q2, LaurentPoly, Q, TraceValue
from .report import Check, PropertyReport
from .trace import CONSTANTS, trace_of_braid

__all__ = [
    "HomflyValue", "JonesValue", "BRANCHES", "HOPF_JONES",
    "normalization", "writhe_sign", "homfly_of_braid", "jones_branch",
    "jones_of_braid", "unknot_homfly", "lcb_trace", "recursion_rhs",
    "verify_lcb_recursion", "lcb_homfly_check", "markov_check",
    "split_union_check", "skein_check", "SPLIT_UNKNOT_FACTOR",
]


def normalization(strands: int, writhe: int, eps: int) -> LaurentPoly:
    """The unit ``(q a^-1)^strands * (-a)^(eps * writhe)``."""
    e = eps * writhe
    return LaurentPoly.monomial(-1 if e % 2 else 1, strands, e - strands)


def _homfly_candidate(w: BraidWord, eps: int) -> TraceValue:
    return trace_of_braid(w).scale(normalization(w.rank, B.writhe(w), eps))


@lru_cache(maxsize=None)
def writhe_sign() -> int:
    unknot, stabilized = BraidWord(1), BraidWord(2, (1,))
    good = [eps for eps in (1, -1)
            if _homfly_candidate(unknot, eps) == _homfly_candidate(stabilized, eps)]
    if len(good) != 1:
        raise RuntimeError(f"writhe sign calibration is ambiguous: {good}")
    return good[0]


@dataclass(frozen=True)
class HomflyValue:
    value: TraceValue
    source: BraidWord = field(compare=False)
    strands: int = field(compare=False)
    writhe: int = field(compare=False)
    epsilon: int = field(compare=False)

    def __str__(self) -> str:
        return str(self.value)

    def to_json(self) -> dict:
        return {
            **self.value.to_json(),
            "word": self.source.to_json(),
            "strands": self.strands, "writhe": self.writhe, "epsilon": self.epsilon,
        }


def homfly_of_braid(w: BraidWord) -> HomflyValue:
    eps = writhe_sign()
    wr = B.writhe(w)
    return HomflyValue(_homfly_candidate(w, eps), w, w.rank, wr, eps)


def unknot_homfly() -> TraceValue:
    return homfly_of_braid(BraidWord(1)).value


# -- Jones polynomial -----------------------------------------------------------

class JonesValue:
    """
    An element of Z[t^(1/2), t^(-1/2)], stored as ``{2 * exponent: coeff}``.
    """

    __slots__ = ("_terms",)

    def __init__(self, doubled: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (doubled or {}).items() if c}

    @classmethod
    def monomial(cls, coeff: int, exponent: Fraction | int) -> JonesValue:
        e2 = Fraction(exponent) * 2
        if e2.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a half-integer")
        return cls({int(e2): coeff})

    @property
    def doubled(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exponent: Fraction | int) -> int:
        return self._terms.get(int(Fraction(exponent) * 2), 0)

    def __add__(self, other: JonesValue) -> JonesValue:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return JonesValue(out)

    def __neg__(self) -> JonesValue:
        return JonesValue({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: JonesValue) -> JonesValue:
        return self + (-other)

    def __mul__(self, other: JonesValue | int) -> JonesValue:
        if isinstance(other, int):
            return JonesValue({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return JonesValue(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> JonesValue:
        out = JonesValue({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def div_exact(self, d: JonesValue) -> JonesValue:
        """Exact quotient in the Laurent ring, or :class:`NotDivisible`."""
        if not d._terms:
            raise ZeroDivisionError("division by zero Jones value")
        if not self._terms:
            return JonesValue()
        d_lo, d_hi = min(d._terms), max(d._terms)
        lo = min(self._terms) - d_lo
        lead = d._terms[d_hi]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            m = top - d_hi
            c = rem[top]
            if m < lo or c % lead:
                raise NotDivisible(f"{self} is not a multiple of {d}")
            k = c // lead
            quot[m] = k
            for e, dc in d._terms.items():
                v = rem.get(e + m, 0) - k * dc
                if v:
                    rem[e + m] = v
                else:
                    rem.pop(e + m, None)
        return JonesValue(quot)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = JonesValue({0: other})
        if not isinstance(other, JonesValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, e2 in enumerate(sorted(self._terms)):
            c = self._terms[e2]
            body = _format_t(abs(c), e2)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"JonesValue({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [[e2, self._terms[e2]] for e2 in sorted(self._terms)],
                "text": str(self)}

    @classmethod
    def from_json(cls, data: Mapping) -> JonesValue:
        return cls({int(e2): int(c) for e2, c in data["terms"]})


def _format_t(c: int, e2: int) -> str:
    if e2 == 0:
        return str(c)
    if e2 % 2:
        mono = f"t^({e2}/2)"
    elif e2 == 2:
        mono = "t"
    else:
        mono = f"t^{e2 // 2}"
    return mono if c == 1 else f"{c}*{mono}"


# q^i a^j -> t^((qs*i + as*j)/2): doubled exponents of q and a per branch
BRANCHES: dict[str, tuple[int, int]] = {
    "a=t,q=t^-1/2": (-1, 2),
    "a=t^-1,q=t^1/2": (1, -2),
}

HOPF_JONES = JonesValue({1: -1, 5: -1})  # -t^(1/2) - t^(5/2)

# V(L + unknot) / V(L) = (t - t^-1) / (t^-1/2 - t^1/2)
SPLIT_UNKNOT_FACTOR = JonesValue({2: 1, -2: -1}).div_exact(JonesValue({-1: 1, 1: -1}))


def _substitute(p: LaurentPoly, branch: str) -> JonesValue:
    sq, sa = BRANCHES[branch]
    out: dict[int, int] = {}
    for (eq, ea), c in p.terms.items():
        e2 = sq * eq + sa * ea
        out[e2] = out.get(e2, 0) + c
    return JonesValue(out)


def _jones_from_homfly(h: TraceValue, branch: str) -> JonesValue:
    u = unknot_homfly()
    gap = _substitute(ONE_MINUS_Q2, branch)
    num = _substitute(h.num, branch) * gap ** u.k
    den = _substitute(u.num, branch) * gap ** h.k
    return num.div_exact(den)


@lru_cache(maxsize=None)
def jones_branch() -> str:
    hopf = homfly_of_braid(BraidWord(2, (1, 1))).value
    good = [b for b in BRANCHES if _jones_from_homfly(hopf, b) == HOPF_JONES]
    if len(good) != 1:
        raise RuntimeError(f"Jones branch calibration is ambiguous: {good}")
    return good[0]


def jones_of_braid(w: BraidWord) -> JonesValue:
    return _jones_from_homfly(homfly_of_braid(w).value, jones_branch())


# -- looped coxeter family -------------------------------------------------------

@lru_cache(maxsize=None)
def lcb_trace(n: int) -> TraceValue:
    if n < 2:
        raise DomainError(f"there is no looped coxeter braid of rank {n}")
    return trace_of_braid(looped_coxeter(n))


def recursion_rhs(n: int) -> TraceValue:
    """``(-q - q^-3) Tr(LCB_{n-1}) - q^-2 Tr(LCB_{n-2})``."""
    return (lcb_trace(n - 1).scale(-Q - Q ** -3)
            - lcb_trace(n - 2).scale(Q ** -2))


def verify_lcb_recursion(n_min: int = 4, n_max: int = 8) -> list[Check]:
    if n_min < 4:
        raise DomainError(f"the recursion is claimed for rank n >= 4, got n_min={n_min}")
    if n_max < n_min:
        raise DomainError(f"empty range {n_min}..{n_max}")
    checks = []
    for n in range(n_min, n_max + 1):
        lhs, rhs = lcb_trace(n), recursion_rhs(n)
        checks.append(Check("lcb_recursion", n, lhs == rhs, lhs, rhs))
    return checks


def lcb_homfly_check(n: int) -> Check:
    if n < 2:
        raise DomainError(f"there is no looped coxeter braid of rank {n}")
    eps = writhe_sign()
    lhs = homfly_of_braid(looped_coxeter(n)).value
    rhs = lcb_trace(n).scale(normalization(n, 3 * n - 4, eps))
    return Check("lcb_homfly", n, lhs == rhs, lhs, rhs, epsilon=eps)


# -- property suites ----------------------------------------------------------------

def markov_check(samples: int = 200, seed: int = 0, max_rank: int = 5,
                 max_length: int = 10, jones: bool = True) -> PropertyReport:
    """
    HOMFLY (and optionally Jones) invariance under conjugation, both
    stabilizations, free reduction and single relation rewrites, on seeded
    random braids of rank 2..max_rank.
    """
    rng = random.Random(seed)
    report = PropertyReport("markov", samples, seed)
    for _ in range(samples):
        rank = rng.randint(2, max_rank)
        w = B.random_braid(rng, rank, rng.randint(0, max_length))
        base = homfly_of_braid(w)
        moves = {
            "stabilize_positive": B.stabilize(w, 1),
            "stabilize_negative": B.stabilize(w, -1),
            "free_reduce": B.free_reduce(w),
            "relation_rewrite": B.random_relation_rewrite(w, rng),
            "conjugation": B.conjugate(w, rng.choice((1, -1)) * rng.randint(1, rank - 1)),
        }
        for name, moved in moves.items():
            other = homfly_of_braid(moved)
            report.record(name, other == base, word=str(w), rank=rank,
                          moved=str(moved), lhs=str(base), rhs=str(other))
        if jones:
            v = jones_of_braid(w)
            for name in ("stabilize_positive", "conjugation"):
                other_v = jones_of_braid(moves[name])
                report.record(f"jones_{name}", other_v == v, word=str(w),
                              rank=rank, lhs=str(v), rhs=str(other_v))
    return report


def split_union_check(samples: int = 50, seed: int = 0, max_rank: int = 5,
                      max_length: int = 10) -> PropertyReport:
    rng = random.Random(seed)
    report = PropertyReport("split_union", samples, seed)
    for _ in range(samples):
        rank = rng.randint(1, max_rank)
        w = B.random_braid(rng, rank, rng.randint(0, max_length))
        split = B.shift_disjoint(w)
        lhs, rhs = trace_of_braid(split), CONSTANTS.delta * trace_of_braid(w)
        report.record("trace", lhs == rhs, word=str(w), rank=rank,
                      lhs=str(lhs), rhs=str(rhs))
        jl, jr = jones_of_braid(split), SPLIT_UNKNOT_FACTOR * jones_of_braid(w)
        report.record("jones", jl == jr, word=str(w), rank=rank,
                      lhs=str(jl), rhs=str(jr))
    return report


def skein_check(samples: int = 50, seed: int = 0, max_rank: int = 5,
                max_length: int = 8) -> PropertyReport:
    """
    Crossing-change identities on words ``u [+-i] v`` versus ``u v``:
    the HOMFLY relation implied by the Hecke quadratic relation under the
    calibrated normalization, and the Jones skein
    ``t^-1 V(L+) - t V(L-) + (t^-1/2 - t^1/2) V(L0) = 0``.
    """
    rng = random.Random(seed)
    report = PropertyReport("skein", samples, seed)
    eps = writhe_sign()
    minus_a = LaurentPoly.monomial(-1, a=1)
    t_inv, t = JonesValue({-2: 1}), JonesValue({2: 1})
    half_gap = JonesValue({-1: 1, 1: -1})
    for _ in range(samples):
        rank = rng.randint(2, max_rank)
        u = B.random_braid(rng, rank, rng.randint(0, max_length // 2))
        v = B.random_braid(rng, rank, rng.randint(0, max_length // 2))
        i = rng.randint(1, rank - 1)
        plus = u + BraidWord(rank, (i,)) + v
        minus = u + BraidWord(rank, (-i,)) + v
        zero = u + v
        hp, hm, h0 = (homfly_of_braid(x).value for x in (plus, minus, zero))
        lhs = hp.scale(minus_a ** -eps) - hm.scale(minus_a ** eps)
        rhs = h0.scale(Q_MINUS_QINV)
        report.record("homfly", lhs == rhs, word=str(zero), rank=rank, i=i,
                      lhs=str(lhs), rhs=str(rhs))
        vp, vm, v0 = (jones_of_braid(x) for x in (plus, minus, zero))
        total = t_inv * vp - t * vm + half_gap * v0
        report.record("jones", total == 0, word=str(zero), rank=rank, i=i,
                      total=str(total))
    return report
