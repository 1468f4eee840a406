"""
The Hecke algebra H_n over Z[q^{+-1}] (with the spare variable ``a`` unused),
in the basis ``{T_w : w in S_n}``.

The defining quadratic relation is ``T_i - T_i^{-1} = (q - q^{-1})``, which
gives the right-multiplication rule

    T_w T_i = T_{w s_i}                          if l(w s_i) > l(w)
    T_w T_i = (q - q^{-1}) T_w + T_{w s_i}       otherwise.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .braid import BraidWord
from .errors import RankError, RankMismatch
from .laurent import ONE, LaurentPoly, Q, Scalar
from .perm import Permutation, identity, perm_length, reduced_word

__all__ = [
    "HeckeElement", "Q_MINUS_QINV", "hecke_identity", "hecke_generator",
    "mul_by_generator", "hecke_mul", "from_braid_word",
]

Q_MINUS_QINV = Q - Q ** -1


class HeckeElement:
    """A finite combination ``sum c_w T_w`` with nonzero LaurentPoly coefficients."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Permutation, Scalar] | None = None):
        if rank < 1:
            raise RankError(f"rank must be at least 1, got {rank}")
        self.rank = rank
        self._terms: dict[Permutation, LaurentPoly] = {}
        for p, c in (terms or {}).items():
            p = tuple(p)
            if len(p) != rank:
                raise RankMismatch(f"permutation {p} has size {len(p)}, expected {rank}")
            c = LaurentPoly.coerce(c)
            if c:
                self._terms[p] = c

    @classmethod
    def _raw(cls, rank: int, terms: dict[Permutation, LaurentPoly]) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        return obj

    @classmethod
    def identity(cls, n: int) -> HeckeElement:
        return cls._raw(n, {identity(n): ONE})

    @classmethod
    def basis(cls, p: Permutation) -> HeckeElement:
        return cls._raw(len(p), {tuple(p): ONE})

    @classmethod
    def generator(cls, n: int, i: int, sign: int = 1) -> HeckeElement:
        return cls.identity(n).mul_by_generator(i, sign)

    @property
    def terms(self) -> Mapping[Permutation, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[Permutation, LaurentPoly]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, p: Permutation) -> LaurentPoly:
        return self._terms.get(tuple(p), LaurentPoly())

    # -- linear structure ----------------------------------------------------

    def _check_rank(self, other: HeckeElement) -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            _accumulate(out, p, c)
        return HeckeElement._raw(self.rank, out)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._raw(self.rank, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> HeckeElement:
        c = LaurentPoly.coerce(c)
        if not c:
            return HeckeElement._raw(self.rank, {})
        return HeckeElement._raw(self.rank, {p: v * c for p, v in self._terms.items()})

    def __rmul__(self, c: Scalar) -> HeckeElement:
        if isinstance(c, (LaurentPoly, int)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> HeckeElement:
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return NotImplemented

    # -- algebra structure -----------------------------------------------------

    def mul_by_generator(self, i: int, sign: int = 1) -> HeckeElement:
        """Right multiplication by ``T_i`` (sign +1) or ``T_i^{-1}`` (sign -1)."""
        if not 1 <= i <= self.rank - 1:
            raise RankError(f"generator {i} does not fit rank {self.rank}")
        out: dict[Permutation, LaurentPoly] = {}
        for w, c in self._terms.items():
            lst = list(w)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            ws = tuple(lst)
            _accumulate(out, ws, c)
            if w[i - 1] > w[i]:
                _accumulate(out, w, c * Q_MINUS_QINV)
        if sign < 0:
            for w, c in self._terms.items():
                _accumulate(out, w, -(c * Q_MINUS_QINV))
        return HeckeElement._raw(self.rank, out)

    def include(self, rank: int) -> HeckeElement:
        """The image under ``H_n -> H_rank`` that adds fixed strands on the right."""
        if rank < self.rank:
            raise RankError(f"cannot include rank {self.rank} into rank {rank}")
        pad = tuple(range(self.rank + 1, rank + 1))
        return HeckeElement._raw(rank, {p + pad: c for p, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def debug_terms(self) -> list[tuple[str, str]]:
        """Sorted ``(one-line permutation, coefficient text)`` pairs."""
        rows = sorted(self._terms.items(), key=lambda t: (perm_length(t[0]), t[0]))
        return [("".join(map(str, p)) if self.rank < 10 else ",".join(map(str, p)), str(c))
                for p, c in rows]

    def __repr__(self) -> str:
        if not self._terms:
            return f"HeckeElement({self.rank}, 0)"
        body = " + ".join(f"({c})*T[{p}]" for p, c in self.debug_terms())
        return f"HeckeElement({self.rank}, {body})"


def _accumulate(out: dict[Permutation, LaurentPoly], p: Permutation, c: LaurentPoly) -> None:
    prev = out.get(p)
    if prev is None:
        out[p] = c
        return
    s = prev + c
    if s:
        out[p] = s
    else:
        del out[p]


def hecke_identity(n: int) -> HeckeElement:
    return HeckeElement.identity(n)


def hecke_generator(n: int, i: int, sign: int = 1) -> HeckeElement:
    return HeckeElement.generator(n, i, sign)


def mul_by_generator(x: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    return x.mul_by_generator(i, sign)


def hecke_mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Bilinear product; each ``T_v`` of ``y`` is expanded along a reduced word of ``v``."""
    if x.rank != y.rank:
        raise RankMismatch(f"ranks {x.rank} and {y.rank} differ")
    out: dict[Permutation, LaurentPoly] = {}
    for v, d in y.items():
        part = x
        for i in reduced_word(v):
            part = part.mul_by_generator(i)
        for p, c in part.items():
            _accumulate(out, p, c * d)
    return HeckeElement._raw(x.rank, out)


def from_braid_word(w: BraidWord) -> HeckeElement:
    x = HeckeElement.identity(w.rank)
    for e in w.letters:
        x = x.mul_by_generator(abs(e), 1 if e > 0 else -1)
    return x
