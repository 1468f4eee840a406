"""
Braid words and the closure combinatorics that do not need the Hecke algebra.

A braid word of rank ``n`` is a sequence of nonzero integers ``e`` with
``1 <= |e| <= n-1``; ``e > 0`` is the positive crossing ``sigma_e`` and
``e < 0`` its inverse. Letters apply left to right (bottom to top of the
diagram).

Text grammar: signed nonzero integers separated by whitespace and/or commas,
e.g. ``"1 2 -1"`` or ``"1,2,-1"``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError, RankError
from .perm import Permutation, cycles, from_word

__all__ = [
    "BraidWord", "parse_braid_word", "coxeter", "looped_coxeter", "writhe",
    "braid_permutation", "closure_component_count", "conjugate", "stabilize",
    "shift_disjoint", "free_reduce", "random_braid", "relation_sites",
    "apply_relation", "insert_relator", "random_relation_rewrite",
]


@dataclass(frozen=True)
class BraidWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be at least 1, got {self.rank}")
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        for e in self.letters:
            if e == 0:
                raise ParseError("braid letters must be nonzero")
            if abs(e) > self.rank - 1:
                raise RankError(f"letter {e} does not fit rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.rank != other.rank:
            raise RankError(f"cannot concatenate ranks {self.rank} and {other.rank}")
        return BraidWord(self.rank, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.rank, tuple(-e for e in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)

    def to_json(self) -> dict:
        return {"rank": self.rank, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["rank"]), tuple(data["letters"]))


_SEP = re.compile(r"[\s,]+")


def parse_braid_word(text: str, rank_hint: int | None = None) -> BraidWord:
    letters = []
    for tok in _SEP.split(text.strip()):
        if not tok:
            continue
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"malformed braid letter {tok!r}") from None
        if e == 0:
            raise ParseError("braid letters must be nonzero")
        letters.append(e)
    if rank_hint is None:
        rank = max((abs(e) for e in letters), default=0) + 1
    else:
        rank = rank_hint
    return BraidWord(rank, tuple(letters))


def coxeter(n: int) -> BraidWord:
    """``sigma_1 sigma_2 ... sigma_{n-1}``; its closure is the unknot."""
    if n < 1:
        raise DomainError(f"coxeter braid needs n >= 1, got {n}")
    return BraidWord(n, tuple(range(1, n)))


def looped_coxeter(n: int) -> BraidWord:
    """
    The coxeter braid on the first ``n-1`` strands followed by a positive
    loop of strand ``n`` around all the others:
    ``[1, ..., n-2] + [n-1, ..., 1] + [1, ..., n-1]``, 3n-4 letters.
    """
    if n < 2:
        raise DomainError(f"there is no looped coxeter braid of rank {n}")
    body = list(range(1, n - 1))
    loop = list(range(n - 1, 0, -1)) + list(range(1, n))
    return BraidWord(n, tuple(body + loop))


def writhe(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def braid_permutation(w: BraidWord) -> Permutation:
    return from_word(w.rank, w.letters)


def closure_component_count(w: BraidWord) -> int:
    return len(cycles(braid_permutation(w)))


def _check_generator(w: BraidWord, g: int) -> None:
    if g == 0 or abs(g) > w.rank - 1:
        raise RankError(f"generator {g} does not fit rank {w.rank}")


def conjugate(w: BraidWord, g: int) -> BraidWord:
    """``sigma_g * w * sigma_g^-1`` (``g`` signed)."""
    _check_generator(w, g)
    return BraidWord(w.rank, (g,) + w.letters + (-g,))


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: add a strand and the crossing ``sigma_n^{+-1}``."""
    if sign not in (1, -1):
        raise DomainError("stabilization sign must be +1 or -1")
    return BraidWord(w.rank + 1, w.letters + (sign * w.rank,))


def shift_disjoint(w: BraidWord) -> BraidWord:
    """Add an untouched strand; the closure gains a split unknot."""
    return BraidWord(w.rank + 1, w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.rank, tuple(stack))


def random_braid(seed: int | random.Random, rank: int, length: int) -> BraidWord:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if rank < 2:
        return BraidWord(max(rank, 1), ())
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, rank - 1) for _ in range(length)
    )
    return BraidWord(rank, letters)


# -- braid-group relation rewrites -----------------------------------------

def relation_sites(w: BraidWord) -> list[tuple[str, int]]:
    """
    Positions where a defining relation applies verbatim: ``("far", j)``
    when letters j, j+1 are distant generators, ``("braid", j)`` when
    letters j..j+2 read ``x y x`` with adjacent indices and one common sign.
    """
    L = w.letters
    sites = []
    for j in range(len(L) - 1):
        if abs(abs(L[j]) - abs(L[j + 1])) >= 2:
            sites.append(("far", j))
    for j in range(len(L) - 2):
        x, y, z = L[j], L[j + 1], L[j + 2]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            sites.append(("braid", j))
    return sites


def apply_relation(w: BraidWord, site: tuple[str, int]) -> BraidWord:
    kind, j = site
    L = list(w.letters)
    if kind == "far":
        L[j], L[j + 1] = L[j + 1], L[j]
    elif kind == "braid":
        x, y = L[j], L[j + 1]
        L[j:j + 3] = [y, x, y]
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return BraidWord(w.rank, tuple(L))


def insert_relator(w: BraidWord, pos: int, i: int) -> BraidWord:
    """Insert ``sigma_i sigma_{i+1} sigma_i (sigma_{i+1} sigma_i sigma_{i+1})^-1``."""
    if not 1 <= i <= w.rank - 2:
        raise RankError(f"braid relator at {i} needs rank > {i + 1}")
    rel = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    L = w.letters
    return BraidWord(w.rank, L[:pos] + rel + L[pos:])


def random_relation_rewrite(w: BraidWord, rng: random.Random) -> BraidWord:
    """One relation rewrite: at a random applicable site, else a relator insertion."""
    sites = relation_sites(w)
    if sites:
        return apply_relation(w, rng.choice(sites))
    if w.rank >= 3:
        return insert_relator(w, rng.randint(0, len(w)), rng.randint(1, w.rank - 2))
    if w.rank == 1:
        return w
    # rank 2 has no braid relation; a cancelling pair is the only rewrite
    pos = rng.randint(0, len(w))
    return BraidWord(w.rank, w.letters[:pos] + (1, -1) + w.letters[pos:])

