"""
Permutations of ``{1, ..., n}`` in one-line notation.

A permutation is a plain tuple ``p`` with ``p[i-1] == p(i)``. Products are
function composition, ``(p * s)(i) == p(s(i))``, so right multiplication by
the adjacent transposition ``s_i`` swaps positions ``i`` and ``i+1``.
"""

from __future__ import annotations

from functools import lru_cache

Permutation = tuple[int, ...]

__all__ = [
    "Permutation", "identity", "is_permutation", "compose", "inverse",
    "swap_positions", "perm_length", "reduced_word", "cycles",
    "cycle_type", "from_word",
]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(p: tuple[int, ...]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p: Permutation, s: Permutation) -> Permutation:
    """Return ``p * s``, i.e. ``i -> p(s(i))``."""
    return tuple(p[j - 1] for j in s)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def swap_positions(p: Permutation, i: int) -> Permutation:
    """Return ``p * s_i``."""
    lst = list(p)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def perm_length(p: Permutation) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@lru_cache(maxsize=None)
def reduced_word(p: Permutation) -> tuple[int, ...]:
    """
    A reduced word ``(i_1, ..., i_l)`` with ``p == s_{i_1} * ... * s_{i_l}``.

    Deterministic: the smallest right descent ``i`` (``p(i) > p(i+1)``) is
    split off as the last letter, then the rule recurses on ``p * s_i``.
    """
    word: list[int] = []
    cur = list(p)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def from_word(n: int, word) -> Permutation:
    """The product ``s_{|w_1|} * s_{|w_2|} * ...`` in ``S_n``; signs are ignored."""
    cur = list(range(1, n + 1))
    for letter in word:
        i = abs(letter)
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return tuple(cur)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))
