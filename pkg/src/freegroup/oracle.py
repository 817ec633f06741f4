"""Brute-force reference reduction for testing the core reducer.

Words are expanded into single signed letters (``+s`` for generator ``s``,
``-s`` for its inverse) and inverse pairs are deleted one at a time until
none remain.  This is quadratic and shares no code with
:func:`freegroup.words.reduce`.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from .words import Word

EXPANSION_LIMIT = 100_000


class ExpansionTooLarge(ValueError):
    pass


def expand(raw: Sequence[Tuple[int, int]], limit: int = EXPANSION_LIMIT) -> List[int]:
    total = sum(abs(e) for _, e in raw)
    if total > limit:
        raise ExpansionTooLarge(f"expansion would have {total} letters (limit {limit})")
    letters = []
    for s, e in raw:
        if s < 1:
            raise ValueError(f"symbol must be >= 1, got {s}")
        letters.extend([s if e > 0 else -s] * abs(e))
    return letters


def _inverse_pairs(letters: Sequence[int]) -> List[int]:
    return [i for i in range(len(letters) - 1) if letters[i] == -letters[i + 1]]


def oracle_reduce(letters: Sequence[int], rng: Optional[random.Random] = None) -> List[int]:
    """Delete adjacent inverse pairs until none are left.

    With ``rng`` the pair deleted at each step is chosen at random, which
    lets tests compare different deletion orders.
    """
    ls = list(letters)
    while True:
        pairs = _inverse_pairs(ls)
        if not pairs:
            return ls
        i = rng.choice(pairs) if rng is not None else pairs[0]
        del ls[i:i + 2]


def regroup(letters: Sequence[int]) -> Word:
    """Collapse runs of equal letters into syllables.

    The input must be free of inverse pairs; :meth:`Word.from_reduced`
    rejects anything else.
    """
    return Word.from_reduced(
        (abs(k), len(list(g)) * (1 if k > 0 else -1))
        for k, g in itertools.groupby(letters)
    )


def reference_reduce(raw: Sequence[Tuple[int, int]]) -> Word:
    return regroup(oracle_reduce(expand(raw)))


def enumerate_raw(max_len: int, symbols: Sequence[int],
                  exponents: Sequence[int]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Every raw syllable sequence of length ``0..max_len`` over the given values."""
    cells = [(s, e) for s in symbols for e in exponents]
    for n in range(max_len + 1):
        yield from itertools.product(cells, repeat=n)
