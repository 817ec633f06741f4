"""Seeded random words.

Draws come from a private :class:`random.Random` (Mersenne Twister) seeded
with ``RandomSpec.seed``, so output depends only on the spec and is the same
on every platform.  Per raw syllable the generator draws the symbol with
``randint(1, max_symbol)`` and then the exponent magnitude with
``randint(1, max_abs_exponent)`` and its sign with ``random() < 0.5``.
"""

from __future__ import annotations

import random as _random
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .errors import RandomSpecError
from .vector import WordVector
from .words import Word

SEED_MAX = 2**64 - 1


@dataclass(frozen=True)
class RandomSpec:
    count: int = 7
    syllables: int = 5
    max_symbol: int = 3
    max_abs_exponent: int = 4
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise RandomSpecError(f"{f.name} must be an integer, got {v!r}")
        if self.count < 0:
            raise RandomSpecError(f"count must be >= 0, got {self.count}")
        for name in ("syllables", "max_symbol", "max_abs_exponent"):
            if getattr(self, name) < 1:
                raise RandomSpecError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not 0 <= self.seed <= SEED_MAX:
            raise RandomSpecError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @classmethod
    def from_text(cls, text: str) -> "RandomSpec":
        """Parse ``key=value`` lines (``#`` starts a comment); missing keys keep defaults."""
        known = {f.name for f in fields(cls)}
        values = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not eq:
                raise RandomSpecError(f"line {lineno}: expected key=value, got {raw!r}")
            if key not in known:
                raise RandomSpecError(f"line {lineno}: unknown key {key!r}")
            try:
                values[key] = int(value.strip())
            except ValueError:
                raise RandomSpecError(f"line {lineno}: {key} is not an integer") from None
        return cls(**values)

    def to_text(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in asdict(self).items())


def random_word(rng: _random.Random, syllables: int, max_symbol: int,
                max_abs_exponent: int) -> Word:
    raw = []
    for _ in range(syllables):
        s = rng.randint(1, max_symbol)
        e = rng.randint(1, max_abs_exponent)
        if rng.random() < 0.5:
            e = -e
        raw.append((s, e))
    return Word(raw)


def random_words(spec: RandomSpec, rng: Optional[_random.Random] = None) -> WordVector:
    """``spec.count`` reduced words, each from ``spec.syllables`` raw draws.

    Passing ``rng`` continues an existing stream instead of seeding afresh.
    """
    if rng is None:
        rng = _random.Random(spec.seed)
    return WordVector(
        random_word(rng, spec.syllables, spec.max_symbol, spec.max_abs_exponent)
        for _ in range(spec.count)
    )


def rfree(count: int = 7, syllables: Optional[int] = None, max_symbol: Optional[int] = None,
          max_abs_exponent: int = 4, seed: int = 0) -> WordVector:
    """Random words with the call shape ``rfree(n, m)``.

    ``rfree(n, m)`` uses ``m`` for both the raw syllable count and the
    number of generators; ``rfree()`` gives 7 words of 5 syllables over 3
    generators.
    """
    if syllables is None:
        syllables, max_symbol = (5, 3) if max_symbol is None else (max_symbol, max_symbol)
    elif max_symbol is None:
        max_symbol = syllables
    return random_words(RandomSpec(count, syllables, max_symbol, max_abs_exponent, seed))
