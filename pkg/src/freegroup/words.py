"""Reduced words in a free group and the operations on single words.

A word is stored as a tuple of ``(symbol, exponent)`` syllables.  Symbols are
1-based generator ids; adjacent syllables never share a symbol and no
exponent is zero, so two words are equal as group elements exactly when
their syllable tuples are equal.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Tuple

from .errors import ExponentOverflowError, InvalidSymbolError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class Syllable(NamedTuple):
    symbol: int
    exponent: int


def _check_exponent(e: int) -> int:
    if not INT64_MIN <= e <= INT64_MAX:
        raise ExponentOverflowError(f"exponent {e} does not fit in 64 bits")
    return e


def _check_symbol(s) -> int:
    if isinstance(s, bool) or not isinstance(s, int):
        raise InvalidSymbolError(f"symbol must be an integer, got {s!r}")
    if s < 1:
        raise InvalidSymbolError(f"symbol must be >= 1, got {s}")
    return s


def _push(stack: list, symbol: int, exponent: int) -> None:
    # one step of the stack reduction; cascades because the next push sees the new top
    if exponent == 0:
        return
    if stack and stack[-1][0] == symbol:
        e = _check_exponent(stack[-1][1] + exponent)
        if e == 0:
            stack.pop()
        else:
            stack[-1] = Syllable(symbol, e)
    else:
        stack.append(Syllable(symbol, exponent))


class Word:
    """An element of the free group, always held in reduced form.

    ``Word(pairs)`` reduces its input, so any sequence of ``(symbol,
    exponent)`` pairs is accepted, zero exponents included.

    Operators follow the package idiom: ``+`` juxtaposes, unary and binary
    ``-`` invert, ``*`` repeats by an integer (either side), and ``^``
    conjugates, ``x ^ y == -y + x + y``.  Python gives ``^`` a lower
    precedence than ``+``, so parenthesise: ``(u ^ y) + z``.
    """

    __slots__ = ("_syllables", "_hash")

    def __init__(self, pairs: Iterable[Sequence[int]] = ()):
        stack: list = []
        for pair in pairs:
            s, e = pair
            _check_symbol(s)
            if isinstance(e, bool) or not isinstance(e, int):
                raise InvalidSymbolError(f"exponent must be an integer, got {e!r}")
            _push(stack, s, _check_exponent(e))
        self._syllables: Tuple[Syllable, ...] = tuple(stack)
        self._hash = None

    @classmethod
    def _trusted(cls, syllables) -> "Word":
        w = cls.__new__(cls)
        w._syllables = tuple(syllables)
        w._hash = None
        return w

    @classmethod
    def from_reduced(cls, pairs: Iterable[Sequence[int]]) -> "Word":
        """Build a word from pairs that must already be reduced.

        Unlike the constructor this does no merging: it raises
        :class:`InvalidSymbolError` if a zero exponent or two adjacent equal
        symbols are present.
        """
        out = []
        for s, e in pairs:
            _check_symbol(s)
            _check_exponent(e)
            if e == 0:
                raise InvalidSymbolError("zero exponent in reduced word")
            if out and out[-1][0] == s:
                raise InvalidSymbolError(f"adjacent syllables share symbol {s}")
            out.append(Syllable(s, e))
        return cls._trusted(out)

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def generator(cls, symbol: int, exponent: int = 1) -> "Word":
        return cls([(symbol, exponent)])

    @property
    def syllables(self) -> Tuple[Syllable, ...]:
        return self._syllables

    def __len__(self) -> int:
        return len(self._syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self._syllables)

    def __bool__(self) -> bool:
        return bool(self._syllables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._syllables == other._syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Word", self._syllables))
        return self._hash

    def __repr__(self) -> str:
        return f"Word({[tuple(s) for s in self._syllables]!r})"

    def __str__(self) -> str:
        from .textio import format_word

        return format_word(self)

    def __add__(self, other):
        if isinstance(other, Word):
            return concat(self, other)
        return NotImplemented

    def __neg__(self) -> "Word":
        return inverse(self)

    def __sub__(self, other):
        if isinstance(other, Word):
            return concat(self, inverse(other))
        return NotImplemented

    def __mul__(self, n):
        if isinstance(n, int) and not isinstance(n, bool):
            return repeat(self, n)
        return NotImplemented

    __rmul__ = __mul__

    def __xor__(self, other):
        if isinstance(other, Word):
            return conjugate(self, other)
        return NotImplemented

    def is_identity(self) -> bool:
        return not self._syllables

    def abelianize(self) -> "AbelianWord":
        return abelianize(self)

    def symbols(self) -> frozenset:
        return frozenset(s for s, _ in self._syllables)


_IDENTITY = Word._trusted(())


class AbelianWord:
    """Image of a word under abelianization: per-symbol exponent totals.

    Terms are kept sorted by symbol with zero totals dropped, so equality is
    plain tuple equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, totals: Mapping[int, int] | Iterable[Sequence[int]] = ()):
        acc: dict = {}
        items = totals.items() if isinstance(totals, Mapping) else totals
        for s, e in items:
            _check_symbol(s)
            acc[s] = _check_exponent(acc.get(s, 0) + e)
        self._terms = tuple(
            Syllable(s, e) for s, e in sorted(acc.items()) if e != 0
        )

    @property
    def terms(self) -> Tuple[Syllable, ...]:
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianWord):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(("AbelianWord", self._terms))

    def __add__(self, other):
        if not isinstance(other, AbelianWord):
            return NotImplemented
        return AbelianWord(self._terms + other._terms)

    def __neg__(self) -> "AbelianWord":
        return AbelianWord([(s, -e) for s, e in self._terms])

    def __repr__(self) -> str:
        return f"AbelianWord({self.as_dict()!r})"

    def __str__(self) -> str:
        from .textio import format_word

        return format_word(Word._trusted(self._terms))


def reduce(raw: Iterable[Sequence[int]]) -> Word:
    """Reduce a raw sequence of ``(symbol, exponent)`` pairs.

    Zero exponents are dropped and neighbouring powers of one symbol are
    merged; a merge that produces zero deletes the syllable, which may in
    turn bring two equal symbols together.

    >>> str(reduce([(1, 2), (2, -3), (3, 2), (3, 3), (1, -2)]))
    'a^2.b^-3.c^5.a^-2'
    """
    return Word(raw)


def concat(x: Word, y: Word) -> Word:
    """Juxtapose two reduced words; cancellation can only occur at the seam."""
    if not y._syllables:
        return x
    if not x._syllables:
        return y
    left = list(x._syllables)
    ys = y._syllables
    i = 0
    while left and i < len(ys) and left[-1][0] == ys[i][0]:
        e = _check_exponent(left[-1][1] + ys[i][1])
        if e:
            left[-1] = Syllable(ys[i][0], e)
            i += 1
            break
        left.pop()
        i += 1
    left.extend(ys[i:])
    return Word._trusted(left)


def inverse(x: Word) -> Word:
    out = []
    for s, e in reversed(x._syllables):
        out.append(Syllable(s, _check_exponent(-e)))
    return Word._trusted(out)


def repeat(x: Word, n: int) -> Word:
    """Concatenate ``n`` copies of ``x``; negative ``n`` repeats the inverse."""
    if n < 0:
        return repeat(inverse(x), -n)
    result = _IDENTITY
    base = x
    # binary powering keeps huge exponents on a single syllable cheap
    while n:
        if n & 1:
            result = concat(result, base)
        n >>= 1
        if n:
            base = concat(base, base)
    return result


def conjugate(x: Word, y: Word) -> Word:
    """``x^y``, that is ``y⁻¹ x y``."""
    return concat(concat(inverse(y), x), y)


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x⁻¹ y⁻¹ x y``."""
    return concat(concat(concat(inverse(x), inverse(y)), x), y)


def abelianize(x: Word) -> AbelianWord:
    return AbelianWord(x._syllables)


def is_identity(x: Word) -> bool:
    return not x._syllables


def equal(x: Word, y: Word) -> bool:
    return x._syllables == y._syllables
