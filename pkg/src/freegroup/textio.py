"""Alphabets, printing and parsing of words, and interchange formats.

The canonical notation joins syllables with ``.`` and writes exponents other
than 1 after ``^``: ``a^2.b^-3.c^5.a^-2``.  The identity is written ``0``.
"""

from __future__ import annotations

import json
import re
import string
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, List, Sequence, Tuple

from .errors import AlphabetError, ParseError
from .vector import WordVector
from .words import INT64_MAX, INT64_MIN, AbelianWord, Word, _check_exponent

#: characters a generator name may not contain; they are syntax in the
#: canonical notation or in the expression language
RESERVED = frozenset("^.-+*()[],:=#\"'") | frozenset(string.digits)

NA = "NA"


@dataclass(frozen=True)
class Alphabet:
    """Display names for generators; ``names[i - 1]`` labels generator ``i``."""

    names: Tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        seen = {}
        for i, name in enumerate(names, 1):
            if not isinstance(name, str) or not name:
                raise AlphabetError(f"name {i} is empty")
            bad = [c for c in name if c in RESERVED or c.isspace()]
            if bad:
                raise AlphabetError(f"name {name!r} contains reserved character {bad[0]!r}")
            if name in seen:
                raise AlphabetError(f"duplicate name {name!r} at positions {seen[name]} and {i}")
            seen[name] = i
        object.__setattr__(self, "_index", seen)

    @classmethod
    def from_lines(cls, text: str) -> "Alphabet":
        """One name per line; blank lines are skipped."""
        return cls(tuple(line.strip() for line in text.splitlines() if line.strip()))

    @classmethod
    def from_file(cls, path: str | PathLike) -> "Alphabet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh.read())

    def __len__(self) -> int:
        return len(self.names)

    def name(self, symbol: int, strict: bool = True) -> str:
        if 1 <= symbol <= len(self.names):
            return self.names[symbol - 1]
        if strict:
            raise AlphabetError(
                f"generator {symbol} is outside the alphabet of {len(self.names)} names"
            )
        return NA

    def symbol(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown generator name {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index


DEFAULT_ALPHABET = Alphabet(tuple(string.ascii_lowercase))


def format_word(
    x: Word | AbelianWord, alphabet: Alphabet = DEFAULT_ALPHABET, strict: bool = False
) -> str:
    """Render a word in canonical notation.

    Symbols past the end of ``alphabet`` print as ``NA`` unless ``strict``
    is set, in which case :class:`AlphabetError` is raised.

    >>> format_word(Word([(1, 2), (2, -3), (3, 5), (1, -2)]))
    'a^2.b^-3.c^5.a^-2'
    """
    terms = x.terms if isinstance(x, AbelianWord) else x.syllables
    if not terms:
        return "0"
    parts = []
    for s, e in terms:
        name = alphabet.name(s, strict)
        parts.append(name if e == 1 else f"{name}^{e}")
    return ".".join(parts)


def format_vector(xs: Iterable[Word], alphabet: Alphabet = DEFAULT_ALPHABET,
                  strict: bool = False) -> List[str]:
    return [format_word(w, alphabet, strict) for w in xs]


_EXPONENT = re.compile(r"[+-]?[0-9]+\Z")


def parse_canonical(s: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> Word:
    """Parse canonical notation; the input need not be reduced."""
    text = s.strip()
    offset = len(s) - len(s.lstrip())
    if text == "0":
        return Word.identity()
    if not text:
        raise ParseError("empty word; the identity is written 0", offset)
    pairs = []
    pos = offset
    for term in text.split("."):
        name, caret, exp = term.partition("^")
        if not name:
            raise ParseError("missing generator name", pos)
        if name not in alphabet:
            raise ParseError(f"unknown generator name {name!r}", pos)
        if caret:
            if not _EXPONENT.match(exp):
                raise ParseError(f"malformed exponent {exp!r}", pos + len(name) + 1)
            e = int(exp)
            if e == 0:
                raise ParseError("zero exponent", pos + len(name) + 1)
            if not INT64_MIN <= e <= INT64_MAX:
                raise ParseError(f"exponent {e} does not fit in 64 bits", pos + len(name) + 1)
        else:
            e = 1
        pairs.append((alphabet.symbol(name), e))
        pos += len(term) + 1
    return Word(pairs)


def parse_compact(s: str) -> Word:
    """Parse a run of letters such as ``aabbbcccc``.

    Lowercase letters are generators of the default alphabet; uppercase
    letters are their inverses, so ``aA`` is the identity.
    """
    pairs = []
    for i, c in enumerate(s):
        if c in string.ascii_lowercase:
            pairs.append((ord(c) - ord("a") + 1, 1))
        elif c in string.ascii_uppercase:
            pairs.append((ord(c) - ord("A") + 1, -1))
        else:
            raise ParseError(f"non-letter character {c!r}", i)
    return Word(pairs)


def from_matrix(top: Sequence[int], bottom: Sequence[int]) -> Word:
    """Word from a two-row matrix: generator ids on top, powers underneath."""
    if len(top) != len(bottom):
        raise ParseError(f"matrix rows differ in length: {len(top)} and {len(bottom)}")
    return Word(zip(top, bottom))


def to_matrix(x: Word) -> Tuple[List[int], List[int]]:
    return [s for s, _ in x], [e for _, e in x]


def format_matrix_csv(x: Word) -> str:
    top, bottom = to_matrix(x)
    return ",".join(map(str, top)) + "\n" + ",".join(map(str, bottom))


def _csv_ints(line: str, lineno: int) -> List[int]:
    line = line.strip()
    if not line:
        return []
    out = []
    for k, cell in enumerate(line.split(",")):
        cell = cell.strip()
        if not _EXPONENT.match(cell):
            raise ParseError(f"line {lineno}: field {k + 1} is not an integer: {cell!r}")
        out.append(int(cell))
    return out


def parse_matrix_csv(text: str) -> Word:
    """Parse a word from two comma-separated lines (symbols, then exponents)."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) == 1 and not lines[0].strip():
        lines = []
    if len(lines) not in (0, 2):
        raise ParseError(f"expected two matrix rows, got {len(lines)}")
    if not lines:
        return Word.identity()
    return from_matrix(_csv_ints(lines[0], 1), _csv_ints(lines[1], 2))


def serialize(xs: Iterable[Word]) -> str:
    """Encode words as a JSON list of ``[symbol, exponent]`` pair lists."""
    return json.dumps([[[s, e] for s, e in w] for w in xs], separators=(",", ":"))


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def deserialize(s: str) -> WordVector:
    """Inverse of :func:`serialize`; validates every syllable and reduces."""
    try:
        data = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error: {exc.msg}", exc.pos) from None
    if not isinstance(data, list):
        raise ParseError("top level must be a list of words")
    out = []
    for i, word in enumerate(data):
        if not isinstance(word, list):
            raise ParseError(f"word {i}: expected a list of [symbol, exponent] pairs")
        pairs = []
        for j, pair in enumerate(word):
            where = f"word {i}, syllable {j}"
            if not (isinstance(pair, list) and len(pair) == 2
                    and _is_int(pair[0]) and _is_int(pair[1])):
                raise ParseError(f"{where}: expected [symbol, exponent] integers")
            sym, exp = pair
            if sym < 1:
                raise ParseError(f"{where}: symbol {sym} is below 1")
            if exp == 0:
                raise ParseError(f"{where}: zero exponent")
            try:
                _check_exponent(exp)
            except OverflowError as exc:
                raise ParseError(f"{where}: {exc}") from None
            pairs.append((sym, exp))
        try:
            out.append(Word(pairs))
        except OverflowError as exc:
            raise ParseError(f"word {i}: {exc}") from None
    return WordVector(out)
