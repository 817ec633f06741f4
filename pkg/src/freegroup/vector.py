"""Vectors of words with elementwise operations and recycling.

Binary operations pair the i-th elements of both operands.  A shorter
operand is recycled cyclically, but only when its length divides the longer
one; anything else raises :class:`RecyclingError` rather than silently
truncating a cycle.  An empty operand gives an empty result.
"""

from __future__ import annotations

from typing import Callable, Iterable, List, Sequence, TypeVar, overload

from . import words as _w
from .errors import RecyclingError
from .words import AbelianWord, Word

T = TypeVar("T")
U = TypeVar("U")


def recycled_length(n: int, m: int) -> int:
    if n == m:
        return n
    short, long_ = min(n, m), max(n, m)
    if short == 0:
        return 0
    if long_ % short:
        raise RecyclingError(
            f"operand lengths {n} and {m} are incompatible: {short} does not divide {long_}"
        )
    return long_


def recycle(xs: Sequence[T], ys: Sequence[U]) -> List[tuple]:
    """Pair up two sequences under the recycling rule."""
    n = recycled_length(len(xs), len(ys))
    return [(xs[i % len(xs)], ys[i % len(ys)]) for i in range(n)]


class WordVector(Sequence[Word]):
    """An immutable ordered collection of :class:`Word`.

    Arithmetic mirrors :class:`Word` but acts elementwise, with plain words
    and integers treated as length-1 operands.  ``==`` is whole-vector
    equality; use :func:`equal_vec` for the elementwise comparison.
    """

    __slots__ = ("_items",)

    def __init__(self, items: Iterable[Word] = ()):
        items = tuple(items)
        for w in items:
            if not isinstance(w, Word):
                raise TypeError(f"WordVector items must be Word, got {type(w).__name__}")
        self._items = items

    @overload
    def __getitem__(self, i: int) -> Word: ...
    @overload
    def __getitem__(self, i: slice) -> "WordVector": ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return WordVector(self._items[i])
        return self._items[i]

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, WordVector):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("WordVector", self._items))

    def __repr__(self) -> str:
        return f"WordVector([{', '.join(str(w) for w in self._items)}])"

    def __add__(self, other):
        return zip_op(_w.concat, self, _as_vector(other))

    def __radd__(self, other):
        return zip_op(_w.concat, _as_vector(other), self)

    def __sub__(self, other):
        return zip_op(lambda x, y: _w.concat(x, _w.inverse(y)), self, _as_vector(other))

    def __rsub__(self, other):
        return zip_op(lambda x, y: _w.concat(x, _w.inverse(y)), _as_vector(other), self)

    def __neg__(self) -> "WordVector":
        return WordVector(_w.inverse(w) for w in self._items)

    def __mul__(self, n):
        ns = [n] if isinstance(n, int) else list(n)
        return zip_op(_w.repeat, self, ns)

    __rmul__ = __mul__

    def __xor__(self, other):
        return zip_op(_w.conjugate, self, _as_vector(other))

    def __rxor__(self, other):
        return zip_op(_w.conjugate, _as_vector(other), self)

    def sum(self) -> Word:
        return word_sum(self)


def _as_vector(x) -> Sequence[Word]:
    if isinstance(x, Word):
        return (x,)
    if isinstance(x, WordVector):
        return x
    if isinstance(x, (list, tuple)):
        return WordVector(x)
    raise TypeError(f"expected Word or WordVector, got {type(x).__name__}")


def zip_op(op: Callable[[T, U], Word], xs: Sequence[T], ys: Sequence[U]) -> WordVector:
    """Apply a binary word operation elementwise under recycling.

    ``ys`` may hold non-words (integers for :func:`~freegroup.words.repeat`).
    """
    return WordVector(op(x, y) for x, y in recycle(xs, ys))


def map_op(op: Callable[[Word], T], xs: Sequence[Word]) -> list:
    return [op(x) for x in xs]


def word_sum(xs: Iterable[Word]) -> Word:
    """Juxtapose all elements left to right; the empty sum is the identity."""
    total = Word.identity()
    for w in xs:
        total = _w.concat(total, w)
    return total


def commutator_vec(xs: Sequence[Word], ys: Sequence[Word]) -> WordVector:
    return zip_op(_w.commutator, xs, ys)


def abelianize_vec(xs: Sequence[Word]) -> List[AbelianWord]:
    return map_op(_w.abelianize, xs)


def is_identity_vec(xs: Sequence[Word]) -> List[bool]:
    return map_op(_w.is_identity, xs)


def equal_vec(xs: Sequence[Word], ys: Sequence[Word]) -> List[bool]:
    return [_w.equal(x, y) for x, y in recycle(xs, ys)]


def alpha(symbols: int | Iterable[int]) -> WordVector:
    """Single-generator words, one per requested symbol."""
    if isinstance(symbols, int):
        symbols = [symbols]
    return WordVector(Word.generator(s) for s in symbols)


def abc(lengths: int | Iterable[int]) -> WordVector:
    """Cumulative products ``a``, ``a.b``, ``a.b.c``, ... for each requested length."""
    if isinstance(lengths, int):
        lengths = [lengths]
    return WordVector(Word([(s, 1) for s in range(1, n + 1)]) for n in lengths)
