import pytest
from hypothesis import given, strategies as st

from freegroup import (
    RecyclingError,
    Word,
    WordVector,
    abc,
    abelianize_vec,
    alpha,
    commutator,
    conjugate,
    equal_vec,
    inverse,
    is_identity_vec,
    repeat,
    word_sum,
    zip_op,
)
from freegroup.vector import recycled_length
from gen import words

X = Word([(1, 2), (2, -3), (3, 5), (1, -2)])
E = Word.identity()


def test_repeat_over_integer_range():
    out = zip_op(repeat, [X], range(4))
    assert list(out) == [E, X, repeat(X, 2), repeat(X, 3)]
    assert list(WordVector([X]) * range(4)) == list(out)


def test_singleton_conjugation_broadcasts():
    u = WordVector(Word([(i % 4 + 1, i + 1)]) for i in range(10))
    z = Word.generator(26)
    out = zip_op(conjugate, u, [z])
    assert len(out) == 10
    assert list(out) == [conjugate(w, z) for w in u]
    assert (u ^ z) == out


def test_incompatible_lengths():
    with pytest.raises(RecyclingError):
        zip_op(conjugate, [X, X], [X, X, X])
    assert zip_op(conjugate, [], [X]) == WordVector()
    assert zip_op(conjugate, [X, X], []) == WordVector()


@pytest.mark.parametrize("n, m, expected", [(3, 3, 3), (1, 5, 5), (2, 6, 6), (6, 3, 6), (0, 0, 0), (0, 4, 0)])
def test_recycled_length(n, m, expected):
    assert recycled_length(n, m) == expected


def test_divisor_recycling():
    xs = alpha([1, 2])
    ys = alpha([3, 4, 5, 6])
    assert [str(w) for w in xs + ys] == ["a.c", "b.d", "a.e", "b.f"]


def test_sum():
    assert word_sum([]) == E
    assert word_sum([X, inverse(X)]) == E
    assert WordVector([X, X]).sum() == repeat(X, 2)


@given(st.lists(words, max_size=6), words)
def test_sum_commutes_with_conjugation(u, z):
    assert word_sum(zip_op(conjugate, u, [z])) == conjugate(word_sum(u), z)


@given(st.lists(words, min_size=1, max_size=6), words)
def test_singleton_operand_is_map(u, y):
    assert list(zip_op(commutator, u, [y])) == [commutator(x, y) for x in u]
    assert zip_op(commutator, u, [y]) == zip_op(commutator, u, [y])


def test_predicates():
    u = WordVector([X, Word.generator(2), E])
    assert is_identity_vec(u - u) == [True, True, True]
    assert is_identity_vec(u) == [False, False, True]
    assert equal_vec(u, [X]) == [True, False, False]
    with pytest.raises(RecyclingError):
        equal_vec(u, [X, X])


def test_constructors():
    assert [str(w) for w in alpha(range(1, 10))] == list("abcdefghi")
    assert [str(w) for w in abc(range(1, 5))] == ["a", "a.b", "a.b.c", "a.b.c.d"]
    assert alpha(3) == WordVector([Word.generator(3)])


def test_operators_and_types():
    v = WordVector([X])
    assert list(-v) == [inverse(X)]
    assert list(X + v) == [X + X]
    assert list(v - X) == [E]
    assert list(2 * v) == [repeat(X, 2)]
    assert v[0:1] == v
    assert abelianize_vec(v)[0].as_dict() == {2: -3, 3: 5}
    with pytest.raises(TypeError):
        WordVector(["a"])
