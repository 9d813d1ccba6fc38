import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus2mcg.words import (
    PUNCTURES,
    TWISTS,
    AlphabetMismatch,
    Letter,
    Word,
    concat,
    cyclic_reduce,
    free_reduce,
    invert,
    is_cyclically_reduced,
    min_cyclic_rotation,
    reduce,
    rotate,
)

letters = st.lists(st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5]), max_size=20)


def test_free_reduce_cancels_adjacent_inverses():
    assert free_reduce([1, 2, -2, -1, 3]) == (3,)
    assert free_reduce([1, -1]) == ()
    assert free_reduce([2, 1, -1, 1]) == (2, 1)


def test_word_rejects_unreduced_letters():
    with pytest.raises(ValueError):
        Word((1, -1))
    with pytest.raises(ValueError):
        Word((6,))


def test_group_operations():
    a, b = Word.gen(1), Word.gen(2)
    assert str(a * b * ~a) == "t1 t2 t1'"
    assert (a * b) ** 3 == Word((1, 2, 1, 2, 1, 2))
    assert (a * b) ** -1 == Word((-2, -1))
    assert str(Word.identity()) == "1"
    assert (a * ~a).is_identity()


def test_alphabets_do_not_mix():
    with pytest.raises(AlphabetMismatch):
        concat(Word.gen(1), Word.gen(1, PUNCTURES))
    assert str(Word((1, -6), PUNCTURES)) == "x1 x6'"


def test_letters():
    assert Word((3, -2)).as_letters() == [Letter(3, 1), Letter(2, -1)]
    assert Letter.from_code(-4).code == -4
    assert reduce([Letter(1, 1), Letter(1, -1), 2], TWISTS) == Word((2,))


def test_cyclic_reduction():
    core, conj = cyclic_reduce(Word((1, 2, 3, -1)))
    assert core == Word((2, 3)) and conj == Word((1,))
    assert is_cyclically_reduced((1, 2))
    assert not is_cyclically_reduced((1, 2, -1))


def test_min_rotation_and_rotate():
    assert min_cyclic_rotation(Word((3, 1, 2))) == Word((1, 2, 3))
    assert rotate(Word((1, 2, 3)), 1) == Word((2, 3, 1))
    with pytest.raises(ValueError):
        min_cyclic_rotation(Word((1, 2, -1)))


@given(letters, letters)
def test_inverse_is_two_sided(u, v):
    w = Word(free_reduce(u))
    assert (w * ~w).is_identity() and (~w * w).is_identity()
    assert invert(concat(w, Word(free_reduce(v)))) == concat(invert(Word(free_reduce(v))), invert(w))


@given(letters)
def test_reduction_is_idempotent(u):
    r = free_reduce(u)
    assert free_reduce(r) == r
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))


@given(letters)
def test_cyclic_reduce_recovers_word(u):
    w = Word(free_reduce(u))
    core, conj = cyclic_reduce(w)
    assert conj * core * ~conj == w
    assert is_cyclically_reduced(core.letters)
