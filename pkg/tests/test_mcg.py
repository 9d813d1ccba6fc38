import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus2mcg import homology as hom
from genus2mcg.mcg import (
    MappingClass,
    describe,
    equal_mod2,
    evaluate_word,
    get_convention,
    is_hyperelliptic_involution,
    is_identity_mod2,
    is_inner_trivial,
    using_convention,
)
from genus2mcg.pi1 import Handedness
from genus2mcg.words import PUNCTURES, AlphabetMismatch, Word, free_reduce, invert_letters

letters = st.lists(st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5]), max_size=12)

IOTA = (1, 2, 3, 4) * 5


def ev(*letters):
    return evaluate_word(letters)


@pytest.mark.parametrize("h", list(Handedness))
def test_standard_relations(h):
    with using_convention(h):
        for i in range(1, 5):
            assert equal_mod2(ev(i, i + 1, i), ev(i + 1, i, i + 1))
        assert equal_mod2(ev(1, 3), ev(3, 1))
        assert equal_mod2(ev(2, 5), ev(5, 2))
        assert is_identity_mod2(ev(*(1, 2, 3, 4) * 10))
        assert is_identity_mod2(ev(*(1, 2, 3, 4, 5) * 6))
        assert not is_identity_mod2(ev(*(1, 2, 3, 4, 5) * 3))


def test_hyperelliptic_involution():
    iota = ev(*IOTA)
    assert is_hyperelliptic_involution(iota)
    assert not is_identity_mod2(iota)
    assert iota == ev(1, 2, 3, 4, 5, 5, 4, 3, 2, 1)
    assert is_identity_mod2(iota * iota)
    for i in range(1, 6):
        assert iota * ev(i) == ev(i) * iota
    d = describe(iota)
    assert d["verdict"].startswith("hyperelliptic involution")
    assert d["sp"] == hom.format_matrix(hom.MINUS_IDENTITY)


def test_order_six_rotation_is_not_iota():
    r3 = ev(*(1, 2, 3, 4, 5) * 3)
    assert not is_hyperelliptic_involution(r3)
    assert r3.auto.perm == (4, 5, 6, 1, 2, 3)
    assert r3.sp != hom.MINUS_IDENTITY
    assert is_identity_mod2(r3 * r3)


def test_single_twist_is_nontrivial_everywhere():
    d = describe(ev(1))
    assert d["verdict"] == "nontrivial"
    assert d["punctures"] == "2 1 3 4 5 6"


def test_rejects_puncture_words():
    with pytest.raises(AlphabetMismatch):
        evaluate_word(Word((1,), PUNCTURES))


def test_identity_and_inverse():
    assert is_identity_mod2(MappingClass.identity())
    m = ev(1, -3, 4, 4, 2)
    assert is_identity_mod2(m * m.inverse())
    assert m.inverse() == ev(-2, -4, -4, 3, -1)


def test_conjugate():
    a, u = ev(1), ev(2)
    assert a.conjugate(u) == ev(2, 1, -2)


def test_convention_context_restores():
    before = get_convention()
    with using_convention(Handedness.MIRRORED):
        assert get_convention() is Handedness.MIRRORED
    assert get_convention() is before


@given(letters, letters)
def test_evaluation_is_a_homomorphism(u, v):
    assert ev(*u) * ev(*v) == ev(*(u + v))
    assert (ev(*u) * ev(*v)).sp == hom.matmul(hom.sp_of_letters(u), hom.sp_of_letters(v))


@given(letters)
def test_iota_is_detected_in_every_conjugate(u):
    m = ev(*u) * ev(*IOTA) * ev(*invert_letters(u))
    assert is_hyperelliptic_involution(m)
    assert not is_identity_mod2(m)
    assert is_identity_mod2(m * m)


@given(letters)
def test_inner_witness_reverifies(u):
    m = ev(*u) * ev(*IOTA) * ev(*invert_letters(u))
    ok, w = is_inner_trivial(m)
    assert ok
    wi = invert_letters(w)
    for i in range(1, 6):
        assert m.auto.image(i) == free_reduce(w + (i,) + wi)


@given(letters)
def test_equality_ignores_spelling(u):
    m = ev(*u)
    assert m == ev(*(tuple(u) + (1, 2) * 6 + (-1, -2) * 6))
    assert hash(m) == hash(ev(*(tuple(u) + (1, 2, 3, 4) * 10)))
