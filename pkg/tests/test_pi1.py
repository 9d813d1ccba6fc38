import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus2mcg import pi1
from genus2mcg.pi1 import Handedness, Pi1Auto, compose, generator_halftwist, generator_letter
from genus2mcg.words import free_reduce, invert_letters

twist_letters = st.lists(st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5]), max_size=12)
free_letters = st.lists(st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5]), max_size=10).map(free_reduce)


def auto_of(letters, h=Handedness.STANDARD):
    f = Pi1Auto.identity()
    for a in letters:
        f = compose(f, generator_letter(a, h))
    return f


def test_halftwist_oracle():
    s1 = generator_halftwist(1)
    assert s1.image(1) == (1, 2, -1)
    assert s1.image(2) == (1,)
    assert s1.perm == (2, 1, 3, 4, 5, 6)


def test_inverse_halftwist_oracle():
    inv = pi1.inverse(generator_halftwist(2))
    assert inv.image(2) == (3,)
    assert inv.image(3) == (-3, 2, 3)
    assert inv == generator_letter(-2)


def test_square_of_halftwist_oracle():
    sq = compose(generator_halftwist(1), generator_halftwist(1))
    assert sq.image(2) == (1, 2, -1)
    assert sq.image(1) == (1, 2, 1, -2, -1)
    assert sq.perm == tuple(range(1, 7))


def test_last_halftwist_swaps_x5_and_x6():
    s5 = generator_halftwist(5)
    assert s5.perm == (1, 2, 3, 4, 6, 5)
    assert s5.image(6) == (5,)
    assert s5.preserves_peripheral_structure()


def test_out_of_range_halftwist():
    with pytest.raises(ValueError):
        generator_halftwist(6)


def test_braid_relations_hold_exactly():
    for i in range(1, 5):
        assert auto_of([i, i + 1, i]) == auto_of([i + 1, i, i + 1])
    for i in range(1, 6):
        for j in range(i + 2, 6):
            assert auto_of([i, j]) == auto_of([j, i])


def test_sphere_relation_is_inner():
    ok, w = pi1.is_inner_trivial(auto_of([1, 2, 3, 4, 5, 5, 4, 3, 2, 1]))
    assert ok
    f = auto_of([1, 2, 3, 4, 5] * 6)
    assert pi1.is_inner_trivial(f)[0]
    assert auto_of([1, 2, 3, 4, 5] * 3).perm == (4, 5, 6, 1, 2, 3)
    assert not pi1.is_inner_trivial(auto_of([1, 2, 3, 4, 5] * 3))[0]


def test_from_images_validates():
    with pytest.raises(pi1.NotAnAutomorphism):
        Pi1Auto.from_images([(1, 2), (2,), (3,), (4,), (5,)])
    with pytest.raises(pi1.NotAnAutomorphism):
        Pi1Auto.from_images([(1,), (1,), (3,), (4,), (5,)])
    assert Pi1Auto.from_images(generator_halftwist(3).images) == generator_halftwist(3)


def test_conjugation_witness():
    u = (2, -5, 1)
    ok, w = pi1.is_inner_trivial(pi1.conjugation(u))
    assert ok and w == u


@given(free_letters)
def test_conjugation_witness_is_the_conjugator(u):
    ok, w = pi1.is_inner_trivial(pi1.conjugation(u))
    assert ok and w == u


@given(twist_letters)
def test_inverse_composes_to_identity(u):
    f = auto_of(u)
    g = pi1.inverse(f)
    assert compose(f, g) == Pi1Auto.identity()
    assert compose(g, f) == Pi1Auto.identity()
    assert g == auto_of(invert_letters(u))


@given(twist_letters, free_letters)
def test_shorten_and_conjugation_keep_outer_class(u, w):
    f = auto_of(u)
    g = pi1.conjugate_by(f, w)
    assert pi1.canonical_outer(g) == pi1.canonical_outer(f)
    s = pi1.shorten(g)
    assert pi1.canonical_outer(s) == pi1.canonical_outer(f)
    assert s.total_length() <= g.total_length()


@given(twist_letters)
def test_images_keep_peripheral_structure(u):
    assert auto_of(u).preserves_peripheral_structure()
    assert auto_of(u, Handedness.MIRRORED).preserves_peripheral_structure()
