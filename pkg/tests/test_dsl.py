import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus2mcg.curves import builtin_library
from genus2mcg.dsl import (
    ParseError,
    Scope,
    format_certificate,
    format_factorization,
    format_word,
    parse_certificate,
    parse_factorization,
    parse_word,
)
from genus2mcg.factorization import CyclicShift, GlobalConjugate, HurwitzLeft, HurwitzRight, classify
from genus2mcg.words import Word, free_reduce

words = st.lists(st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5]), max_size=25).map(lambda u: Word(free_reduce(u)))


@pytest.fixture(scope="module")
def lib():
    return builtin_library()


def test_basic_terms():
    assert parse_word("t1 t2' t3") == Word((1, -2, 3))
    assert parse_word("(t1 t2)^3") == Word((1, 2) * 3)
    assert parse_word("(t1 t2)^-1") == Word((-2, -1))
    assert parse_word("(t1 t2)'") == Word((-2, -1))
    assert parse_word("t1 t1'") == Word.identity()
    assert parse_word("I") == parse_word("") == Word.identity()


def test_compact_mode():
    assert parse_word("2112", compact=True) == Word((2, 1, 1, 2))
    assert parse_word("(12)^6", compact=True) == Word((1, 2) * 6)
    assert parse_word("4'3'", compact=True) == Word((-4, -3))
    with pytest.raises(ParseError):
        parse_word("2112")
    with pytest.raises(ParseError):
        parse_word("6", compact=True)


def test_named_twists(lib):
    assert parse_word("@sigma", lib) == Word((1, 2) * 6)
    assert parse_word("@c3'", lib) == Word((-3,))
    with pytest.raises(ParseError):
        parse_word("@nope", lib)
    with pytest.raises(ParseError):
        parse_word("@sigma")


@pytest.mark.parametrize("bad", ["t6", "t1 (t2", "t1 )", "t1 ^", "t1 $", "^2"])
def test_errors(bad):
    with pytest.raises(ParseError):
        parse_word(bad)


def test_format_word():
    assert format_word(Word((1, 1, -2, 3, 3, 3))) == "t1^2 t2' t3^3"
    assert format_word(Word((-1, -1))) == "t1^-2"
    assert format_word(Word.identity()) == "I"


@given(words)
def test_print_parse_round_trip(w):
    assert parse_word(format_word(w)) == w
    if w.letters:
        assert parse_word(str(w)) == w


def test_scope_directives(lib):
    scope = Scope(lib.copy())
    assert scope.directive("compact on", 1)
    assert scope.directive("word W = 43211234", 2)
    assert scope.parse("@W") == Word((4, 3, 2, 1, 1, 2, 3, 4))
    assert scope.directive("curve z = apply 1 to c2 nonseparating", 3)
    assert scope.parse("@z") == Word((1, 2, -1))
    assert not scope.directive("@W = I", 4)
    with pytest.raises(ParseError) as err:
        scope.directive("word W = 1", 7)
    assert err.value.line == 7


def test_factorization_file(lib):
    text = "# seven twists\nalpha: @alpha\n@D\n@sigma\ncompact on\n2112 3 (2112)'\n@E\n@gamma\n@F\n@G\n"
    f = parse_factorization(text, lib, "h")
    assert len(f) == 8
    assert f.labels[:2] == ["alpha", "@D"]
    assert str(classify(f)) == "(5,3)"
    g = parse_factorization(format_factorization(f), lib)
    assert [e.word for e in g.entries] == [e.word for e in f.entries]
    with pytest.raises(ParseError) as err:
        parse_factorization("t1\nt7\n", lib)
    assert err.value.line == 2


def test_certificate_round_trip(lib):
    text = "# example\nconj t1^-2 t5\nhurwitzR 4\nhurwitzL 1\nshift 3\n"
    moves = parse_certificate(text, lib)
    assert moves == [GlobalConjugate(Word((-1, -1, 5))), HurwitzRight(4), HurwitzLeft(1), CyclicShift(3)]
    assert parse_certificate(format_certificate(moves), lib) == moves
    for bad in ["hurwitzX 1", "shift x", "hurwitzL"]:
        with pytest.raises(ParseError):
            parse_certificate(bad, lib)
