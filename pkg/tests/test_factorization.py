import pytest

from genus2mcg.curves import builtin_library
from genus2mcg.factorization import (
    CyclicShift,
    Factorization,
    FactorizationType,
    GlobalConjugate,
    HurwitzLeft,
    HurwitzRight,
    MoveError,
    apply_move,
    apply_moves,
    builtin_factorizations,
    classify,
    evaluate,
    inverse_move,
    is_relation,
    tuples_equal,
)
from genus2mcg.mcg import evaluate_word
from genus2mcg.words import Word


@pytest.fixture(scope="module")
def facts():
    return builtin_factorizations()


def gens(*idx):
    return Factorization.from_words([Word.gen(i) for i in idx])


@pytest.mark.parametrize("name", ["bk", "hamada", "xiao"])
def test_builtin_relations(facts, name):
    f = facts[name]
    assert len(f) == 7
    assert is_relation(f)
    assert classify(f) == FactorizationType(4, 3)


def test_separating_entries(facts):
    def seps(name):
        return {e.label for e in facts[name].entries if e.separating}

    assert seps("bk") == {"e", "d", "C"}
    assert seps("hamada") == {"alpha", "sigma", "gamma"}
    assert seps("xiao") == {"Q3", "Q2", "Q1"}
    assert str(classify(facts["bk"])) == "(4,3)"


def test_simple_types():
    assert classify(gens(1, 2, 3)) == FactorizationType(3, 0)
    assert not is_relation(gens(1, 2, 3))
    assert not is_relation(Factorization.from_words([Word((1, 2) * 6)]))
    assert is_relation(gens(*(1, 2, 3, 4) * 10))


def test_hurwitz_moves_oracle():
    f = gens(1, 2)
    left = apply_move(f, HurwitzLeft(1))
    assert [e.word for e in left.entries] == [Word((1, 2, -1)), Word((1,))]
    right = apply_move(f, HurwitzRight(1))
    assert [e.word for e in right.entries] == [Word((2,)), Word((-2, 1, 2))]
    assert left.labels == ["t1(t2)", "t1"]
    assert evaluate(left) == evaluate(f) == evaluate(right)


def test_shift_and_conjugate():
    f = gens(1, 2, 3)
    assert [e.word for e in apply_move(f, CyclicShift(1)).entries] == [Word.gen(2), Word.gen(3), Word.gen(1)]
    assert tuples_equal(apply_move(f, CyclicShift(3)), f)
    g = apply_move(f, GlobalConjugate(Word.gen(4)))
    assert g.entries[2].word == Word((4, 3, -4))
    assert g.labels[0] == "[t4](t1)"


def test_move_errors():
    with pytest.raises(MoveError):
        apply_move(gens(1, 2), HurwitzLeft(2))
    with pytest.raises(MoveError) as err:
        apply_moves(gens(1, 2, 3), [HurwitzLeft(1), HurwitzRight(0)])
    assert "step 2" in str(err.value)


def test_inverse_moves():
    assert inverse_move(HurwitzLeft(2), 5) == HurwitzRight(2)
    assert inverse_move(HurwitzRight(2), 5) == HurwitzLeft(2)
    assert inverse_move(CyclicShift(2), 5) == CyclicShift(3)
    assert inverse_move(GlobalConjugate(Word((1, 2))), 5) == GlobalConjugate(Word((-2, -1)))


def test_move_str():
    assert str(HurwitzLeft(3)) == "hurwitzL 3"
    assert str(HurwitzRight(1)) == "hurwitzR 1"
    assert str(CyclicShift(2)) == "shift 2"
    assert str(GlobalConjugate(Word((-1, -1, 5)))) == "conj t1^-2 t5"


def test_from_curves_uses_library():
    lib = builtin_library()
    f = Factorization.from_curves(["sigma", "c1"], lib)
    assert f.labels == ["sigma", "c1"]
    assert f.entries[0].separating and not f.entries[1].separating
    assert f.evaluate() == evaluate_word(Word((1, 2) * 6 + (1,)))
