"""Positive factorizations in Mod_2 and the moves that preserve them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from . import homology as hom
from .curves import CurveLibrary, builtin_library
from .mcg import MappingClass, evaluate_word, is_identity_mod2
from .words import Word, concat, invert


@dataclass(frozen=True)
class Entry:
    """One twist of a factorization: a display label and its twist word."""

    label: str
    word: Word

    @property
    def mapping_class(self) -> MappingClass:
        return evaluate_word(self.word)

    @property
    def separating(self) -> bool:
        return hom.sp_of_letters(self.word.letters) == hom.IDENTITY


@dataclass(frozen=True)
class FactorizationType:
    n: int
    s: int

    def __str__(self) -> str:
        return f"({self.n},{self.s})"


@dataclass(frozen=True)
class HurwitzLeft:
    """(A, B) at positions i, i+1 becomes (A B A^-1, A)."""

    i: int

    def __str__(self) -> str:
        return f"hurwitzL {self.i}"


@dataclass(frozen=True)
class HurwitzRight:
    """(A, B) at positions i, i+1 becomes (B, B^-1 A B)."""

    i: int

    def __str__(self) -> str:
        return f"hurwitzR {self.i}"


@dataclass(frozen=True)
class CyclicShift:
    """Move the first k entries to the end."""

    k: int

    def __str__(self) -> str:
        return f"shift {self.k}"


@dataclass(frozen=True)
class GlobalConjugate:
    """Replace every twist A by u A u^-1."""

    word: Word

    def __str__(self) -> str:
        from .dsl import format_word

        return f"conj {format_word(self.word)}"


Move = Union[HurwitzLeft, HurwitzRight, CyclicShift, GlobalConjugate]


class MoveError(IndexError):
    pass


def _conj(u: Word, a: Word) -> Word:
    return concat(concat(u, a), invert(u))


@dataclass(frozen=True)
class Factorization:
    entries: tuple[Entry, ...]
    name: str = ""

    @classmethod
    def from_curves(cls, names: Sequence[str], library: Optional[CurveLibrary] = None,
                    name: str = "") -> "Factorization":
        lib = library if library is not None else builtin_library()
        return cls(tuple(Entry(n, lib.twist_word(n)) for n in names), name)

    @classmethod
    def from_words(cls, words: Iterable[Word], labels: Optional[Sequence[str]] = None,
                   name: str = "") -> "Factorization":
        words = list(words)
        if labels is None:
            labels = [str(w) for w in words]
        return cls(tuple(Entry(l, w) for l, w in zip(labels, words)), name)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def word(self) -> Word:
        total = Word.identity()
        for e in self.entries:
            total = concat(total, e.word)
        return total

    def evaluate(self) -> MappingClass:
        return evaluate_word(self.word())

    def classes(self) -> tuple[MappingClass, ...]:
        return tuple(e.mapping_class for e in self.entries)

    def __str__(self) -> str:
        return " ".join(f"t_{{{l}}}" for l in self.labels)


def evaluate(f: Factorization) -> MappingClass:
    return f.evaluate()


def is_relation(f: Factorization) -> bool:
    return is_identity_mod2(f.evaluate())


def classify(f: Factorization) -> FactorizationType:
    s = sum(e.separating for e in f.entries)
    return FactorizationType(len(f) - s, s)


def apply_move(f: Factorization, m: Move) -> Factorization:
    entries = list(f.entries)
    k = len(entries)
    if isinstance(m, (HurwitzLeft, HurwitzRight)):
        if not 1 <= m.i < k:
            raise MoveError(f"{m}: position out of range for length {k}")
        a, b = entries[m.i - 1], entries[m.i]
        if isinstance(m, HurwitzLeft):
            new = (Entry(f"{a.label}({b.label})", _conj(a.word, b.word)), a)
        else:
            new = (b, Entry(f"{b.label}'({a.label})", _conj(invert(b.word), a.word)))
        entries[m.i - 1:m.i + 1] = new
    elif isinstance(m, CyclicShift):
        if k:
            s = m.k % k
            entries = entries[s:] + entries[:s]
    elif isinstance(m, GlobalConjugate):
        from .dsl import format_word

        tag = format_word(m.word)
        entries = [Entry(f"[{tag}]({e.label})", _conj(m.word, e.word)) for e in entries]
    else:
        raise TypeError(f"not a move: {m!r}")
    return Factorization(tuple(entries), f.name)


def apply_moves(f: Factorization, moves: Iterable[Move]) -> Factorization:
    for step, m in enumerate(moves, 1):
        try:
            f = apply_move(f, m)
        except MoveError as exc:
            raise MoveError(f"step {step}: {exc}") from None
    return f


def inverse_move(m: Move, length: int) -> Move:
    if isinstance(m, HurwitzLeft):
        return HurwitzRight(m.i)
    if isinstance(m, HurwitzRight):
        return HurwitzLeft(m.i)
    if isinstance(m, CyclicShift):
        return CyclicShift((-m.k) % length if length else 0)
    return GlobalConjugate(invert(m.word))


def inverse_moves(moves: Sequence[Move], length: int) -> list[Move]:
    return [inverse_move(m, length) for m in reversed(moves)]


def tuples_equal(f: Factorization, g: Factorization) -> bool:
    if len(f) != len(g):
        return False
    return all(a.mapping_class.key == b.mapping_class.key for a, b in zip(f.entries, g.entries))


def builtin_factorizations(library: Optional[CurveLibrary] = None) -> dict[str, Factorization]:
    lib = library if library is not None else builtin_library()
    return {
        "bk": Factorization.from_curves(["e", "x1", "x2", "x3", "d", "B2", "C"], lib, "bk"),
        "hamada": Factorization.from_curves(["alpha", "D", "sigma", "E", "gamma", "F", "G"], lib, "hamada"),
        "xiao": Factorization.from_curves(["P", "R3", "Q3", "R2", "Q2", "R1", "Q1"], lib, "xiao"),
    }
