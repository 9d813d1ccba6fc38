"""Free-group words over small signed-integer alphabets.

A letter is a nonzero int: ``+i`` is the i-th generator, ``-i`` its inverse.
Words carry the alphabet they were built in so that chain twists, half-twists
and puncture loops cannot be mixed by accident.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    name: str
    prefix: str
    size: int

    def check(self, letter: int) -> None:
        if letter == 0 or abs(letter) > self.size:
            raise ValueError(f"letter {letter} outside alphabet {self.name} (1..{self.size})")

    def symbol(self, letter: int) -> str:
        s = f"{self.prefix}{abs(letter)}"
        return s if letter > 0 else s + "'"


TWISTS = Alphabet("twists", "t", 5)
PUNCTURES = Alphabet("punctures", "x", 6)
HALF_TWISTS = Alphabet("half-twists", "w", 5)


class Letter(NamedTuple):
    index: int
    sign: int = 1

    @property
    def code(self) -> int:
        return self.index * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), 1 if code > 0 else -1)


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(letters))


def letter_key(a: int) -> tuple[int, int]:
    # order by symbol id, then + before -
    return (abs(a), 0 if a > 0 else 1)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet = TWISTS

    def __post_init__(self):
        for a in self.letters:
            self.alphabet.check(a)
        if any(self.letters[k] == -self.letters[k + 1] for k in range(len(self.letters) - 1)):
            raise ValueError("Word letters must be freely reduced; use reduce()")

    @classmethod
    def identity(cls, alphabet: Alphabet = TWISTS) -> "Word":
        return cls((), alphabet)

    @classmethod
    def gen(cls, i: int, alphabet: Alphabet = TWISTS) -> "Word":
        return cls((i,), alphabet)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        return reduce(base.letters * abs(n), self.alphabet)

    def __invert__(self) -> "Word":
        return invert(self)

    def is_identity(self) -> bool:
        return not self.letters

    def as_letters(self) -> list[Letter]:
        return [Letter.from_code(a) for a in self.letters]

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(self.alphabet.symbol(a) for a in self.letters)


def reduce(raw: Iterable[int | Letter], alphabet: Alphabet = TWISTS) -> Word:
    codes = [a.code if isinstance(a, Letter) else a for a in raw]
    return Word(free_reduce(codes), alphabet)


def _same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"cannot combine words over {u.alphabet.name} and {v.alphabet.name}")


def concat(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    return Word(free_reduce(u.letters + v.letters), u.alphabet)


def invert(u: Word) -> Word:
    return Word(invert_letters(u.letters), u.alphabet)


def cyclic_reduce_letters(w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split reduced ``w`` as ``c * core * c^-1``; returns ``(core, c)``."""
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1]), tuple(w[:i])


def cyclic_reduce(u: Word) -> tuple[Word, Word]:
    core, conj = cyclic_reduce_letters(u.letters)
    return Word(core, u.alphabet), Word(conj, u.alphabet)


def is_cyclically_reduced(letters: Sequence[int]) -> bool:
    return len(letters) < 2 or letters[0] != -letters[-1]


def min_rotation_letters(w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        return ()
    keyed = [letter_key(a) for a in w]
    n = len(w)
    best = min(range(n), key=lambda r: keyed[r:] + keyed[:r])
    return tuple(w[best:]) + tuple(w[:best])


def min_cyclic_rotation(u: Word) -> Word:
    if not is_cyclically_reduced(u.letters):
        raise ValueError(f"word {u} is not cyclically reduced")
    return Word(min_rotation_letters(u.letters), u.alphabet)


def rotate(u: Word, k: int) -> Word:
    if not u.letters:
        return u
    k %= len(u)
    return Word(u.letters[k:] + u.letters[:k], u.alphabet)
