"""Genus-2 mapping classes as (sphere automorphism, symplectic matrix) pairs.

The chain twist t_i descends to the i-th half-twist of S_{0,6}; the kernel of
that descent is generated by the hyperelliptic involution, which acts on
homology as -I.  So a twist word is trivial in Mod_2 exactly when its
automorphism is inner and its matrix is the identity.
"""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import homology as hom
from . import pi1
from .pi1 import Handedness, Pi1Auto
from .words import TWISTS, AlphabetMismatch, Word, free_reduce

_convention = Handedness.STANDARD


def get_convention() -> Handedness:
    return _convention


def set_convention(h: Handedness) -> None:
    global _convention
    _convention = Handedness(h)


@contextmanager
def using_convention(h: Handedness):
    previous = _convention
    set_convention(h)
    try:
        yield
    finally:
        set_convention(previous)


@dataclass(frozen=True)
class MappingClass:
    auto: Pi1Auto
    auto_inv: Pi1Auto
    sp: hom.Matrix
    _key: tuple = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    @property
    def key(self) -> tuple:
        """Hashable normal form; equal keys iff equal in Mod_2."""
        if self._key is None:
            object.__setattr__(self, "_key", (pi1.canonical_outer(self.auto), self.sp))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, MappingClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(
            pi1.shorten(pi1.compose(self.auto, other.auto)),
            pi1.shorten(pi1.compose(other.auto_inv, self.auto_inv)),
            hom.matmul(self.sp, other.sp),
        )

    def inverse(self) -> "MappingClass":
        return MappingClass(self.auto_inv, self.auto, hom.sp_inverse(self.sp))

    def conjugate(self, u: "MappingClass") -> "MappingClass":
        """u * self * u^-1."""
        return u * self * u.inverse()

    @classmethod
    def identity(cls) -> "MappingClass":
        return cls(Pi1Auto.identity(), Pi1Auto.identity(), hom.IDENTITY)


def _letter_class(letter: int, handedness: Handedness) -> MappingClass:
    return MappingClass(
        pi1.generator_letter(letter, handedness),
        pi1.generator_letter(-letter, handedness),
        hom.generator_matrix(letter),
    )


@lru_cache(maxsize=1 << 16)
def evaluate_letters(letters: tuple[int, ...], handedness: Handedness) -> MappingClass:
    """Evaluate a reduced chain-twist word; the leftmost letter is applied last."""
    n = len(letters)
    if n == 0:
        return MappingClass.identity()
    if n == 1:
        return _letter_class(letters[0], handedness)
    mid = n // 2
    left = evaluate_letters(letters[:mid], handedness)
    right = evaluate_letters(letters[mid:], handedness)
    return left * right


def evaluate_word(word: Word | Sequence[int], handedness: Optional[Handedness] = None) -> MappingClass:
    """Evaluate a word over t1..t5 (named curves must already be expanded)."""
    if isinstance(word, Word):
        if word.alphabet != TWISTS:
            raise AlphabetMismatch(f"expected a chain-twist word, got alphabet {word.alphabet.name}")
        letters = word.letters
    else:
        letters = free_reduce(word)
    return evaluate_letters(letters, handedness or _convention)


def is_inner_trivial(m: MappingClass) -> tuple[bool, Optional[tuple[int, ...]]]:
    return pi1.is_inner_trivial(m.auto)


def is_identity_mod2(m: MappingClass) -> bool:
    ok, _ = pi1.is_inner_trivial(m.auto)
    return ok and m.sp == hom.IDENTITY


def is_hyperelliptic_involution(m: MappingClass) -> bool:
    ok, _ = pi1.is_inner_trivial(m.auto)
    return ok and m.sp == hom.MINUS_IDENTITY


def equal_mod2(a: MappingClass, b: MappingClass) -> bool:
    return a.key == b.key


def describe(m: MappingClass) -> dict[str, str]:
    """Diagnostic fields used by the verifier reports."""
    inner, witness = pi1.is_inner_trivial(m.auto)
    if inner and m.sp == hom.IDENTITY:
        verdict = "identity"
    elif inner and m.sp == hom.MINUS_IDENTITY:
        verdict = "hyperelliptic involution (trivial downstairs, -I upstairs)"
    elif inner:
        verdict = "trivial downstairs, nontrivial on homology"
    else:
        verdict = "nontrivial"
    return {
        "verdict": verdict,
        "inner": "yes" if inner else "no",
        "witness": str(Word(witness, pi1.PUNCTURES)) if inner else "-",
        "punctures": " ".join(map(str, m.auto.perm)),
        "sp": hom.format_matrix(m.sp),
    }

