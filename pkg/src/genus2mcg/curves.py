"""Named vanishing cycles, each defined from the standard chain c1..c5.

A curve is a chain curve, the boundary of a chain (given by its chain word,
e.g. sigma = (t1 t2)^6), or the image u(b) of another named curve b under a
chain-twist word u.  The twist about u(b) is u t_b u^-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from . import homology as hom
from .words import Word, concat, free_reduce, invert


class CurveError(KeyError):
    pass


@dataclass(frozen=True)
class ChainCurve:
    index: int


@dataclass(frozen=True)
class ChainBoundary:
    word: Word


@dataclass(frozen=True)
class Image:
    conjugator: Word
    base: str


Definition = Union[ChainCurve, ChainBoundary, Image]


@dataclass(frozen=True)
class NamedCurve:
    name: str
    definition: Definition
    separating: bool
    source: str = ""
    derived: bool = False  # True when not read off the text directly

    @property
    def classification(self) -> str:
        return "separating" if self.separating else "nonseparating"


def _w(*letters: int) -> Word:
    return Word(free_reduce(letters))


@dataclass
class CurveLibrary:
    curves: dict[str, NamedCurve] = field(default_factory=dict)
    _twists: dict[str, Word] = field(default_factory=dict, repr=False)

    def __contains__(self, name: str) -> bool:
        return name in self.curves

    def __iter__(self) -> Iterator[NamedCurve]:
        return iter(self.curves.values())

    def __len__(self) -> int:
        return len(self.curves)

    def lookup(self, name: str) -> NamedCurve:
        try:
            return self.curves[name]
        except KeyError:
            raise CurveError(f"unknown curve {name!r}") from None

    def add(self, curve: NamedCurve, check: bool = True) -> None:
        if curve.name in self.curves:
            raise ValueError(f"curve {curve.name!r} already defined")
        d = curve.definition
        if isinstance(d, Image) and d.base not in self.curves:
            # bases must already exist, which also rules out cycles
            raise CurveError(f"curve {curve.name!r} refers to undefined curve {d.base!r}")
        self.curves[curve.name] = curve
        if check and not self.classification_agrees(curve.name):
            del self.curves[curve.name]
            self._twists.pop(curve.name, None)
            raise ValueError(
                f"curve {curve.name!r} declared {curve.classification} "
                "but its twist disagrees on homology"
            )

    def twist_word(self, name: str) -> Word:
        if name in self._twists:
            return self._twists[name]
        d = self.lookup(name).definition
        if isinstance(d, ChainCurve):
            w = Word.gen(d.index)
        elif isinstance(d, ChainBoundary):
            w = d.word
        else:
            w = concat(concat(d.conjugator, self.twist_word(d.base)), invert(d.conjugator))
        self._twists[name] = w
        return w

    def screen_separating(self, name: str) -> bool:
        """Homology screen: separating twists act trivially on H_1."""
        return hom.sp_of_letters(self.twist_word(name).letters) == hom.IDENTITY

    def classification_agrees(self, name: str) -> bool:
        return self.screen_separating(name) == self.lookup(name).separating

    def copy(self) -> "CurveLibrary":
        return CurveLibrary(dict(self.curves), dict(self._twists))

    def describe(self, name: str) -> str:
        d = self.lookup(name).definition
        if isinstance(d, ChainCurve):
            return f"c{d.index}"
        if isinstance(d, ChainBoundary):
            return f"chain {d.word}"
        if not d.conjugator.letters:
            return d.base
        return f"apply {d.conjugator} to {d.base}"


def twist_word(library: CurveLibrary, curve: NamedCurve | str) -> Word:
    return library.twist_word(curve if isinstance(curve, str) else curve.name)


# phi = t1^-2 t5 conjugates the bk curves onto the hamada curves
PHI = _w(-1, -1, 5)


def builtin_library() -> CurveLibrary:
    lib = CurveLibrary()
    for i in range(1, 6):
        lib.add(NamedCurve(f"c{i}", ChainCurve(i), False, "standard chain"))

    def image(name, conj: Word, base, sep, source, derived=False):
        lib.add(NamedCurve(name, Image(conj, base), sep, source, derived))

    # the hamada factorization
    lib.add(NamedCurve("sigma", ChainBoundary(_w(1, 2) ** 6), True, "2-chain boundary (12)^6"))
    lib.add(NamedCurve("gamma", ChainBoundary(_w(3, 4) ** 6), True, "2-chain boundary (34)^6"))
    image("alpha", _w(-4, -3), "sigma", True, "t4^-1 t3^-1 (sigma)")
    image("D", _w(2, 1, 1, 2), "c3", False, "t2 t1^2 t2 (c3)")
    image("E", _w(4, 4, -1, -1, -2), "c3", False, "t4^2 t1^-2 t2^-1 (c3)")
    image("F", _w(-4, -3) ** 3, "c2", False, "(t3 t4)^-3 (c2)")
    image("G", _w(-4, -4, 1, 1, 2), "c3", False, "t4^-2 t1^2 t2 (c3)")

    # the xiao factorization, branch points isotoped to standard position
    ident = Word.identity()
    image("R3", ident, "D", False, "equal to D")
    image("Q3", ident, "sigma", True, "equal to sigma")
    image("R2", ident, "F", False, "equal to F")
    image("R1", ident, "G", False, "equal to G")
    image("Q1", ident, "alpha", True, "equal to alpha")
    d_sigma = concat(lib.twist_word("D"), lib.twist_word("sigma"))
    image("P", d_sigma, "E", False, "t_D t_sigma (E)")
    image("Q2", invert(lib.twist_word("F")), "gamma", True, "t_F^-1 (gamma)")

    # the bk factorization, pulled back through phi
    phi_inv = invert(PHI)
    bk = "phi^-1 of the conjugated factorization"
    image("e", phi_inv, "gamma", True, bk, True)
    image("x1", phi_inv, "F", False, bk, True)
    image("x2", phi_inv, "G", False, bk, True)
    a_d_s = concat(concat(lib.twist_word("alpha"), lib.twist_word("D")), lib.twist_word("sigma"))
    image("x3", concat(phi_inv, a_d_s), "E", False, bk + " (t_alpha t_D t_sigma (E))", True)
    image("d", phi_inv, "alpha", True, bk, True)
    image("B2", phi_inv, "D", False, bk, True)
    image("C", phi_inv, "sigma", True, bk, True)
    return lib

