"""Mapping classes of the 6-punctured sphere acting on its fundamental group.

pi_1(S_{0,6}) is free on x1..x5; the sixth puncture loop is the derived word
x6 = (x1 x2 x3 x4 x5)^-1.  A mapping class is recorded as the automorphism
it induces (images of x1..x5) together with the permutation of punctures.
Two automorphisms represent the same mapping class exactly when they differ
by an inner automorphism (Dehn-Nielsen-Baer for punctured spheres), so every
triviality test here is an inner-ness test.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .words import (
    PUNCTURES,
    Word,
    cyclic_reduce_letters,
    free_reduce,
    invert_letters,
    letter_key,
    min_rotation_letters,
)

RANK = 5
NPUNCT = 6
X6: tuple[int, ...] = (-5, -4, -3, -2, -1)


class NotAnAutomorphism(ValueError):
    pass


class Handedness(Enum):
    """Which Artin substitution represents the positive half-twist."""

    STANDARD = "standard"   # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    MIRRORED = "mirrored"   # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}


Images = tuple[tuple[int, ...], ...]


def _substitute(images: Images, word: Sequence[int]) -> tuple[int, ...]:
    table: dict[int, tuple[int, ...]] = {}
    for i, w in enumerate(images, 1):
        table[i] = w
        table[-i] = invert_letters(w)
    out: list[int] = []
    for a in word:
        for b in table[a]:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


@dataclass(frozen=True)
class Pi1Auto:
    images: Images
    perm: tuple[int, ...]  # perm[i-1] = image puncture of puncture i

    @classmethod
    def identity(cls) -> "Pi1Auto":
        return cls(tuple((i,) for i in range(1, RANK + 1)), tuple(range(1, NPUNCT + 1)))

    @classmethod
    def from_images(cls, images: Sequence[Sequence[int]]) -> "Pi1Auto":
        """Build from raw images, deriving the puncture permutation.

        Raises NotAnAutomorphism if some x_i is not sent to a conjugate of a
        puncture loop or punctures collide.
        """
        imgs = tuple(free_reduce(w) for w in images)
        if len(imgs) != RANK:
            raise NotAnAutomorphism(f"need {RANK} images, got {len(imgs)}")
        perm = []
        for w in imgs + (image_of_x6(imgs),):
            j = _puncture_of(w)
            if j is None:
                raise NotAnAutomorphism(f"image {Word(w, PUNCTURES)} is not a puncture loop")
            perm.append(j)
        if sorted(perm) != list(range(1, NPUNCT + 1)):
            raise NotAnAutomorphism(f"punctures are not permuted: {perm}")
        return cls(imgs, tuple(perm))

    def __call__(self, word: Sequence[int]) -> tuple[int, ...]:
        return _substitute(self.images, word)

    def image(self, i: int) -> tuple[int, ...]:
        """Image of x_i for i = 1..6."""
        return self.images[i - 1] if i <= RANK else image_of_x6(self.images)

    def total_length(self) -> int:
        return sum(len(w) for w in self.images)

    def preserves_peripheral_structure(self) -> bool:
        return all(_puncture_of(self.image(i)) == self.perm[i - 1] for i in range(1, NPUNCT + 1))

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {Word(w, PUNCTURES)}" for i, w in enumerate(self.images))


def image_of_x6(images: Images) -> tuple[int, ...]:
    return invert_letters(free_reduce([b for w in images for b in w]))


def _puncture_of(w: Sequence[int]) -> Optional[int]:
    core, _ = cyclic_reduce_letters(w)
    if len(core) == 1:
        return core[0] if core[0] > 0 else None
    if len(core) == RANK and min_rotation_letters(core) == min_rotation_letters(X6):
        return 6
    return None


def compose(f: Pi1Auto, g: Pi1Auto) -> Pi1Auto:
    """f after g."""
    images = _substitute_all(f.images, g.images)
    perm = tuple(f.perm[g.perm[i] - 1] for i in range(NPUNCT))
    return Pi1Auto(images, perm)


def _substitute_all(images: Images, words: Images) -> Images:
    table: dict[int, tuple[int, ...]] = {}
    for i, w in enumerate(images, 1):
        table[i] = w
        table[-i] = invert_letters(w)
    result = []
    for word in words:
        out: list[int] = []
        for a in word:
            for b in table[a]:
                if out and out[-1] == -b:
                    out.pop()
                else:
                    out.append(b)
        result.append(tuple(out))
    return tuple(result)


def conjugation(w: Sequence[int]) -> Pi1Auto:
    """The inner automorphism x -> w x w^-1."""
    w = free_reduce(w)
    wi = invert_letters(w)
    return Pi1Auto(
        tuple(free_reduce(w + (i,) + wi) for i in range(1, RANK + 1)),
        tuple(range(1, NPUNCT + 1)),
    )


def _transposition(i: int) -> tuple[int, ...]:
    p = list(range(1, NPUNCT + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _standard_halftwist(i: int) -> Pi1Auto:
    images = [(k,) for k in range(1, RANK + 1)]
    if i < RANK:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[RANK - 1] = free_reduce((RANK,) + X6 + (-RANK,))
    return Pi1Auto(tuple(images), _transposition(i))


def _standard_halftwist_inverse(i: int) -> Pi1Auto:
    images = [(k,) for k in range(1, RANK + 1)]
    if i < RANK:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    else:
        images[RANK - 1] = X6
    return Pi1Auto(tuple(images), _transposition(i))


def generator_halftwist(i: int, handedness: Handedness = Handedness.STANDARD) -> Pi1Auto:
    if not 1 <= i <= RANK:
        raise ValueError(f"half-twist index {i} out of range 1..{RANK}")
    if handedness is Handedness.STANDARD:
        return _standard_halftwist(i)
    return _standard_halftwist_inverse(i)


def generator_letter(letter: int, handedness: Handedness = Handedness.STANDARD) -> Pi1Auto:
    """Automorphism for a signed half-twist letter."""
    i = abs(letter)
    positive = (letter > 0) == (handedness is Handedness.STANDARD)
    return _standard_halftwist(i) if positive else _standard_halftwist_inverse(i)


def is_inner_trivial(f: Pi1Auto) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide whether f is conjugation by some w; returns (verdict, w)."""
    if f.perm != tuple(range(1, NPUNCT + 1)):
        return False, None
    core, u = cyclic_reduce_letters(f.images[0])
    if core != (1,):
        return False, None
    # candidates are u x1^k; strip to v = x1^k x2 x1^-k
    ui = invert_letters(u)
    v = free_reduce(ui + f.images[1] + u)
    run = 0
    if v and abs(v[0]) == 1:
        while run < len(v) and v[run] == v[0]:
            run += 1
    xk = tuple(v[:run])
    if v != xk + (2,) + invert_letters(xk):
        return False, None
    w = free_reduce(u + xk)
    wi = invert_letters(w)
    for i in range(1, RANK + 1):
        if f.images[i - 1] != free_reduce(w + (i,) + wi):
            return False, None
    return True, w


def inverse(f: Pi1Auto) -> Pi1Auto:
    """Invert f by Artin's length reduction.

    Half-twists first return puncture 6 to itself and a conjugation makes
    x6 fixed exactly, so x1..x5 has a fixed product.  For such automorphisms
    some Hurwitz move on the images (f.s_j^+-1, j < 5) strictly shortens them
    until they are x1..x5 again; the collected moves give the inverse.
    Raises NotAnAutomorphism if the reduction stalls or does not verify.
    """
    route = Pi1Auto.identity()  # g with g.f fixing puncture 6
    for k in range(f.perm[NPUNCT - 1], NPUNCT):
        route = compose(generator_halftwist(k), route)
    h = compose(route, f)
    core, b = cyclic_reduce_letters(h.image(NPUNCT))
    if min_rotation_letters(core) != min_rotation_letters(X6):
        raise NotAnAutomorphism(f"cannot invert {f}: x6 is not sent to a puncture loop")
    # h(x6) = b r b^-1 for a rotation r of X6; conjugating by b^-1 and a prefix of r fixes x6
    r = core
    shift = next(i for i in range(len(r)) if r[i:] + r[:i] == X6)
    b = free_reduce(b + r[:shift])
    h = compose(conjugation(invert_letters(b)), h)
    if h.image(NPUNCT) != X6:
        raise NotAnAutomorphism(f"cannot invert {f}: x6 not fixed after conjugation")
    undo = Pi1Auto.identity()  # h.undo shrinks to the identity
    while h.total_length() > RANK:
        best = None
        for j in range(1, RANK):
            for a in (j, -j):
                cand = compose(h, generator_letter(a))
                if cand.total_length() < h.total_length() and (
                        best is None or cand.total_length() < best[1].total_length()):
                    best = (a, cand)
        if best is None:
            raise NotAnAutomorphism(f"cannot invert {f}: Artin reduction stalled")
        undo = compose(undo, generator_letter(best[0]))
        h = best[1]
    if h != Pi1Auto.identity():
        raise NotAnAutomorphism(f"cannot invert {f}: reduced to a permutation {h.perm}")
    # h = c_b^-1 . route . f, so f^-1 = undo . c_b^-1 . route
    g = compose(undo, compose(conjugation(invert_letters(b)), route))
    if compose(f, g) != Pi1Auto.identity() or compose(g, f) != Pi1Auto.identity():
        raise NotAnAutomorphism(f"computed inverse of {f} does not verify")
    return g


def conjugate_by(f: Pi1Auto, w: Sequence[int]) -> Pi1Auto:
    """x -> w^-1 f(x) w."""
    wi = invert_letters(w)
    return Pi1Auto(tuple(free_reduce(wi + img + tuple(w)) for img in f.images), f.perm)


def canonical_outer(f: Pi1Auto) -> tuple:
    """A representative of f's outer class that is equal for inner-equivalent autos."""
    i = next(k for k in range(1, RANK + 1) if f.perm[k - 1] <= RANK)
    j = f.perm[i - 1]
    core, u = cyclic_reduce_letters(f.images[i - 1])
    g = conjugate_by(f, u)
    assert g.images[i - 1] == (j,), core
    i2 = 1 if i != 1 else 2
    v = g.images[i2 - 1]
    a = 0
    while a < len(v) and abs(v[a]) == j and v[a] == v[0]:
        a += 1
    a = a if not v or v[0] == j else -a
    b = 0
    while b < len(v) and abs(v[-1 - b]) == j and v[-1 - b] == v[-1]:
        b += 1
    b = b if not v or v[-1] == j else -b
    # v = x_j^a w x_j^b, conjugating by x_j^k gives x_j^(a-k) w x_j^(b+k)
    lo, hi = sorted((a, -b))
    best = None
    for k in range(lo, hi + 1):
        xk = (j,) * k if k >= 0 else (-j,) * -k
        cand = free_reduce(invert_letters(xk) + v + xk)
        key = (len(cand), [letter_key(c) for c in cand])
        if best is None or key < best[0]:
            best = (key, xk)
    h = conjugate_by(g, best[1])
    return (f.perm, h.images)


def conjugacy_signature(w: Sequence[int]) -> tuple[int, ...]:
    core, _ = cyclic_reduce_letters(free_reduce(w))
    return min_rotation_letters(core)


def shorten(f: Pi1Auto) -> Pi1Auto:
    """Inner-equivalent automorphism of least total image length.

    Total length under conjugation is convex along the Cayley tree, so
    single-letter descent reaches the global minimum.
    """
    images = [deque(w) for w in f.images]
    letters = [a for a in range(-RANK, RANK + 1) if a]
    while True:
        best, best_delta = None, 0
        for a in letters:
            delta = 0
            for w in images:
                if len(w) == 1:
                    delta += 0 if w[0] in (a, -a) else 2
                else:
                    delta += 2 - 2 * (w[0] == a) - 2 * (w[-1] == -a)
            if delta < best_delta:
                best, best_delta = a, delta
        if best is None:
            return Pi1Auto(tuple(tuple(w) for w in images), f.perm)
        for w in images:
            # w -> best^-1 w best
            if w[0] == best:
                w.popleft()
            else:
                w.appendleft(-best)
            if w and w[-1] == -best:
                w.pop()
            else:
                w.append(best)
