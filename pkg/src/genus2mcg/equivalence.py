"""Certificates of Hurwitz equivalence and a bounded breadth-first search for them.

Search runs on evaluated mapping classes, not on twist words, so entries do
not grow syntactically; the move list found is replayed on the word-level
factorization and checked before it is returned.
"""
from __future__ import annotations

import logging
import os
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

from . import homology as hom
from .factorization import (
    CyclicShift,
    Factorization,
    GlobalConjugate,
    HurwitzLeft,
    HurwitzRight,
    Move,
    apply_moves,
    inverse_moves,
    tuples_equal,
)
from .mcg import MappingClass, evaluate_word
from .words import Word

log = logging.getLogger(__name__)

DEFAULT_STATE_CAP = 1_000_000
STATE_CAP_ENV = "GENUS2MCG_STATE_CAP"


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MoveCertificate:
    moves: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def then(self, other: "MoveCertificate") -> "MoveCertificate":
        return MoveCertificate(self.moves + other.moves)

    def inverse(self, length: int) -> "MoveCertificate":
        return MoveCertificate(tuple(inverse_moves(self.moves, length)))

    def __str__(self) -> str:
        return "\n".join(str(m) for m in self.moves)


def verify_certificate(src: Factorization, dst: Factorization, cert: MoveCertificate) -> bool:
    return tuples_equal(apply_moves(src, cert.moves), dst)


# --- orbit keys ------------------------------------------------------------

def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def _compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[q[i] - 1] for i in range(len(q)))


def _pair_trace(a: hom.Matrix, b: hom.Matrix) -> int:
    return sum(a[i][j] * b[j][i] for i in range(4) for j in range(4))


def orbit_key(classes: Sequence[MappingClass]) -> tuple:
    """Invariant of a tuple of twists under simultaneous conjugation.

    Per entry: cycle type of the puncture permutation and the characteristic
    polynomial of the homology action.  Per pair: trace of the product matrix
    and cycle type of the product permutation.
    """
    single = tuple((_cycle_type(m.auto.perm), hom.charpoly(m.sp)) for m in classes)
    pairs = tuple(
        (_pair_trace(a.sp, b.sp), _cycle_type(_compose_perm(a.auto.perm, b.auto.perm)))
        for i, a in enumerate(classes)
        for b in classes[i + 1:]
    )
    return (single, pairs)


def factorization_key(f: Factorization) -> tuple:
    return orbit_key(f.classes())


# --- search ----------------------------------------------------------------

def _state_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(STATE_CAP_ENV, DEFAULT_STATE_CAP))


class _MoveCache:
    """Memoized Hurwitz conjugations, keyed by the exact classes involved."""

    def __init__(self):
        self._left: dict[tuple, MappingClass] = {}
        self._right: dict[tuple, MappingClass] = {}

    def left(self, a: MappingClass, b: MappingClass) -> MappingClass:
        k = (a.key, b.key)
        if k not in self._left:
            self._left[k] = b.conjugate(a)
        return self._left[k]

    def right(self, a: MappingClass, b: MappingClass) -> MappingClass:
        k = (a.key, b.key)
        if k not in self._right:
            self._right[k] = a.conjugate(b.inverse())
        return self._right[k]


def _successors(state: tuple[MappingClass, ...], cache: _MoveCache
                ) -> Iterator[tuple[Move, tuple[MappingClass, ...]]]:
    k = len(state)
    for i in range(1, k):
        a, b = state[i - 1], state[i]
        yield HurwitzLeft(i), state[:i - 1] + (cache.left(a, b), a) + state[i + 1:]
    for i in range(1, k):
        a, b = state[i - 1], state[i]
        yield HurwitzRight(i), state[:i - 1] + (b, cache.right(a, b)) + state[i + 1:]
    if k > 1:
        yield CyclicShift(1), state[1:] + state[:1]


def _keys(state: Sequence[MappingClass]) -> tuple:
    return tuple(m.key for m in state)


def reduced_words(max_len: int) -> Iterator[Word]:
    """All reduced chain-twist words up to max_len, shortlex order."""
    letters = [1, -1, 2, -2, 3, -3, 4, -4, 5, -5]
    yield Word.identity()
    for n in range(1, max_len + 1):
        for combo in product(letters, repeat=n):
            if all(combo[j] != -combo[j + 1] for j in range(n - 1)):
                yield Word(combo)


@dataclass
class SearchResult:
    certificate: Optional[MoveCertificate]
    states: int
    depth_reached: int

    @property
    def found(self) -> bool:
        return self.certificate is not None


class _Side:
    """One direction of the bidirectional search: visited states by level."""

    def __init__(self, root: tuple[MappingClass, ...]):
        self.seen: dict[tuple, list[tuple]] = {orbit_key(root): [_keys(root)]}
        self.frontier: list[tuple[tuple[MappingClass, ...], tuple[Move, ...]]] = [(root, ())]
        self.by_rotation: dict[tuple, tuple[int, tuple[Move, ...]]] = {}
        self.shadows: set[tuple] = set()
        self.depth = 0
        self.visited: list[tuple[tuple[MappingClass, ...], tuple[Move, ...]]] = [(root, ())]
        self._index(root, ())

    def _index(self, state, path) -> None:
        k = len(state)
        keys = _keys(state)
        for r in range(k):
            rot = keys[r:] + keys[:r]
            self.by_rotation.setdefault(rot, (r, path))
        shadow = _shadow(state)
        for r in range(k):
            self.shadows.add(shadow[r:] + shadow[:r])

    def expand(self, cache: "_MoveCache", budget: list[int]) -> None:
        nxt = []
        for state, path in self.frontier:
            for move, new in _successors(state, cache):
                exact = _keys(new)
                bucket = self.seen.setdefault(orbit_key(new), [])
                if exact in bucket:
                    continue
                bucket.append(exact)
                budget[0] -= 1
                if budget[0] < 0:
                    raise SearchLimitExceeded(f"state cap exceeded at depth {self.depth + 1}")
                nxt.append((new, path + (move,)))
                self.visited.append((new, path + (move,)))
                self._index(new, path + (move,))
        self.frontier = nxt
        self.depth += 1


def search_equivalence(
    src: Factorization,
    dst: Factorization,
    max_depth: int = 8,
    conjugator_budget: int = 0,
    state_cap: Optional[int] = None,
) -> SearchResult:
    """Breadth-first search for a move certificate from ``src`` to ``dst``.

    Levels are expanded alternately from ``src`` and from ``dst`` (the move
    set is closed under inverses), and two states meet when one is a
    rotation of the other; the meeting rotation becomes a single shift.  So
    a certificate with d Hurwitz moves needs about d/2 levels on each side.
    Moves are enumerated hurwitzL 1..k-1, hurwitzR 1..k-1, shift 1, and
    candidates are scanned in that order, so the result is deterministic.

    With ``conjugator_budget`` L > 0, a forward state whose orbit key matches
    a backward state's is also tried against every reduced conjugator word of
    length <= L; the conjugation goes first in the certificate, which is valid
    because conjugation commutes with the other moves.

    Raises SearchLimitExceeded past ``state_cap`` states.
    """
    cap = _state_cap(state_cap)
    if len(src) != len(dst):
        return SearchResult(None, 0, 0)

    k = len(src)
    conjugators = []
    if conjugator_budget > 0:
        conjugators = [_Conjugator(w, evaluate_word(w)) for w in reduced_words(conjugator_budget) if w.letters]

    cache = _MoveCache()
    fwd = _Side(src.classes())
    bwd = _Side(dst.classes())
    budget = [cap - 2]

    def joined(f_path, s, b_path) -> MoveCertificate:
        tail = (CyclicShift(s),) if s % k else ()
        return MoveCertificate(tuple(f_path) + tail + tuple(inverse_moves(b_path, k)))

    def meet_forward(state, path) -> Optional[MoveCertificate]:
        # forward state rotated left by s equals a backward state
        hit = bwd.by_rotation.get(_keys(state))
        if hit is not None:
            r, b_path = hit
            return joined(path, k - r, b_path)
        if not conjugators or not any(orbit_key(state[r:] + state[:r]) in bwd.seen for r in range(k)):
            return None
        for c in conjugators:
            if not c.screen(state, bwd):
                continue
            moved = tuple(m.conjugate(c.value) for m in state)
            hit = bwd.by_rotation.get(_keys(moved))
            if hit is not None:
                r, b_path = hit
                return MoveCertificate((GlobalConjugate(c.word),) + joined(path, k - r, b_path).moves)
        return None

    def meet_backward(state, path) -> Optional[MoveCertificate]:
        hit = fwd.by_rotation.get(_keys(state))
        if hit is not None:
            r, f_path = hit
            return joined(f_path, r, path)
        return None

    def scan(side: _Side, forward: bool) -> Optional[MoveCertificate]:
        for state, path in side.frontier:
            cert = meet_forward(state, path) if forward else meet_backward(state, path)
            if cert is not None:
                return cert
        return None

    def finish(cert: Optional[MoveCertificate]) -> SearchResult:
        if cert is not None and not verify_certificate(src, dst, cert):
            raise AssertionError(f"search produced an invalid certificate: {[str(m) for m in cert]}")
        return SearchResult(cert, cap - budget[0], fwd.depth + bwd.depth)

    cert = scan(fwd, True)
    while cert is None and fwd.depth + bwd.depth < max_depth:
        forward = fwd.depth <= bwd.depth
        side = fwd if forward else bwd
        side.expand(cache, budget)
        log.debug("%s depth %d: %d new states", "forward" if forward else "backward",
                  side.depth, len(side.frontier))
        cert = scan(side, forward)
        if cert is None and not forward and conjugators:
            # new backward states may now match conjugates of old forward ones
            for level_state, level_path in _all_states(fwd):
                cert = meet_forward(level_state, level_path)
                if cert is not None:
                    break
        if not side.frontier:
            break
    return finish(cert)


class _Conjugator:
    def __init__(self, word: Word, value: MappingClass):
        self.word = word
        self.value = value
        self.sp_inv = hom.sp_inverse(value.sp)
        perm = value.auto.perm
        inv = [0] * len(perm)
        for i, p in enumerate(perm):
            inv[p - 1] = i + 1
        self.perm_inv = tuple(inv)

    def screen(self, state, side: "_Side") -> bool:
        """Necessary condition checked on homology and puncture permutations."""
        u = self.value
        shadow = tuple(
            (hom.matmul(hom.matmul(u.sp, m.sp), self.sp_inv),
             _compose_perm(_compose_perm(u.auto.perm, m.auto.perm), self.perm_inv))
            for m in state
        )
        return shadow in side.shadows


def _shadow(state) -> tuple:
    return tuple((m.sp, m.auto.perm) for m in state)


def _all_states(side: _Side):
    return side.visited


def compose_certificates(a_to_b: MoveCertificate, c_to_b: MoveCertificate, length: int) -> MoveCertificate:
    """From A->B and C->B build A->C."""
    return a_to_b.then(c_to_b.inverse(length))


def hand_certificates() -> dict[str, MoveCertificate]:
    from .curves import PHI

    return {
        "bk-hamada": MoveCertificate((
            GlobalConjugate(PHI), HurwitzRight(4), HurwitzRight(5), HurwitzRight(6), CyclicShift(3),
        )),
        "xiao-hamada": MoveCertificate((
            HurwitzRight(1), HurwitzRight(2), HurwitzLeft(4), CyclicShift(6),
        )),
    }
