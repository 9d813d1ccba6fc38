"""Action of genus-2 mapping classes on H_1(Sigma_2; Z).

Basis (a1, b1, a2, b2) with <a_k, b_k> = 1.  Matrices are 4x4 tuples of
Python ints, so nothing overflows.
"""
from __future__ import annotations

from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, int, int, int]

IDENTITY: Matrix = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
MINUS_IDENTITY: Matrix = tuple(tuple(-int(i == j) for j in range(4)) for i in range(4))
J: Matrix = (
    (0, 1, 0, 0),
    (-1, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, -1, 0),
)

# c1 = a1, c2 = b1, c3 = a2 - a1, c4 = b2, c5 = a2
CHAIN_CLASSES: tuple[Vector, ...] = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (-1, 0, 1, 0),
    (0, 0, 0, 1),
    (0, 0, 1, 0),
)


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i] for j in range(4)) for i in range(4))


def sp_inverse(a: Matrix) -> Matrix:
    # M^-1 = J^-1 M^T J = -J M^T J for symplectic M
    jt = matmul(matmul(J, transpose(a)), J)
    return tuple(tuple(-v for v in row) for row in jt)


def apply(a: Matrix, x: Sequence[int]) -> Vector:
    return tuple(sum(a[i][k] * x[k] for k in range(4)) for i in range(4))  # type: ignore[return-value]


def transvection(c: Sequence[int], power: int = 1) -> Matrix:
    """Matrix of x -> x + power * <x, c> c (columns are images of basis vectors)."""
    cols = []
    for j in range(4):
        e = [int(i == j) for i in range(4)]
        k = power * pairing(e, c)
        cols.append([e[i] + k * c[i] for i in range(4)])
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def chain_classes() -> tuple[Vector, ...]:
    return CHAIN_CLASSES


def is_symplectic(a: Matrix) -> bool:
    return matmul(matmul(transpose(a), J), a) == J


def determinant(a: Matrix) -> int:
    from itertools import permutations

    total = 0
    for perm in permutations(range(4)):
        inversions = sum(perm[i] > perm[j] for i in range(4) for j in range(i + 1, 4))
        term = -1 if inversions % 2 else 1
        for i in range(4):
            term *= a[i][perm[i]]
        total += term
    return total


def trace(a: Matrix) -> int:
    return sum(a[i][i] for i in range(4))


def charpoly(a: Matrix) -> tuple[int, ...]:
    """Coefficients of det(tI - M), leading coefficient first.

    For symplectic M this is palindromic and fixed by tr(M) and tr(M^2).
    """
    t1 = trace(a)
    t2 = trace(matmul(a, a))
    e2 = (t1 * t1 - t2) // 2
    return (1, -t1, e2, -t1, 1)


_GENERATORS = tuple(transvection(c) for c in CHAIN_CLASSES)
_GENERATOR_INVERSES = tuple(transvection(c, -1) for c in CHAIN_CLASSES)


def generator_matrix(letter: int) -> Matrix:
    i = abs(letter) - 1
    return _GENERATORS[i] if letter > 0 else _GENERATOR_INVERSES[i]


def sp_of_letters(letters: Sequence[int], mirrored: bool = False) -> Matrix:
    m = IDENTITY
    for a in letters:
        m = matmul(m, generator_matrix(-a if mirrored else a))
    return m


def format_matrix(a: Matrix) -> str:
    return "[" + "; ".join(" ".join(str(v) for v in row) for row in a) + "]"
