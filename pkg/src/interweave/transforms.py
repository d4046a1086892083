"""Cyclic-shift action and symmetry transforms.

Sliding a weave's pattern window does not change the fabric: moving the
first row to the last place, or the last column to the first place, any
number of times, yields a matrix coding the same interweaving.  Both
moves are multiplications by powers of the full-cycle permutation
matrix (:func:`shift_matrix`): left multiplication shifts rows up,
right multiplication shifts columns right.  Together they act as the
group Z_n x Z_n, and the orbits of that action are the shift classes.

The shift functions here rotate the packed representation directly —
a tuple rotation for rows, an n-bit word rotation for columns — which
is O(n) words per action instead of the O(n^2) of an actual product.
The product form is exercised as an oracle in the test suite.

:func:`mirror` (reverse column order; right multiplication by the
anti-diagonal :func:`reversal_matrix`) and :func:`rotate90` (quarter
turn counterclockwise) are *not* part of the shift action; they define
the self-mirror and rotation-stable class predicates in
:mod:`interweave.classify`.
"""

from __future__ import annotations

from typing import NamedTuple

from .bitmatrix import BitMatrix


class ShiftPair(NamedTuple):
    """Exponent pair (k, l) indexing one shift: rows up k, columns right l.

    Values are interpreted modulo the matrix order, so any non-negative
    exponents are valid.
    """

    k: int
    l: int


def shift_matrix(n: int) -> BitMatrix:
    """Full-cycle permutation matrix: ones at (i, i+1 mod n).

    Its n-th boolean power is the identity; left multiplication moves
    every row up one place, right multiplication moves every column
    right one place.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return BitMatrix(tuple(1 << (n - 1 - (i + 1) % n) for i in range(n)))


def reversal_matrix(n: int) -> BitMatrix:
    """Anti-diagonal permutation matrix; an involution under the product.

    Right multiplication reverses the column order, i.e. produces the
    mirror image.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return BitMatrix(tuple(1 << i for i in range(n)))


def rotate_rows_up(a: BitMatrix, k: int) -> BitMatrix:
    """Move the first row to the last place, k times (k reduced mod n)."""
    if k < 0:
        raise ValueError(f"shift count must be non-negative, got {k}")
    k %= a.n
    return BitMatrix(a.rows[k:] + a.rows[:k])


def rotate_cols(a: BitMatrix, l: int) -> BitMatrix:
    """Move the last column to the first place, l times (l reduced mod n).

    Each row word rotates right by l within its n bits.
    """
    if l < 0:
        raise ValueError(f"shift count must be non-negative, got {l}")
    n = a.n
    l %= n
    if l == 0:
        return a
    mask = (1 << n) - 1
    return BitMatrix(tuple((w >> l | w << (n - l)) & mask for w in a.rows))


def act(a: BitMatrix, g: ShiftPair) -> BitMatrix:
    """Apply the shift pair g = (k, l): rows up k, then columns right l.

    This is the full Z_n x Z_n action; two matrices code the same
    interweaving exactly when one is an image of the other under some
    shift pair.
    """
    k, l = g
    return rotate_cols(rotate_rows_up(a, k), l)


def mirror(a: BitMatrix) -> BitMatrix:
    """Mirror image: column order reversed (each row word bit-reversed).

    Equals the boolean product with :func:`reversal_matrix` on the
    right.  Applying it twice restores the original.
    """
    n = a.n
    return BitMatrix(tuple(_reverse_bits(w, n) for w in a.rows))


def rotate90(a: BitMatrix) -> BitMatrix:
    """Quarter turn counterclockwise: entry (i, j) becomes a(j, n-1-i).

    Composition of mirror and transpose; four applications restore the
    original.
    """
    return mirror(a).transpose()


def _reverse_bits(word: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = out << 1 | word & 1
        word >>= 1
    return out
