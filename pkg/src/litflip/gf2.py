"""GF(2) linear algebra on int-packed bit vectors and matrices.

A vector in F_2^n is an int whose bit i is coordinate i.  A matrix is a
sequence of n row masks, bit j of ``rows[i]`` being the (i, j) entry.
"""

from __future__ import annotations

from typing import Sequence


def parity(x: int) -> int:
    return x.bit_count() & 1


def identity_rows(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def matvec(rows: Sequence[int], v: int) -> int:
    out = 0
    for i, row in enumerate(rows):
        out |= parity(row & v) << i
    return out


def matmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Row masks of a @ b: row i of the product XORs the rows of b picked by a's row i."""
    out = []
    for row in a:
        acc = 0
        rest = row
        while rest:
            low = rest & -rest
            acc ^= b[low.bit_length() - 1]
            rest ^= low
        out.append(acc)
    return out


def transpose(rows: Sequence[int], n_cols: int) -> list[int]:
    out = [0] * n_cols
    for i, row in enumerate(rows):
        for j in range(n_cols):
            out[j] |= ((row >> j) & 1) << i
    return out


def rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) via Gaussian elimination on a working copy."""
    work = list(rows)
    r = 0
    for col in range(n_cols):
        pivot = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def invert(rows: Sequence[int], n: int) -> list[int] | None:
    """Inverse row masks via Gauss-Jordan on [M | I], or None if singular."""
    work = [rows[i] | (1 << (n + i)) for i in range(n)]
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, n):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            return None
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(n):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        r += 1
    return [row >> n for row in work]
