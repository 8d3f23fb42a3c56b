"""Exact dense linear algebra over a finite field.

Matrices are lists of rows, rows are lists of field ints. Every routine takes
the field explicitly; the same code serves GF(q) (``prime_field(q)``) and
GF(q^m).
"""

from __future__ import annotations

import random
from typing import Sequence

from .field import GF

Matrix = list[list[int]]


class RankTooLarge(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def shape(A: Sequence[Sequence[int]]) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def add(A: Matrix, B: Matrix, F: GF) -> Matrix:
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def vec_add(u: Sequence[int], v: Sequence[int], F: GF) -> list[int]:
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_sub(u: Sequence[int], v: Sequence[int], F: GF) -> list[int]:
    return [F.sub(a, b) for a, b in zip(u, v)]


def vec_scale(c: int, v: Sequence[int], F: GF) -> list[int]:
    return [F.mul(c, a) for a in v]


def vec_mat(v: Sequence[int], A: Matrix, F: GF) -> list[int]:
    """Row vector times matrix."""
    cols = len(A[0]) if A else 0
    out = [0] * cols
    add_, mul = F.add, F.mul
    for vi, row in zip(v, A):
        if vi:
            for j, a in enumerate(row):
                if a:
                    out[j] = add_(out[j], mul(vi, a))
    return out


def matmul(A: Matrix, B: Matrix, F: GF) -> Matrix:
    return [vec_mat(row, B, F) for row in A]


def hstack(*blocks: Matrix) -> Matrix:
    return [sum((list(b[i]) for b in blocks), []) for i in range(len(blocks[0]))]


def frobenius_matrix(A: Matrix, i: int, F: GF) -> Matrix:
    """Entrywise a -> a^(q^i)."""
    return [[F.frobenius(a, i) for a in row] for row in A]


def rref(A: Sequence[Sequence[int]], F: GF) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form, zero rows dropped. Returns (rows, pivot columns)."""
    R = [list(r) for r in A]
    pivots: list[int] = []
    if not R:
        return R, pivots
    nrows, ncols = len(R), len(R[0])
    sub, mul, inv = F.sub, F.mul, F.inv
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r]
        if piv[c] != 1:
            s = inv(piv[c])
            piv = R[r] = [mul(s, x) if x else 0 for x in piv]
        for i in range(nrows):
            if i != r:
                f = R[i][c]
                if f:
                    row = R[i]
                    R[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(row, piv)]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(A: Sequence[Sequence[int]], F: GF) -> int:
    return len(rref(A, F)[1]) if A else 0


def right_kernel(A: Sequence[Sequence[int]], F: GF, ncols: int | None = None) -> Matrix:
    """Basis of {x : A x^T = 0} in reduced row echelon form."""
    if ncols is None:
        ncols = len(A[0])
    R, pivots = rref(A, F) if A else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(R, pivots):
            if row[f]:
                x[p] = F.neg(row[f])
        basis.append(x)
    return rref(basis, F)[0] if basis else []


def left_kernel(A: Matrix, F: GF) -> Matrix:
    return right_kernel(transpose(A), F, len(A))


def inverse(A: Matrix, F: GF) -> Matrix:
    n = len(A)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in R]


def solve_left(M: Matrix, y: Sequence[int], F: GF) -> list[int]:
    """Some x with x M = y; raises ValueError when y is outside the row space."""
    k = len(M)
    # (x | 1) [M ; -y] = 0  <=>  x M = y
    stacked = [list(row) for row in M] + [[F.neg(a) for a in y]]
    K = right_kernel(transpose(stacked), F, k + 1)
    for v in K:
        if v[k]:
            s = F.inv(v[k])
            return [F.mul(s, a) for a in v[:k]]
    raise ValueError("vector is not in the row space")


def in_row_space(M: Matrix, y: Sequence[int], F: GF) -> bool:
    return rank(list(M) + [list(y)], F) == rank(M, F)


def random_matrix(rows: int, cols: int, F: GF, rng: random.Random) -> Matrix:
    return [[F.random(rng) for _ in range(cols)] for _ in range(rows)]


def random_full_rank(rows: int, cols: int, F: GF, rng: random.Random) -> Matrix:
    """Uniform matrix of rank min(rows, cols), by rejection."""
    target = min(rows, cols)
    while True:
        A = random_matrix(rows, cols, F, rng)
        if rank(A, F) == target:
            return A


def random_matrix_of_rank(rows: int, cols: int, s: int, F: GF, rng: random.Random) -> Matrix:
    if s > min(rows, cols) or s < 0:
        raise RankTooLarge(f"rank {s} impossible for a {rows}x{cols} matrix")
    if s == 0:
        return zeros(rows, cols)
    return matmul(random_full_rank(rows, s, F, rng), random_full_rank(s, cols, F, rng), F)


# --- rank metric -------------------------------------------------------------

def expand_to_base(v: Sequence[int], F: GF) -> Matrix:
    """m x n matrix over GF(q) whose j-th column holds the coordinates of v_j."""
    return transpose([F.coeffs(a) for a in v])


def collapse_from_base(M: Matrix, F: GF) -> list[int]:
    return [F.from_coeffs(col) for col in transpose(M)]


def rank_metric_weight(v: Sequence[int], F: GF) -> int:
    return F.rank_over_base(v)


def rank_distance(x: Sequence[int], y: Sequence[int], F: GF) -> int:
    return rank_metric_weight(vec_sub(x, y, F), F)


class EchelonBasis:
    """Row space grown one vector at a time; keeps rows in reduced echelon form."""

    def __init__(self, F: GF, ncols: int):
        self.F = F
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        F = self.F
        sub, mul = F.sub, F.mul
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [sub(x, mul(f, y)) if y else x for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v = self.reduce(v)
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        F = self.F
        s = F.inv(v[p])
        v = [F.mul(s, x) if x else 0 for x in v]
        for i, row in enumerate(self.rows):
            f = row[p]
            if f:
                self.rows[i] = [F.sub(x, F.mul(f, y)) if y else x for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))
