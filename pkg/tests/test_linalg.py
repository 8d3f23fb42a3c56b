import random

import pytest

from oracles import NaiveField, naive_rank, prime_rank, rank_weight
from twisted_gpt import linalg as la
from twisted_gpt.field import GF, prime_field
from twisted_gpt.linpoly import moore_matrix

F = GF(2, 8)
N = NaiveField(2, 8, F.modulus)
F2 = prime_field(2)


def test_rank_matches_oracle():
    rng = random.Random(11)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        A = la.random_matrix(r, c, F, rng)
        if rng.random() < 0.5 and r > 1:
            A[-1] = list(A[0])
        assert la.rank(A, F) == naive_rank(A, N)


def test_rank_examples():
    assert la.rank(la.identity(5), F) == 5
    assert la.rank([[1, 2, 3], [1, 2, 3]], F) == 1
    rng = random.Random(2)
    for n in range(2, 9):
        alpha = _independent(n, rng)
        for k in range(1, n + 1):
            M = moore_matrix(alpha, k, F)
            assert la.rank(M, F) == k == naive_rank(M, N)


def _independent(n, rng, field=F):
    while True:
        v = [field.random(rng) for _ in range(n)]
        if field.linearly_independent_over_base(v):
            return v


def test_kernel():
    assert la.right_kernel(la.identity(4), F) == []
    assert len(la.right_kernel([[0, 0, 0, 0, 0]], F)) == 5
    rng = random.Random(4)
    for _ in range(40):
        A = la.random_matrix(rng.randint(1, 5), 6, F, rng)
        K = la.right_kernel(A, F)
        assert len(K) + la.rank(A, F) == 6
        for v in K:
            assert not any(la.vec_mat(v, la.transpose(A), F))
        R, _ = la.rref(K, F)
        assert R == K  # returned in reduced row echelon form


def test_kernel_of_moore_stack_is_one_dimensional():
    rng = random.Random(8)
    n, k = 8, 3
    alpha = _independent(n, rng)
    from twisted_gpt.qsum import qsum_matrix
    K = la.right_kernel(qsum_matrix(moore_matrix(alpha, k, F), n - k - 1, F), F)
    assert len(K) == 1


def test_inverse_and_solve():
    rng = random.Random(5)
    A = la.random_full_rank(5, 5, F, rng)
    assert la.matmul(A, la.inverse(A, F), F) == la.identity(5)
    x = [F.random(rng) for _ in range(5)]
    assert la.solve_left(A, la.vec_mat(x, A, F), F) == x
    with pytest.raises(la.SingularMatrix):
        la.inverse([[1, 2], [1, 2]], F)


def test_random_full_rank():
    rng = random.Random(0)
    assert la.random_full_rank(1, 1, F2, rng) == [[1]]
    for _ in range(50):
        assert la.rank(la.random_full_rank(4, 7, F, rng), F) == 4
        P = la.random_full_rank(6, 6, F2, rng)
        assert all(x in (0, 1) for row in P for x in row)
        assert prime_rank(P, 2) == 6


def test_invertible_fraction_monte_carlo():
    # P(random n x n over GF(2) invertible) = prod (1 - 2^-i) > 0.288
    rng = random.Random(1)
    hits = sum(la.rank(la.random_matrix(8, 8, F2, rng), F2) == 8 for _ in range(4000))
    expected = 1.0
    for i in range(1, 9):
        expected *= 1 - 2**-i
    assert abs(hits / 4000 - expected) < 0.03
    assert expected > 0.288


def test_random_matrix_of_rank():
    rng = random.Random(3)
    assert la.random_matrix_of_rank(3, 4, 0, F, rng) == la.zeros(3, 4)
    for _ in range(1000):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        s = rng.randint(0, min(r, c))
        assert la.rank(la.random_matrix_of_rank(r, c, s, F, rng), F) == s
    with pytest.raises(la.RankTooLarge):
        la.random_matrix_of_rank(2, 3, 3, F, rng)


def test_expand_and_weight():
    F3 = GF(2, 3)
    assert la.expand_to_base([1], F3) == [[1], [0], [0]]
    assert la.expand_to_base([0, 0], F3) == la.zeros(3, 2)
    rng = random.Random(6)
    for _ in range(100):
        v = [F.random(rng) for _ in range(rng.randint(1, 10))]
        assert la.collapse_from_base(la.expand_to_base(v, F), F) == v
        w = la.rank_metric_weight(v, F)
        assert w == rank_weight(v, N)
        assert 0 <= w <= min(8, len(v))
    assert la.rank_metric_weight([0, 0, 0], F) == 0
    assert la.rank_metric_weight([77] * 5, F) == 1
    alpha = _independent(6, rng)
    assert la.rank_metric_weight(alpha, F) == 6


def test_weight_odd_characteristic():
    G = GF(3, 4)
    NG = NaiveField(3, 4, G.modulus)
    rng = random.Random(2)
    for _ in range(50):
        v = [G.random(rng) for _ in range(5)]
        assert la.rank_metric_weight(v, G) == rank_weight(v, NG)


def test_frobenius_matrix():
    rng = random.Random(9)
    A = la.random_matrix(3, 5, F, rng)
    assert la.frobenius_matrix(A, 0, F) == A
    B = [[rng.randint(0, 1) for _ in range(5)] for _ in range(3)]
    assert la.frobenius_matrix(B, 3, F) == B
    for i in range(1, 8):
        assert la.rank(la.frobenius_matrix(A, i, F), F) == la.rank(A, F)


def test_echelon_basis():
    rng = random.Random(12)
    basis = la.EchelonBasis(F, 5)
    rows = la.random_matrix(7, 5, F, rng)
    grew = [basis.add(r) for r in rows]
    assert len(basis) == 5 and sum(grew) == 5
    assert basis.contains(rows[0])
    small = la.EchelonBasis(F, 4)
    small.add([1, 0, 0, 0])
    assert not small.contains([0, 1, 0, 0])
    assert not small.add([3, 0, 0, 0])
