import random

import pytest

from oracles import NaiveField, prime_rank
from twisted_gpt import linalg as la
from twisted_gpt.codes import LengthMismatch, chain_field, random_gabidulin, sample_resistant_code, sample_twisted_code
from twisted_gpt.field import GF
from twisted_gpt.gpt import (
    GuardExceeded,
    InvalidDistortionRank,
    decrypt,
    encrypt,
    keygen,
    public_matrix,
    rank_t_error,
)

F = GF(2, 12)


def _key(rng, lam=2, s=1, n=12, k=4):
    return keygen(random_gabidulin(n, k, F, rng), lam, s, rng)


def test_keygen_invariants():
    rng = random.Random(1)
    for _ in range(100):
        pk, sk = _key(rng)
        assert la.rank(pk.G_pub, F) == 4
        assert pk.t == 4 and pk.length == 14
        assert la.rank(sk.X, F) == 1
        assert all(x in (0, 1) for row in sk.P for x in row)
        assert prime_rank(sk.P, 2) == 14
        assert public_matrix(sk.S, sk.X, sk.code.generator(), sk.P, F) == pk.G_pub
        assert not sk.experimental


def test_keygen_without_distortion():
    rng = random.Random(2)
    pk, sk = _key(rng, lam=0, s=0)
    G = la.matmul(la.matmul(sk.S, sk.code.generator(), F), sk.P, F)
    assert pk.G_pub == G


@pytest.mark.parametrize("lam,s", [(0, 1), (2, 0), (2, 3), (-1, 0), (3, 5)])
def test_invalid_distortion(lam, s):
    with pytest.raises(InvalidDistortionRank):
        _key(random.Random(0), lam=lam, s=s)


def test_rank_t_error():
    rng = random.Random(3)
    assert rank_t_error(8, 0, F, rng) == [0] * 8
    for _ in range(1000):
        t = rng.randint(0, 6)
        assert la.rank_metric_weight(rank_t_error(10, t, F, rng), F) == t
    with pytest.raises(la.RankTooLarge):
        rank_t_error(5, 6, F, rng)


def test_error_support_census():
    # 2-dimensional row spaces in GF(2)^4: 35 in total
    G = GF(2, 4)
    rng = random.Random(4)
    spaces = set()
    for _ in range(1000):
        E = la.expand_to_base(rank_t_error(4, 2, G, rng), G)
        R, _ = la.rref(E, G.base)
        spaces.add(tuple(map(tuple, R)))
    assert len(spaces) > 35 // 2


def test_encrypt_properties():
    rng = random.Random(5)
    pk, _ = _key(rng)
    msg = [F.random(rng) for _ in range(4)]
    c = encrypt(msg, pk, rng)
    assert la.rank_metric_weight(la.vec_sub(c, la.vec_mat(msg, pk.G_pub, F), F), F) == pk.t
    seen = {tuple(encrypt(msg, pk, rng)) for _ in range(100)}
    assert len(seen) == 100
    with pytest.raises(LengthMismatch):
        encrypt(msg[:3], pk, rng)


def test_zero_error_instance():
    rng = random.Random(6)
    pk, sk = _key(rng, lam=1, s=1, n=5, k=4)
    assert pk.t == 0
    msg = [F.random(rng) for _ in range(4)]
    c = encrypt(msg, pk, rng)
    assert c == la.vec_mat(msg, pk.G_pub, F)
    assert decrypt(c, sk) == msg


def test_round_trip_gabidulin():
    rng = random.Random(7)
    for _ in range(5):
        pk, sk = _key(rng)
        for _ in range(40):
            msg = [F.random(rng) for _ in range(4)]
            assert decrypt(encrypt(msg, pk, rng), sk) == msg


def test_scrambled_error_rank_bounded():
    rng = random.Random(8)
    pk, sk = _key(rng)
    for _ in range(50):
        z = rank_t_error(pk.length, pk.t, F, rng)
        zp = la.vec_mat(z, sk.P_inv, F)[pk.lam:]
        assert la.rank_metric_weight(zp, F) <= la.rank_metric_weight(z, F)


@pytest.mark.parametrize("n,k,lam,s", [(6, 3, 0, 0), (6, 3, 2, 1)])
def test_round_trip_resistant_twisted(n, k, lam, s):
    rng = random.Random(9)
    code = sample_resistant_code(n, k, 1, chain_field(2, n, 1), rng)
    pk, sk = keygen(code, lam, s, rng)
    assert sk.experimental and pk.t == 1
    for _ in range(10):
        msg = [code.field.random(rng) for _ in range(k)]
        assert decrypt(encrypt(msg, pk, rng), sk) == msg


def test_round_trip_tiny_twisted():
    rng = random.Random(10)
    code = sample_twisted_code(4, 2, 1, chain_field(2, 4, 1), rng)
    pk, sk = keygen(code, 0, 0, rng)
    for _ in range(10):
        msg = [code.field.random(rng) for _ in range(2)]
        assert decrypt(encrypt(msg, pk, rng), sk) == msg


def test_twisted_guard():
    rng = random.Random(11)
    code = sample_resistant_code(8, 3, 1, chain_field(2, 8, 1), rng)
    pk, sk = keygen(code, 0, 0, rng)
    c = encrypt([1, 2, 3], pk, rng)
    with pytest.raises(GuardExceeded):
        decrypt(c, sk, guard=2**4)


def test_ciphertext_length_checked():
    rng = random.Random(12)
    pk, sk = _key(rng)
    with pytest.raises(LengthMismatch):
        decrypt([0] * 12, sk)
