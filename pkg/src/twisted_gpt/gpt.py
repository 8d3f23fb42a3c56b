"""The GPT public-key cryptosystem: G_pub = S [X | G] P with P over GF(q)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg as la
from .codes import (
    DEFAULT_GUARD,
    DecodingFailure,
    GabidulinCode,
    LengthMismatch,
    TwistedGabidulinCode,
    bruteforce_rank_decode,
    gab_decode,
)
from .field import GF


class InvalidDistortionRank(ValueError):
    pass


class GuardExceeded(DecodingFailure):
    pass


@dataclass
class GptPublicKey:
    field: GF
    G_pub: la.Matrix
    n: int
    lam: int
    k: int
    t: int

    @property
    def length(self) -> int:
        return self.n + self.lam


@dataclass
class GptSecretKey:
    S: la.Matrix
    X: la.Matrix
    P: la.Matrix
    code: GabidulinCode
    s: int
    S_inv: la.Matrix | None = None
    P_inv: la.Matrix | None = None

    def __post_init__(self):
        F = self.code.field
        if self.S_inv is None:
            self.S_inv = la.inverse(self.S, F)
        if self.P_inv is None:
            self.P_inv = la.inverse(self.P, F.base)

    @property
    def field(self) -> GF:
        return self.code.field

    @property
    def experimental(self) -> bool:
        return isinstance(self.code, TwistedGabidulinCode) and self.code.ell > 0


def public_matrix(S: la.Matrix, X: la.Matrix, G: la.Matrix, P: la.Matrix, F: GF) -> la.Matrix:
    XG = la.hstack(X, G) if X and X[0] else [list(r) for r in G]
    return la.matmul(la.matmul(S, XG, F), P, F)


def keygen(code: GabidulinCode, lam: int, s: int, rng: random.Random):
    """Return (public key, secret key) for the given hidden code."""
    F, n, k = code.field, code.n, code.k
    if lam < 0:
        raise InvalidDistortionRank("lambda must be non-negative")
    if lam == 0 and s != 0:
        raise InvalidDistortionRank("lambda = 0 requires s = 0")
    if lam > 0 and not 1 <= s <= min(lam, k):
        raise InvalidDistortionRank(f"need 1 <= s <= min(lambda, k), got s={s}")
    S = la.random_full_rank(k, k, F, rng)
    X = la.random_matrix_of_rank(k, lam, s, F, rng) if lam else [[] for _ in range(k)]
    P = la.random_full_rank(n + lam, n + lam, F.base, rng)
    G_pub = public_matrix(S, X, code.generator(), P, F)
    pk = GptPublicKey(F, G_pub, n, lam, k, (n - k) // 2)
    return pk, GptSecretKey(S, X, P, code, s)


def rank_t_error(n_total: int, t: int, F: GF, rng: random.Random) -> list[int]:
    """Uniform-ish vector of rank exactly t: a B with a independent, B full rank over GF(q)."""
    if t > min(F.m, n_total) or t < 0:
        raise la.RankTooLarge(f"rank {t} impossible for length {n_total} over {F!r}")
    if t == 0:
        return [0] * n_total
    while True:
        a = [F.random(rng) for _ in range(t)]
        if F.linearly_independent_over_base(a):
            break
    B = la.random_full_rank(t, n_total, F.base, rng)
    return la.vec_mat(a, B, F)


def encrypt(message: Sequence[int], pk: GptPublicKey, rng: random.Random) -> list[int]:
    if len(message) != pk.k:
        raise LengthMismatch(f"message length {len(message)} != k={pk.k}")
    F = pk.field
    z = rank_t_error(pk.length, pk.t, F, rng)
    return la.vec_add(la.vec_mat(message, pk.G_pub, F), z, F)


def decrypt(ciphertext: Sequence[int], sk: GptSecretKey, t: int | None = None,
            guard: int = DEFAULT_GUARD) -> list[int]:
    F, code = sk.field, sk.code
    n, k = code.n, code.k
    lam = len(sk.P) - n
    if len(ciphertext) != n + lam:
        raise LengthMismatch(f"ciphertext length {len(ciphertext)} != {n + lam}")
    t = code.radius if t is None else t
    y = la.vec_mat(ciphertext, sk.P_inv, F)[lam:]
    if sk.experimental:
        try:
            result = bruteforce_rank_decode(code, y, t, guard)
        except DecodingFailure:
            raise
        except ValueError as exc:
            raise GuardExceeded(str(exc)) from exc
    else:
        result = gab_decode(code, y, t)
    if F.rank_over_base(result.error) > t:
        raise DecodingFailure("scrambled error exceeds the decoding radius")
    return la.vec_mat(result.message, sk.S_inv, F)
