"""Structural attacks on GPT public keys and work-factor estimates.

Both attacks share one pipeline: compute the q-sums of the public code, take
the dual of the largest proper one, undo the GF(q) column scrambling on the
distortion coordinates, and look for a Moore parity vector of a Gabidulin
supercode.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import linalg as la
from .codes import DecodingFailure, GabidulinCode, CodeError, gab_decode
from .field import GF
from .gpt import GptPublicKey, encrypt
from .linpoly import moore_matrix
from .qsum import profile

SHUFFLE_LIMIT = 1 << 22


@dataclass
class AttackReport:
    attack: str
    success: bool
    i_used: int | None
    dual_dimension: int | None
    work_counter: int
    dual_dims: list[int] = dc_field(default_factory=list)
    recovered_decoder: Callable[[Sequence[int]], list[int]] | None = None
    recovered_points: list[int] | None = None
    budget_exceeded: bool = False
    detail: str = ""

    def line(self, trial: int = 0) -> str:
        i = -1 if self.i_used is None else self.i_used
        dual = -1 if self.dual_dimension is None else self.dual_dimension
        return (f"trial={trial} attack={self.attack} success={str(self.success).lower()} "
                f"i={i} dualdim={dual} work={self.work_counter}")


def public_qsum_dims(G: la.Matrix, F: GF) -> list[int]:
    """dim Lambda_i(C) for i = 0, 1, ... until full length or no growth."""
    return profile(G, F).dims


@dataclass
class _Projection:
    """Column change T over GF(q) moving a dual space onto the last n coordinates."""
    T: la.Matrix
    T_inv_t: la.Matrix  # (T^{-1})^T over GF(q)
    lam: int

    def apply(self, v: Sequence[int], F: GF) -> list[int]:
        return la.vec_mat(v, self.T_inv_t, F)

    def generator(self, G: la.Matrix, F: GF) -> la.Matrix:
        return [self.apply(row, F)[self.lam:] for row in G]

    def dual(self, v: Sequence[int], F: GF) -> list[int]:
        return la.vec_mat(v, self.T, F)[self.lam:]


def _projection(vectors: Sequence[Sequence[int]], n: int, F: GF) -> _Projection | None:
    """T with (v T) supported on the last n coordinates for every v given.

    The first N - n columns of T span the common GF(q)-kernel of the
    expansions of the vectors; the rest complete it to a basis.
    """
    B = F.base
    N = len(vectors[0])
    lam = N - n
    rows = []
    for v in vectors:
        rows.extend(la.expand_to_base(v, F))
    K = la.right_kernel(rows, B, N)
    if len(K) != lam:
        return None
    cols = [list(k) for k in K]
    span = la.EchelonBasis(B, N)
    for c in cols:
        span.add(c)
    for j in range(N):
        e = [0] * N
        e[j] = 1
        if span.add(e):
            cols.append(e)
    T = la.transpose(cols)
    T_inv_t = la.transpose(la.inverse(T, B))
    return _Projection(T, T_inv_t, lam)


def points_from_dual(h: Sequence[int], F: GF) -> list[int] | None:
    """Evaluation points alpha with <alpha^[l], h> = 0 for l < n-1, up to scaling."""
    n = len(h)
    rows = [[F.frobenius(a, -l) for a in h] for l in range(n - 1)]
    K = la.right_kernel(rows, F, n)
    if len(K) != 1 or not F.linearly_independent_over_base(K[0]):
        return None
    return K[0]


def _critical(dims: list[int], N: int) -> int | None:
    proper = [i for i, d in enumerate(dims) if d < N]
    return proper[-1] if proper else None


def overbeck_attack(pk: GptPublicKey, rng: random.Random | None = None,
                    references: int = 10) -> AttackReport:
    """Recover a decoder for a GPT key built on a Gabidulin code.

    Scans i upward for a one-dimensional dual of Lambda_i(G_pub); the dual
    vector yields a Gabidulin code on the projected coordinates.
    """
    F, n, k = pk.field, pk.n, pk.k
    N = pk.length
    rng = rng or random.Random(0)
    dims = public_qsum_dims(pk.G_pub, F)
    dual_dims = [N - d for d in dims]
    crit = _critical(dims, N)
    crit_dual = None if crit is None else dual_dims[crit]

    def fail(why: str, i=crit) -> AttackReport:
        return AttackReport("overbeck", False, i, crit_dual, len(dims), dual_dims, detail=why)

    i = next((j for j, d in enumerate(dual_dims) if d == 1), None)
    if i is None:
        return fail(f"no q-sum has a one-dimensional dual (duals {dual_dims})")
    from .qsum import qsum_matrix
    K = la.right_kernel(qsum_matrix(pk.G_pub, i, F), F, N)
    v = K[0]
    if F.rank_over_base(v) != n:
        return fail("dual vector does not have rank n", i)
    proj = _projection([v], n, F)
    if proj is None:
        return fail("cannot isolate distortion columns", i)
    G2 = proj.generator(pk.G_pub, F)
    h = proj.dual(v, F)
    alpha = points_from_dual(h, F)
    if alpha is None:
        return fail("dual vector is not a Moore parity vector", i)
    try:
        hidden = GabidulinCode(F, alpha, k)
    except CodeError as exc:
        return fail(str(exc), i)
    gamma = [F.frobenius(a, -(n - k - 1)) for a in h]
    check = la.matmul(moore_matrix(gamma, n - k, F), la.transpose(G2), F)
    if any(any(r) for r in check) or la.rank(hidden.generator() + G2, F) != k:
        return fail("projected code is not the recovered Gabidulin code", i)

    def decoder(c: Sequence[int]) -> list[int]:
        y = proj.apply(c, F)[proj.lam:]
        res = gab_decode(hidden, y, pk.t)
        return la.solve_left(G2, res.codeword, F)

    work = len(dims)
    for _ in range(references):
        m = [F.random(rng) for _ in range(k)]
        work += 1
        try:
            if decoder(encrypt(m, pk, rng)) != m:
                return fail("recovered decoder returned a wrong message", i)
        except (DecodingFailure, ValueError):
            return fail("recovered decoder failed on a reference ciphertext", i)
    return AttackReport("overbeck", True, i, crit_dual, work, dual_dims, decoder, alpha)


@dataclass
class Applicability:
    critical_i: int | None
    dual_dim: int | None
    moore_structured: bool


def overbeck_applicability(G: la.Matrix, F: GF) -> Applicability:
    n = len(G[0])
    dims = public_qsum_dims(G, F)
    crit = _critical(dims, n)
    if crit is None:
        return Applicability(None, None, False)
    step = dims[crit + 1] - dims[crit] if crit + 1 < len(dims) else 0
    return Applicability(crit, n - dims[crit], step == 1)


def _projective_count(Q: int, d: int) -> int:
    return (Q**d - 1) // (Q - 1)


def _projective_point(idx: int, Q: int, d: int) -> list[int]:
    """Coefficient vector of the idx-th normalized point (first nonzero entry 1)."""
    for lead in range(d):
        block = Q ** (d - 1 - lead)
        if idx < block:
            tail = []
            for _ in range(d - 1 - lead):
                idx, r = divmod(idx, Q)
                tail.append(r)
            return [0] * lead + [1] + tail
        idx -= block
    raise IndexError("projective index out of range")


def _index_order(total: int, limit: int, rng: random.Random):
    if total <= SHUFFLE_LIMIT:
        order = list(range(total))
        rng.shuffle(order)
        yield from order[:limit]
        return
    seen: set[int] = set()
    while len(seen) < min(limit, total):
        idx = rng.randrange(total)
        if idx not in seen:
            seen.add(idx)
            yield idx


def exponential_attack(pk: GptPublicKey, budget: int | None = None,
                       rng: random.Random | None = None) -> AttackReport:
    """Search the (l+1)-dimensional dual of the largest proper q-sum for the
    Moore parity vector of the Gabidulin supercode.

    A candidate v is accepted when the public code meets Gab(alpha_v, k) in
    dimension at least k - l, i.e. the matrix with entries <g_r, v^[-j]>,
    Delta <= j < n - k, has rank at most l.
    """
    F, n, k = pk.field, pk.n, pk.k
    N = pk.length
    rng = rng or random.Random(0)
    dims = public_qsum_dims(pk.G_pub, F)
    dual_dims = [N - d for d in dims]
    crit = _critical(dims, N)
    if crit is None:
        return AttackReport("exhaustive", False, None, None, 0, dual_dims, detail="code is the full space")
    d = dual_dims[crit]
    ell = d - 1

    def fail(why: str, work=0, exceeded=False) -> AttackReport:
        return AttackReport("exhaustive", False, crit, d, work, dual_dims,
                            budget_exceeded=exceeded, detail=why)

    if (n - k - ell) % (ell + 1) or n - k - ell < ell + 1:
        return fail(f"dual dimension {d} does not fit a resistant twisted code")
    delta = (n - k - ell) // (ell + 1)
    from .qsum import qsum_matrix
    basis = la.right_kernel(qsum_matrix(pk.G_pub, crit, F), F, N)
    proj = _projection(basis, n, F)
    if proj is None:
        return fail("cannot isolate distortion columns")
    G2 = proj.generator(pk.G_pub, F)
    duals = [proj.dual(b, F) for b in basis]
    js = range(delta, n - k)
    # A[b][j][r] = <g_r^[j], b>; the test matrix is frob^-j of sum_b c_b A[b][j][r]
    frob_rows = {j: la.frobenius_matrix(G2, j, F) for j in js}
    A = [[[_dot(g, b, F) for g in frob_rows[j]] for j in js] for b in duals]

    Q = F.order
    total = _projective_count(Q, d)
    limit = total if budget is None else min(budget, total)
    work = 0
    for idx in _index_order(total, limit, rng):
        work += 1
        coef = _projective_point(idx, Q, d)
        M = []
        for jpos, j in enumerate(js):
            row = []
            for r in range(k):
                acc = 0
                for b, c in enumerate(coef):
                    if c:
                        acc = F.add(acc, F.mul(c, A[b][jpos][r]))
                row.append(F.frobenius(acc, -j))
            M.append(row)
        if not M or la.rank(M, F) <= ell:
            v = [0] * n
            for c, b in zip(coef, duals):
                if c:
                    v = la.vec_add(v, la.vec_scale(c, b, F), F)
            alpha = points_from_dual(v, F)
            if alpha is None:
                continue
            return AttackReport("exhaustive", True, crit, d, work, dual_dims,
                                recovered_points=alpha,
                                detail="recovered evaluation points of the Gabidulin supercode")
    exceeded = limit < total
    return fail("budget exceeded" if exceeded else "no candidate passed", work, exceeded)


def _dot(u: Sequence[int], v: Sequence[int], F: GF) -> int:
    r = 0
    for a, b in zip(u, v):
        if a and b:
            r = F.add(r, F.mul(a, b))
    return r


# --- work factors -------------------------------------------------------------------

@dataclass(frozen=True)
class WorkFactor:
    exact: Fraction
    log2: float


def work_factor_exponential(q: int, m: int, ell: int) -> WorkFactor:
    """(q^m)^(l+1) / (q^m - 1)."""
    Q = q**m
    exact = Fraction(Q ** (ell + 1), Q - 1)
    return WorkFactor(exact, (ell + 1) * math.log2(Q) - math.log2(Q - 1))


@dataclass
class SecurityReport:
    entries: dict[str, float]
    complete: bool

    @property
    def level(self) -> float:
        return min(self.entries.values())

    def summary(self) -> str:
        parts = [f"{name}={bits:.2f}" for name, bits in self.entries.items()]
        if self.complete:
            parts.append(f"level={self.level:.2f}")
        else:
            parts.append("level=incomplete (no decoding-attack estimator)")
        return " ".join(parts)


def estimate_security(params: Mapping[str, int],
                      estimators: Mapping[str, Callable[[Mapping[str, int]], float]] | None = None
                      ) -> SecurityReport:
    """Exponential-attack bits plus any registered external estimators.

    Without a decoding-attack estimator the level is only an upper bound on
    what the structural attack alone allows, so the report is incomplete.
    """
    entries = {"exponential": work_factor_exponential(params["q"], params["m"], params["ell"]).log2}
    for name, fn in (estimators or {}).items():
        entries[name] = float(fn(params))
    return SecurityReport(entries, complete=bool(estimators))
