"""Gabidulin and twisted Gabidulin codes: construction, encoding and decoding."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg as la
from .field import GF, NoChainDeclared
from .linpoly import LinearizedPolynomial, moore_matrix

DEFAULT_GUARD = 1 << 20


class CodeError(ValueError):
    pass


class LengthMismatch(CodeError):
    pass


class DecodingFailure(CodeError):
    pass


class AmbiguousDecoding(DecodingFailure):
    pass


class TooLargeToEnumerate(CodeError):
    pass


class InfeasibleParameters(CodeError):
    pass


@dataclass(eq=False)
class GabidulinCode:
    field: GF
    alpha: tuple[int, ...]
    k: int

    def __post_init__(self):
        self.alpha = tuple(self.alpha)
        n = len(self.alpha)
        if not 0 < self.k < n <= self.field.m:
            raise CodeError(f"need 0 < k < n <= m, got k={self.k}, n={n}, m={self.field.m}")
        if not self.field.linearly_independent_over_base(self.alpha):
            raise CodeError("evaluation points are not linearly independent over GF(q)")

    kind = "gab"
    ell = 0
    hooks = twists = etas = ()

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def radius(self) -> int:
        return (self.n - self.k) // 2

    def generator(self) -> la.Matrix:
        return moore_matrix(self.alpha, self.k, self.field)

    def polynomial(self, message: Sequence[int]) -> LinearizedPolynomial:
        return LinearizedPolynomial(self.field, message)

    def encode(self, message: Sequence[int]) -> list[int]:
        if len(message) != self.k:
            raise LengthMismatch(f"message length {len(message)} != k={self.k}")
        return la.vec_mat(message, self.generator(), self.field)

    def evaluate(self, message: Sequence[int]) -> list[int]:
        """Encode by evaluating the message polynomial at the points."""
        if len(message) != self.k:
            raise LengthMismatch(f"message length {len(message)} != k={self.k}")
        f = self.polynomial(message)
        return [f(a) for a in self.alpha]


@dataclass(eq=False)
class TwistedGabidulinCode(GabidulinCode):
    hooks: tuple[int, ...] = ()
    twists: tuple[int, ...] = ()
    etas: tuple[int, ...] = ()
    mrd_chain_validated: bool = dc_field(default=False)
    overbeck_conditions_validated: bool = dc_field(default=False)

    kind = "twisted"

    def __post_init__(self):
        super().__post_init__()
        n, k = self.n, self.k
        if not len(self.hooks) == len(self.twists) == len(self.etas):
            raise CodeError("hooks, twists and etas must have equal length")
        if self.ell > n - k:
            raise CodeError("at most n-k twists")
        if len(set(self.twists)) != len(self.twists):
            raise CodeError("twists must be distinct")
        if any(not 1 <= t <= n - k for t in self.twists):
            raise CodeError("twists must lie in 1..n-k")
        if any(not 0 <= h < k for h in self.hooks):
            raise CodeError("hooks must lie in 0..k-1")
        if any(e == 0 for e in self.etas):
            raise CodeError("etas must be nonzero")
        order = sorted(range(len(self.hooks)), key=lambda i: self.hooks[i])
        self.hooks = tuple(self.hooks[i] for i in order)
        self.twists = tuple(self.twists[i] for i in order)
        self.etas = tuple(self.etas[i] for i in order)

    @property
    def ell(self) -> int:
        return len(self.hooks)

    def generator(self) -> la.Matrix:
        F = self.field
        G = moore_matrix(self.alpha, self.k, F)
        for h, t, eta in zip(self.hooks, self.twists, self.etas):
            high = [F.mul(eta, F.frobenius(a, self.k - 1 + t)) for a in self.alpha]
            G[h] = la.vec_add(G[h], high, F)
        return G

    def polynomial(self, message: Sequence[int]) -> LinearizedPolynomial:
        F = self.field
        coeffs = list(message) + [0] * (max(self.twists, default=0))
        for h, t, eta in zip(self.hooks, self.twists, self.etas):
            coeffs[self.k - 1 + t] = F.add(coeffs[self.k - 1 + t], F.mul(eta, message[h]))
        return LinearizedPolynomial(F, coeffs)


def gab_parity_gamma(code: GabidulinCode) -> list[int]:
    """gamma whose (n-k)-row Moore matrix is a parity-check matrix of the code."""
    F, n, k = code.field, code.n, code.k
    kernel = la.right_kernel(moore_matrix(code.alpha, n - 1, F), F)
    if len(kernel) != 1:
        raise CodeError("Moore stack kernel is not one-dimensional")
    gamma = [F.frobenius(a, -(n - k - 1)) for a in kernel[0]]
    check = la.matmul(moore_matrix(gamma, n - k, F), la.transpose(code.generator()), F)
    if any(any(row) for row in check) or not F.linearly_independent_over_base(gamma):
        raise CodeError("parity vector failed verification")
    return gamma


@dataclass
class DecodeResult:
    codeword: list[int]
    error: list[int]
    message: list[int]


def gab_decode(code: GabidulinCode, received: Sequence[int], radius: int | None = None) -> DecodeResult:
    """Interpolation decoder for Gabidulin codes up to floor((n-k)/2) rank errors.

    Finds nonzero (V, N) with V(y_j) = N(alpha_j), deg V <= t, deg N < k + t,
    then left-divides N by V.
    """
    F, n, k = code.field, code.n, code.k
    if len(received) != n:
        raise LengthMismatch(f"received length {len(received)} != n={n}")
    t = code.radius if radius is None else min(radius, code.radius)
    y = list(received)
    y_moore = moore_matrix(y, t + 1, F)
    a_moore = moore_matrix(code.alpha, k + t, F)
    system = [[y_moore[i][j] for i in range(t + 1)] + [F.neg(a_moore[i][j]) for i in range(k + t)]
              for j in range(n)]
    kernel = la.right_kernel(system, F, k + 2 * t + 1)
    sol = next((v for v in kernel if any(v[:t + 1])), None)
    if sol is None:
        raise DecodingFailure("interpolation system has no usable solution")
    V = LinearizedPolynomial(F, sol[:t + 1])
    N = LinearizedPolynomial(F, sol[t + 1:])
    f, rem = N.left_divide(V)
    if not rem.is_zero() or len(f.coeffs) > k:
        raise DecodingFailure("no codeword within the decoding radius")
    message = list(f.coeffs) + [0] * (k - len(f.coeffs))
    codeword = [f(a) for a in code.alpha]
    error = la.vec_sub(y, codeword, F)
    if la.rank_metric_weight(error, F) > t:
        raise DecodingFailure("no codeword within the decoding radius")
    return DecodeResult(codeword, error, message)


# --- brute force ----------------------------------------------------------------

def _codewords(G: la.Matrix, F: GF):
    """Yield (message, codeword) for every message, message-major order."""
    k, n = len(G), len(G[0])
    multiples = [[[F.mul(c, a) for a in row] for c in F.elements()] for row in G]
    for msg in itertools.product(F.elements(), repeat=k):
        cw = [0] * n
        for i, c in enumerate(msg):
            if c:
                cw = la.vec_add(cw, multiples[i][c], F)
        yield msg, cw


def bruteforce_min_distance(code: GabidulinCode, guard: int = DEFAULT_GUARD,
                            projective: bool = False) -> int:
    """Minimum rank weight over all nonzero codewords, by enumeration.

    With ``projective`` only messages whose first nonzero entry is 1 are
    visited; rank weight is invariant under nonzero scaling so the answer is
    unchanged.
    """
    F = code.field
    if F.order ** code.k > guard:
        raise TooLargeToEnumerate(f"{F.order}^{code.k} codewords exceed guard {guard}")
    best = code.n + 1
    for msg, cw in _codewords(code.generator(), F):
        if not any(msg):
            continue
        if projective and next(c for c in msg if c) != 1:
            continue
        w = F.rank_over_base(cw)
        if w < best:
            best = w
    return best


def _rref_patterns(w: int, n: int, q: int):
    """All w x n reduced row echelon matrices of rank w over GF(q)."""
    for pivots in itertools.combinations(range(n), w):
        free = [(r, c) for r in range(w) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            B = [[0] * n for _ in range(w)]
            for r, p in enumerate(pivots):
                B[r][p] = 1
            for (r, c), v in zip(free, values):
                B[r][c] = v
            yield B


def _gaussian_binomial(n: int, w: int, q: int) -> int:
    num = den = 1
    for i in range(w):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def bruteforce_rank_decode(code: GabidulinCode, received: Sequence[int], radius: int,
                           guard: int = DEFAULT_GUARD) -> DecodeResult:
    """The unique codeword within rank distance ``radius``, by exhaustive search.

    Enumerates error row spaces (reduced echelon bases B over GF(q)) and solves
    the syndrome equation for the error's column coefficients; falls back to
    codeword enumeration when that is cheaper.
    """
    F, n, k = code.field, code.n, code.k
    y = list(received)
    if len(y) != n:
        raise LengthMismatch(f"received length {len(y)} != n={n}")
    G = code.generator()
    supports = sum(_gaussian_binomial(n, w, F.q) for w in range(radius + 1))
    found: dict[tuple[int, ...], list[int]] = {}
    if supports <= guard:
        H = la.right_kernel(G, F)
        syndrome = [sum_(F, (F.mul(h, a) for h, a in zip(row, y))) for row in H]
        for w in range(radius + 1):
            for B in _rref_patterns(w, n, F.q):
                # e = a B; H e^T = sum_i a_i (H B_i^T)
                cols = [[sum_(F, (F.mul(h, b) for h, b in zip(row, Bi))) for row in H] for Bi in B]
                for a in _solutions(cols, syndrome, F, guard):
                    e = la.vec_mat(a, B, F) if B else [0] * n
                    c = la.vec_sub(y, e, F)
                    found.setdefault(tuple(c), e)
                    if len(found) > 1:
                        raise AmbiguousDecoding("two codewords within the radius")
    elif F.order ** k <= guard:
        for _, cw in _codewords(G, F):
            e = la.vec_sub(y, cw, F)
            if F.rank_over_base(e) <= radius:
                found.setdefault(tuple(cw), e)
                if len(found) > 1:
                    raise AmbiguousDecoding("two codewords within the radius")
    else:
        raise TooLargeToEnumerate("neither error supports nor codewords fit the guard")
    if not found:
        raise DecodingFailure("no codeword within the radius")
    (c, e), = found.items()
    return DecodeResult(list(c), e, la.solve_left(G, list(c), F))


def sum_(F: GF, values) -> int:
    r = 0
    for v in values:
        r = F.add(r, v)
    return r


def _solutions(cols: list[list[int]], target: list[int], F: GF, guard: int):
    """All a with sum_i a_i cols[i] = target."""
    w = len(cols)
    if w == 0:
        if not any(target):
            yield []
        return
    # columns of the system matrix are cols[i]
    M = la.transpose(cols)
    aug = [row + [t] for row, t in zip(M, target)]
    R, pivots = la.rref(aug, F)
    if w in pivots:
        return
    free = [c for c in range(w) if c not in pivots]
    if F.order ** len(free) > guard:
        raise TooLargeToEnumerate("syndrome solution space too large")
    for values in itertools.product(F.elements(), repeat=len(free)):
        a = [0] * w
        for c, v in zip(free, values):
            a[c] = v
        for row, p in zip(R, pivots):
            acc = row[w]
            for c in free:
                if row[c]:
                    acc = F.sub(acc, F.mul(row[c], a[c]))
            a[p] = acc
        yield a


# --- validation and sampling ------------------------------------------------------

@dataclass
class ChainReport:
    n_within_s0: bool
    alpha_in_s0: list[bool]
    eta_in_layer: list[bool]

    @property
    def passed(self) -> bool:
        return self.n_within_s0 and all(self.alpha_in_s0) and all(self.eta_in_layer)

    def failures(self) -> list[str]:
        out = []
        if not self.n_within_s0:
            out.append("n > s_0")
        out += [f"alpha_{i} outside GF(q^s_0)" for i, ok in enumerate(self.alpha_in_s0) if not ok]
        out += [f"eta_{i + 1} outside layer {i + 1}" for i, ok in enumerate(self.eta_in_layer) if not ok]
        return out


def validate_mrd_chain(code: GabidulinCode, F: GF | None = None) -> ChainReport:
    """Check the subfield-chain conditions that make a twisted code MRD."""
    F = F or code.field
    if not F.chain:
        raise NoChainDeclared("field has no subfield chain")
    chain = F.chain
    s0 = chain[0]
    report = ChainReport(
        n_within_s0=code.n <= s0,
        alpha_in_s0=[F.in_subfield(a, s0) for a in code.alpha],
        eta_in_layer=[
            i + 1 < len(chain) and F.in_subfield(eta, chain[i + 1]) and not F.in_subfield(eta, chain[i])
            for i, eta in enumerate(code.etas)
        ],
    )
    if isinstance(code, TwistedGabidulinCode):
        code.mrd_chain_validated = report.passed
    return report


def resistant_delta(n: int, k: int, ell: int) -> int:
    if (n - k - ell) % (ell + 1):
        raise InfeasibleParameters(f"Delta = (n-k-ell)/(ell+1) = ({n - k - ell})/{ell + 1} is not an integer")
    delta = (n - k - ell) // (ell + 1)
    if delta < 1:
        raise InfeasibleParameters(f"Delta = {delta} must be at least 1")
    return delta


def resistant_twists(n: int, k: int, ell: int) -> list[int]:
    delta = resistant_delta(n, k, ell)
    return [i * (delta + 1) for i in range(1, ell + 1)]


def overbeck_condition_failures(code: GabidulinCode) -> list[str]:
    n, k, ell = code.n, code.k, code.ell
    try:
        twists = resistant_twists(n, k, ell)
    except InfeasibleParameters as exc:
        return [str(exc)]
    out = []
    if list(code.twists) != twists:
        out.append(f"twists {list(code.twists)} != {twists}")
    h = list(code.hooks)
    if h and not (0 < h[0] and h[-1] < k - 1):
        out.append("hooks must satisfy 0 < h_1 and h_l < k-1")
    if any(b - a <= 1 for a, b in zip(h, h[1:])):
        out.append("consecutive hooks must differ by more than 1")
    return out


def validate_overbeck_conditions(code: GabidulinCode) -> bool:
    ok = not overbeck_condition_failures(code)
    if isinstance(code, TwistedGabidulinCode):
        code.overbeck_conditions_validated = ok
    return ok


def sample_alpha(n: int, F: GF, rng: random.Random, subfield: int | None = None) -> list[int]:
    """n points of GF(q^subfield) linearly independent over GF(q)."""
    s = subfield or F.m
    if n > s:
        raise InfeasibleParameters(f"cannot pick {n} independent points in GF(q^{s})")
    while True:
        alpha = [F.random_in_subfield(s, rng) for _ in range(n)]
        if F.linearly_independent_over_base(alpha):
            return alpha


def random_gabidulin(n: int, k: int, F: GF, rng: random.Random) -> GabidulinCode:
    return GabidulinCode(F, sample_alpha(n, F, rng), k)


def sample_hooks(k: int, ell: int, rng: random.Random) -> list[int]:
    """ell hooks in 1..k-2 with pairwise gaps > 1, uniformly."""
    slots = k - 2 - (ell - 1)
    if ell and slots < ell:
        raise InfeasibleParameters(f"k={k} cannot host {ell} hooks with gaps > 1 inside (0, k-1)")
    base = sorted(rng.sample(range(1, slots + 1), ell))
    return [c + i for i, c in enumerate(base)]


def chain_field(q: int, s0: int, ell: int) -> GF:
    """GF(q^(2^ell s0)) with the doubling chain s0 | 2 s0 | ... | 2^ell s0."""
    chain = [s0 * 2**i for i in range(ell + 1)]
    return GF(q, chain[-1], chain=chain)


def sample_twisted_code(n: int, k: int, ell: int, F: GF, rng: random.Random) -> TwistedGabidulinCode:
    """A chain-validated twisted code with arbitrary distinct hooks and twists."""
    chain = F.chain
    if len(chain) != ell + 1 or n > chain[0]:
        raise InfeasibleParameters(f"need a chain of ell+1 = {ell + 1} degrees with s_0 >= n, got {chain}")
    if ell > min(k, n - k):
        raise InfeasibleParameters(f"ell={ell} twists do not fit k={k}, n={n}")
    hooks = rng.sample(range(k), ell)
    twists = rng.sample(range(1, n - k + 1), ell)
    alpha = sample_alpha(n, F, rng, chain[0])
    etas = [F.sample_eta_in_layer(i, rng) for i in range(1, ell + 1)]
    code = TwistedGabidulinCode(F, alpha, k, hooks, twists, etas)
    validate_mrd_chain(code)
    return code


def sample_resistant_code(n: int, k: int, ell: int, F: GF, rng: random.Random,
                          verify_profile: bool = True) -> TwistedGabidulinCode:
    """A twisted Gabidulin code that is MRD by the chain conditions and whose
    q-sums grow by ell + 1 per step."""
    twists = resistant_twists(n, k, ell)
    chain = F.chain or (F.m,)
    if len(chain) != ell + 1:
        raise InfeasibleParameters(f"field chain {chain} must have exactly ell+1 = {ell + 1} degrees")
    if n > chain[0]:
        raise InfeasibleParameters(f"n={n} exceeds s_0={chain[0]}")
    if k <= 0 or k >= n:
        raise InfeasibleParameters("need 0 < k < n")
    assert F.m >= 2**ell * n
    hooks = sample_hooks(k, ell, rng)
    alpha = sample_alpha(n, F, rng, chain[0])
    etas = [F.sample_eta_in_layer(i, rng) for i in range(1, ell + 1)]
    code = TwistedGabidulinCode(F, alpha, k, hooks, twists, etas)
    if F.chain:
        report = validate_mrd_chain(code)
        if not report.passed:
            raise InfeasibleParameters("; ".join(report.failures()))
    else:
        code.mrd_chain_validated = True
    if not validate_overbeck_conditions(code):
        raise InfeasibleParameters("; ".join(overbeck_condition_failures(code)))
    if verify_profile:
        from .qsum import predicted_profile, profile
        measured = profile(code.generator(), F).dims
        predicted = predicted_profile("twisted_resistant", n, k, ell)
        if measured != predicted:
            raise InfeasibleParameters(f"q-sum profile {measured} != predicted {predicted}")
    return code
