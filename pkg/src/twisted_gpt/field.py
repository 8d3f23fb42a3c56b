"""Arithmetic in GF(q) and GF(q^m), q prime.

Elements are plain ints. For q = 2 the int is the bit vector of polynomial
coefficients (bit i multiplies x^i); for odd q it is sum(c_i * q^i). In both
cases the base field GF(q) embeds as the ints 0..q-1.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Sequence

TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class NonDivisorDegree(FieldError):
    pass


class NoChainDeclared(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), lists low-degree first -----------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a polynomial over GF(p) given low-degree first."""
    f = _ptrim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if p == 2:
        return _binary_irreducible(sum(c << i for i, c in enumerate(f)), m)
    x = [0, 1]

    def x_qpow(j):
        r = x
        for _ in range(j):
            r = _ppowmod(r, p, f, p)
        return r

    if _ptrim(_psub(x_qpow(m), x, p)) != []:
        return False
    for r in prime_factors(m):
        g = _pgcd(f, _psub(x_qpow(m // r), x, p), p)
        if len(g) > 1:
            return False
    return True


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _ptrim(out)


def _bmulmod(a: int, b: int, f: int, m: int) -> int:
    return _clmul_mod(a, b, f, m)


def _bgcd(a: int, b: int) -> int:
    while b:
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return a


def _binary_irreducible(f: int, m: int) -> bool:
    def x_2pow(j):
        r = 2
        for _ in range(j):
            r = _bmulmod(r, r, f, m)
        return r

    if x_2pow(m) != 2:
        return False
    for r in prime_factors(m):
        if _bgcd(f, x_2pow(m // r) ^ 2) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(q: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m, ordered by its integer encoding."""
    for code in range(q**m):
        coeffs = [(code // q**i) % q for i in range(m)] + [1]
        if coeffs[0] == 0 and m > 1:
            continue
        if is_irreducible(coeffs, q):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({q})")


# --- the field --------------------------------------------------------------

class GF:
    """The field GF(q^m) in a polynomial basis, with an optional subfield chain.

    ``chain`` lists s_0 | s_1 | ... | s_l = m; an empty tuple means no chain.
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int] | None = None,
                 chain: Sequence[int] = ()):
        if not is_prime(q):
            raise FieldError(f"q={q} must be prime")
        if m < 1:
            raise FieldError("m must be positive")
        if modulus is None:
            modulus = default_modulus(q, m)
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if not _irreducible_cached(modulus, q):
            raise FieldError("modulus is not irreducible")
        chain = tuple(int(s) for s in chain)
        if chain:
            if chain[-1] != m or chain[0] < 1:
                raise FieldError("chain must end at m and start at >= 1")
            for a, b in zip(chain, chain[1:]):
                if a >= b or b % a:
                    raise FieldError("chain degrees must strictly increase by divisibility")
        self.q = q
        self.m = m
        self.modulus = modulus
        self.chain = chain
        self.order = q**m
        self._binary = q == 2
        self._modint = sum(c * q**i for i, c in enumerate(modulus))
        self._frob_cache: dict[int, list[int]] = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.order <= TABLE_LIMIT and self.order > 2:
            self._exp, self._log = _tables(q, m, modulus)

    # identity
    def _key(self):
        return (self.q, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        chain = f", chain={self.chain}" if self.chain else ""
        return f"GF({self.q}^{self.m}{chain})"

    def with_chain(self, chain: Sequence[int]) -> "GF":
        return GF(self.q, self.m, self.modulus, chain)

    @property
    def base(self) -> "GF":
        return prime_field(self.q)

    # coordinates
    def coeffs(self, a: int) -> list[int]:
        if self._binary:
            return [(a >> i) & 1 for i in range(self.m)]
        q = self.q
        out = []
        for _ in range(self.m):
            a, r = divmod(a, q)
            out.append(r)
        return out

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise FieldMismatch("too many coordinates")
        if self._binary:
            return sum((c & 1) << i for i, c in enumerate(coeffs))
        return sum((c % self.q) * self.q**i for i, c in enumerate(coeffs))

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldMismatch(f"{a} is not an element of {self!r}")
        return a

    def is_base(self, a: int) -> bool:
        return 0 <= a < self.q

    def elements(self):
        return range(self.order)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.order)

    # arithmetic
    def add(self, a: int, b: int) -> int:
        if self._binary:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.q
        return self.from_coeffs(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def sub(self, a: int, b: int) -> int:
        if self._binary:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.q
        return self.from_coeffs(x - y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self._binary:
            return a
        if self.m == 1:
            return -a % self.q
        return self.from_coeffs(-x for x in self.coeffs(a))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        if self.m == 1:
            return a * b % self.q
        if self._binary:
            return _clmul_mod(a, b, self._modint, self.m)
        prod = _pmulmod(self.coeffs(a), self.coeffs(b), list(self.modulus), self.q)
        return self.from_coeffs(prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def scale(self, c: int, a: int) -> int:
        """Multiply by a base-field scalar c."""
        return self.mul(c % self.q, a)

    # Frobenius and subfields
    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); negative i applies the inverse automorphism."""
        i %= self.m
        if i == 0 or a < self.q:
            return a
        if self._exp is not None:
            return self._exp[(self._log[a] * self.q**i) % (self.order - 1)]
        table = self._frob_table(i)
        if self._binary:
            r = 0
            j = 0
            while a:
                if a & 1:
                    r ^= table[j]
                a >>= 1
                j += 1
            return r
        r = 0
        for j, c in enumerate(self.coeffs(a)):
            if c:
                r = self.add(r, self.scale(c, table[j]))
        return r

    def _frob_table(self, i: int) -> list[int]:
        table = self._frob_cache.get(i)
        if table is None:
            e = self.q**i
            table = [self.pow(self.from_coeffs([0] * j + [1]), e) for j in range(self.m)]
            self._frob_cache[i] = table
        return table

    def in_subfield(self, a: int, s: int) -> bool:
        if s < 1 or self.m % s:
            raise NonDivisorDegree(f"{s} does not divide {self.m}")
        return self.frobenius(a, s) == a

    def trace_to(self, a: int, s: int) -> int:
        """Relative trace onto GF(q^s); surjective and uniform on fibres."""
        if s < 1 or self.m % s:
            raise NonDivisorDegree(f"{s} does not divide {self.m}")
        r, x = 0, a
        for _ in range(self.m // s):
            r = self.add(r, x)
            x = self.frobenius(x, s)
        return r

    def random_in_subfield(self, s: int, rng: random.Random) -> int:
        return self.trace_to(self.random(rng), s)

    def sample_eta_in_layer(self, i: int, rng: random.Random) -> int:
        """Uniform element of GF(q^{s_i}) outside GF(q^{s_{i-1}})."""
        if not self.chain:
            raise NoChainDeclared("field has no subfield chain")
        if not 1 <= i < len(self.chain):
            raise FieldError(f"layer {i} outside chain of length {len(self.chain)}")
        top, low = self.chain[i], self.chain[i - 1]
        while True:
            eta = self.random_in_subfield(top, rng)
            if not self.in_subfield(eta, low):
                return eta

    # linear algebra over the base field
    def rank_over_base(self, elements: Sequence[int]) -> int:
        if self._binary:
            return _xor_rank(elements)
        from .linalg import rank
        rows = [self.coeffs(a) for a in elements]
        return rank(rows, prime_field(self.q)) if rows else 0

    def linearly_independent_over_base(self, v: Sequence[int]) -> bool:
        if len(v) > self.m:
            return False
        return self.rank_over_base(v) == len(v)

    def is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        n = self.order - 1
        return all(self.pow(a, n // r) != 1 for r in prime_factors(n))

    # text form
    def to_str(self, a: int) -> str:
        return "".join(str(c) for c in self.coeffs(a))

    def from_str(self, s: str) -> int:
        if len(s) != self.m:
            raise FieldMismatch(f"element string {s!r} must have length {self.m}")
        return self.from_coeffs(int(ch) for ch in s)

    def descriptor(self) -> str:
        line = f"FIELD q={self.q} m={self.m} mod={','.join(map(str, self.modulus))}"
        if self.chain:
            line += f" chain={','.join(map(str, self.chain))}"
        return line


def _xor_rank(elements: Iterable[int]) -> int:
    basis: list[int] = []
    for v in elements:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _clmul_mod(a: int, b: int, mod: int, m: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    top = r.bit_length() - 1
    while top >= m:
        if (r >> top) & 1:
            r ^= mod << (top - m)
        top -= 1
    return r


@lru_cache(maxsize=None)
def _irreducible_cached(modulus: tuple[int, ...], q: int) -> bool:
    return is_irreducible(modulus, q)


@lru_cache(maxsize=32)
def _tables(q: int, m: int, modulus: tuple[int, ...]):
    order = q**m
    f = list(modulus)
    modint = sum(c * q**i for i, c in enumerate(modulus))

    def to_list(a):
        out = []
        for _ in range(m):
            a, r = divmod(a, q)
            out.append(r)
        return out

    def slow_mul(a, b):
        if q == 2:
            return _clmul_mod(a, b, modint, m)
        prod = _pmulmod(to_list(a), to_list(b), f, q)
        return sum(c * q**i for i, c in enumerate(prod))

    factors = prime_factors(order - 1)

    def slow_pow(a, e):
        r = 1
        while e:
            if e & 1:
                r = slow_mul(r, a)
            a = slow_mul(a, a)
            e >>= 1
        return r

    gen = next(g for g in range(2, order)
               if all(slow_pow(g, (order - 1) // r) != 1 for r in factors))
    exp = [0] * (order - 1)
    log = [0] * order
    x = 1
    for i in range(order - 1):
        exp[i] = x
        log[x] = i
        x = slow_mul(x, gen)
    return exp, log


@lru_cache(maxsize=None)
def prime_field(q: int) -> GF:
    return GF(q, 1, (0, 1))


def parse_descriptor(line: str) -> GF:
    parts = line.split()
    if not parts or parts[0] != "FIELD":
        raise FieldError(f"not a FIELD line: {line!r}")
    kv = dict(p.split("=", 1) for p in parts[1:])
    q, m = int(kv["q"]), int(kv["m"])
    modulus = [int(c) for c in kv["mod"].split(",")]
    chain = [int(c) for c in kv["chain"].split(",")] if kv.get("chain") else []
    return GF(q, m, modulus, chain)
