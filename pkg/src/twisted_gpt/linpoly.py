"""Linearized polynomials sum f_i x^[i] over GF(q^m), with composition as product."""

from __future__ import annotations

from typing import Sequence

from .field import GF, FieldMismatch

NEG_INFINITY = float("-inf")


class DependentBasis(ValueError):
    pass


class LinearizedPolynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Sequence[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, field: GF, i: int, c: int = 1) -> "LinearizedPolynomial":
        return cls(field, [0] * i + [c])

    @classmethod
    def x(cls, field: GF) -> "LinearizedPolynomial":
        return cls.monomial(field, 0)

    @property
    def q_degree(self):
        """Largest i with f_i != 0, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "LinearizedPolynomial"):
        if self.field != other.field:
            raise FieldMismatch("linearized polynomials over different fields")

    def __eq__(self, other):
        return (isinstance(other, LinearizedPolynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "LinearizedPolynomial(0)"
        terms = [f"{c}*x^[{i}]" for i, c in enumerate(self.coeffs) if c]
        return "LinearizedPolynomial(" + " + ".join(terms) + ")"

    def __add__(self, other: "LinearizedPolynomial") -> "LinearizedPolynomial":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPolynomial(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "LinearizedPolynomial":
        return LinearizedPolynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "LinearizedPolynomial") -> "LinearizedPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "LinearizedPolynomial":
        """Left scalar multiple c*f (equal to (c x) o f)."""
        return LinearizedPolynomial(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def compose(self, other: "LinearizedPolynomial") -> "LinearizedPolynomial":
        """self o other; h_k = sum_{i+j=k} f_i * g_j^[i]."""
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return LinearizedPolynomial(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if not fi:
                continue
            for j, gj in enumerate(other.coeffs):
                if gj:
                    out[i + j] = F.add(out[i + j], F.mul(fi, F.frobenius(gj, i)))
        return LinearizedPolynomial(F, out)

    __matmul__ = compose

    def __call__(self, a: int) -> int:
        F = self.field
        r = 0
        power = a
        for c in self.coeffs:
            if c and power:
                r = F.add(r, F.mul(c, power))
            power = F.frobenius(power, 1)
        return r

    def left_divide(self, divisor: "LinearizedPolynomial"):
        """Return (quotient, remainder) with self = divisor o quotient + remainder.

        The remainder has q-degree below that of the divisor.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        d = len(divisor.coeffs) - 1
        lead_inv = F.inv(divisor.coeffs[-1])
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if not c:
                continue
            # divisor o (g x^[top-d]) has leading coefficient lead * g^[d]
            g = F.frobenius(F.mul(c, lead_inv), -d)
            quot[top - d] = g
            for i, vi in enumerate(divisor.coeffs):
                if vi:
                    rem[top - d + i] = F.sub(rem[top - d + i], F.mul(vi, F.frobenius(g, i)))
        return LinearizedPolynomial(F, quot), LinearizedPolynomial(F, rem[:d])


def annihilator(basis: Sequence[int], field: GF) -> LinearizedPolynomial:
    """Monic minimal subspace polynomial of span_GF(q)(basis)."""
    F = field
    poly = LinearizedPolynomial.x(F)
    x1 = LinearizedPolynomial.monomial(F, 1)
    for beta in basis:
        v = poly(beta)
        if v == 0:
            raise DependentBasis("basis elements are linearly dependent over the base field")
        step = x1 - LinearizedPolynomial(F, [F.pow(v, F.q - 1)])
        poly = step.compose(poly)
    return poly


def moore_matrix(v: Sequence[int], rows: int, field: GF) -> list[list[int]]:
    """Rows v^[0], ..., v^[rows-1]."""
    out = []
    row = list(v)
    for _ in range(rows):
        out.append(row)
        row = [field.frobenius(a, 1) for a in row]
    return out
