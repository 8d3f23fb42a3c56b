"""The q-sum operator Lambda_i and the dimension-profile distinguisher."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg as la
from .field import GF


def qsum_matrix(A: la.Matrix, i: int, F: GF) -> la.Matrix:
    """Vertical stack A, A^[1], ..., A^[i]."""
    if i < 0:
        raise ValueError("i must be non-negative")
    out = [list(r) for r in A]
    block = A
    for _ in range(i):
        block = la.frobenius_matrix(block, 1, F)
        out.extend(list(r) for r in block)
    return out


def qsum_dimension(G: la.Matrix, i: int, F: GF) -> int:
    return la.rank(qsum_matrix(G, i, F), F)


@dataclass
class QSumProfile:
    dims: list[int]
    n: int
    k: int
    increments: list[int] = dc_field(default_factory=list)

    def __post_init__(self):
        self.increments = [b - a for a, b in zip(self.dims, self.dims[1:])]

    @property
    def saturated(self) -> bool:
        return bool(self.dims) and self.dims[-1] == self.n

    def dual_dims(self) -> list[int]:
        return [self.n - d for d in self.dims]

    def report(self, label: str | None = None) -> str:
        lines = []
        prev = 0
        for i, d in enumerate(self.dims):
            lines.append(f"i={i} dim={d} inc={d - prev}")
            prev = d
        if label is not None:
            lines.append(f"class={label}")
        return "\n".join(lines)


def profile(G: la.Matrix, F: GF, max_i: int | None = None) -> QSumProfile:
    """dim Lambda_i for i = 0, 1, ... until the full space or i = n.

    Stops early if a step adds nothing: the q-sums are then stationary.
    """
    n = len(G[0])
    basis = la.EchelonBasis(F, n)
    for row in G:
        basis.add(row)
    k = len(basis)
    dims = [k]
    limit = n if max_i is None else max_i
    block = G
    i = 0
    while dims[-1] < n and i < limit:
        i += 1
        block = la.frobenius_matrix(block, 1, F)
        for row in block:
            basis.add(row)
            if len(basis) == n:
                break
        dims.append(len(basis))
        if dims[-1] == dims[-2]:
            break
    return QSumProfile(dims, n, k)


def predicted_profile(family: str, n: int, k: int, ell: int = 0) -> list[int]:
    """Closed-form dimension sequence, up to and including saturation."""
    dims = [k]
    i = 0
    while dims[-1] < n:
        i += 1
        if family == "gabidulin":
            d = min(n, k + i)
        elif family == "twisted_resistant":
            d = min(k - 1 + (i + 1) * (ell + 1), n)
        elif family == "random":
            d = min(n, (i + 1) * k)
        else:
            raise ValueError(f"unknown family {family!r}")
        dims.append(d)
    return dims


@dataclass
class Classification:
    label: str
    ell_estimate: int | None = None
    diagnostic: str = ""

    def __str__(self):
        if self.label == "twisted_like":
            return f"twisted_like({self.ell_estimate})"
        return self.label


def classify(G: la.Matrix, F: GF) -> Classification:
    return classify_profile(profile(G, F))


def classify_profile(p: QSumProfile) -> Classification:
    """Label a code by the stable q-sum increment before saturation.

    The first increment is skipped for the twisted test since it absorbs the
    hook repair; a final increment smaller than its predecessor is clipped at
    n and skipped as well. When a single increment g is left, the first step
    must also match the twisted signature 2g - 1.
    """
    k, incs = p.k, p.increments
    if not incs:
        return Classification("random_like", diagnostic="no q-sum growth")
    if not p.saturated:
        return Classification("random_like", diagnostic=f"q-sums stall at dimension {p.dims[-1]}")
    if all(g == 1 for g in incs):
        return Classification("gabidulin_like")
    body = incs[1:]
    if len(body) >= 2 and body[-1] < body[-2]:
        body = body[:-1]
    if not body:
        if incs[0] >= k:
            return Classification("random_like")
        return Classification("random_like", diagnostic=f"too few increments to classify {incs}")
    g = body[0]
    if any(x != g for x in body):
        return Classification("random_like", diagnostic=f"non-constant increments {incs}")
    if g == 1:
        return Classification("gabidulin_like", diagnostic=f"leading increment {incs[0]}")
    if g >= k:
        return Classification("random_like")
    if len(body) == 1 and incs[0] != 2 * g - 1:
        return Classification("random_like", diagnostic=f"ambiguous increments {incs}")
    return Classification("twisted_like", g - 1)
