"""Key sizes, rates and parameter search for code-based systems.

Public keys are counted in systematic form and 1 KB = 1000 bytes; with those
conventions every key-size cell of the comparison table is reproduced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, asdict
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction
from typing import Iterable

from .attacks import estimate_security, work_factor_exponential

SYSTEMS = ("mceliece", "loidreau", "twisted_gpt", "qc_mdpc")
REQUIRED = {
    "mceliece": ("q", "k", "n"),
    "loidreau": ("q", "k", "n", "m"),
    "twisted_gpt": ("q", "k", "n", "m", "ell", "lam"),
    "qc_mdpc": ("q", "k", "n"),
}


class MissingField(ValueError):
    pass


@dataclass
class SystemParams:
    system: str
    q: int = 2
    k: int | None = None
    n: int | None = None
    m: int | None = None
    ell: int | None = None
    lam: int | None = None
    s: int | None = None
    t: int | None = None
    tau: int | None = None
    t_loi: int | None = None
    lam_loi: int | None = None

    def __post_init__(self):
        if self.system not in SYSTEMS:
            raise ValueError(f"unknown system {self.system!r}")
        missing = [f for f in REQUIRED[self.system] if getattr(self, f) is None]
        if missing:
            raise MissingField(f"{self.system} needs {', '.join(missing)}")

    def as_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def round2(x: Fraction) -> Decimal:
    return (Decimal(x.numerator) / Decimal(x.denominator)).quantize(Decimal("0.01"), ROUND_HALF_UP)


@dataclass
class KeySizeReport:
    key_bits: int
    key_bytes: Fraction
    rate: Fraction

    @property
    def key_kb(self) -> Decimal:
        return round2(self.key_bytes / 1000)

    @property
    def rate_2dp(self) -> Decimal:
        return round2(self.rate)


def key_size(p: SystemParams) -> KeySizeReport:
    if p.system == "twisted_gpt":
        bits = p.k * (p.n + p.lam - p.k) * p.m
        rate = Fraction(p.k, p.n + p.lam)
    elif p.system == "loidreau":
        bits = p.k * (p.n - p.k) * p.m
        rate = Fraction(p.k, p.n)
    elif p.system == "mceliece":
        bits = p.k * (p.n - p.k)
        rate = Fraction(p.k, p.n)
    else:
        bits = p.n - p.k
        rate = Fraction(p.k, p.n)
    return KeySizeReport(bits, Fraction(bits, 8), rate)


PAPER_TABLE = [
    SystemParams("mceliece", 2, 1436, 1876, m=11, tau=41),
    SystemParams("loidreau", 2, 32, 50, m=50, t_loi=3, lam_loi=3),
    SystemParams("twisted_gpt", 2, 18, 26, m=104, ell=2, lam=6, s=1, t=4),
    SystemParams("qc_mdpc", 2, 4801, 9602),
    SystemParams("mceliece", 2, 2482, 3262, m=12, tau=66),
    SystemParams("loidreau", 2, 40, 64, m=96, t_loi=4, lam_loi=3),
    SystemParams("twisted_gpt", 2, 21, 33, m=132, ell=2, lam=8, s=1, t=6),
    SystemParams("qc_mdpc", 2, 9857, 19714),
    SystemParams("mceliece", 2, 5318, 7008, m=13, tau=133),
    SystemParams("loidreau", 2, 80, 120, m=128, t_loi=4, lam_loi=5),
    SystemParams("twisted_gpt", 2, 32, 48, m=192, ell=2, lam=12, s=2, t=8),
    SystemParams("qc_mdpc", 2, 32771, 65542),
]

NAMES = {"mceliece": "McEliece", "loidreau": "Loidreau", "twisted_gpt": "Twisted GPT", "qc_mdpc": "QC-MDPC"}
COLUMNS = ("q", "k", "n", "m", "ell", "lam", "s", "t", "tau", "t_loi", "lam_loi")
HEADERS = ("Method", "q", "k", "n", "m", "l", "lambda", "s", "t", "tau", "t_Loi", "lambda'",
           "Security", "Rate", "Key size")


def security_cell(p: SystemParams) -> str:
    """Only the structural exponential-attack term is computable here."""
    if p.system != "twisted_gpt":
        return "external"
    report = estimate_security({"q": p.q, "m": p.m, "ell": p.ell})
    return f">={report.entries['exponential']:.2f} (struct.)"


def render_table(rows: Iterable[SystemParams]) -> str:
    body = []
    for p in rows:
        ks = key_size(p)
        cells = [NAMES[p.system]] + ["" if getattr(p, c) is None else str(getattr(p, c)) for c in COLUMNS]
        cells += [security_cell(p), f"{ks.rate_2dp}", f"{ks.key_kb} KB"]
        body.append(cells)
    widths = [max(len(r[i]) for r in [HEADERS, *body]) for i in range(len(HEADERS))]

    def fmt(r):
        return " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()

    lines = [fmt(HEADERS), "-+-".join("-" * w for w in widths)]
    lines += [fmt(r) for r in body]
    return "\n".join(lines)


def hooks_fit(k: int, ell: int) -> bool:
    """ell hooks fit strictly inside (0, k-1) with pairwise gaps > 1."""
    return ell == 0 or k - 2 - (ell - 1) >= ell


def feasible_params(n_range: Iterable[int], k_range: Iterable[int], ell_range: Iterable[int],
                    target_keysize: float, target_expwf_bits: float, q: int = 2,
                    lam: int = 0, s: int = 1, s0_extra: int = 0) -> list[SystemParams]:
    """Resistant twisted-GPT parameter sets meeting a key-size cap and a
    structural work-factor floor, smallest key first.

    ``target_keysize`` is in bytes. The doubling chain m = 2^l s_0 is used with
    n <= s_0 <= n + s0_extra.
    """
    out = []
    for n in n_range:
        for k in k_range:
            if not 0 < k < n:
                continue
            for ell in ell_range:
                if ell < 0 or (n - k - ell) % (ell + 1) or (n - k - ell) // (ell + 1) < 1:
                    continue
                if not hooks_fit(k, ell):
                    continue
                for s0 in range(n, n + s0_extra + 1):
                    m = 2**ell * s0
                    if work_factor_exponential(q, m, ell).log2 < target_expwf_bits:
                        continue
                    p = SystemParams("twisted_gpt", q, k, n, m=m, ell=ell, lam=lam,
                                     s=s if lam else 0, t=(n - k) // 2)
                    if key_size(p).key_bytes <= target_keysize:
                        out.append(p)
    out.sort(key=lambda p: (key_size(p).key_bytes, p.n, p.k, p.ell))
    return out


def check_constructible(p: SystemParams, rng: random.Random | None = None) -> bool:
    """Build an actual resistant code for p (feasible only at small m)."""
    from .codes import chain_field, sample_resistant_code
    F = chain_field(p.q, p.m // 2**p.ell, p.ell)
    sample_resistant_code(p.n, p.k, p.ell, F, rng or random.Random(0), verify_profile=False)
    return True
