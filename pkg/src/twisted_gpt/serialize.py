"""Line-oriented text formats: FIELD, MATRIX, CODE, GPTPUB and GPTSEC blocks."""

from __future__ import annotations

from typing import Iterator

from .codes import GabidulinCode, TwistedGabidulinCode
from .field import GF, parse_descriptor
from .gpt import GptPublicKey, GptSecretKey


class FormatError(ValueError):
    pass


def _kv(line: str, head: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != head:
        raise FormatError(f"expected {head} line, got {line!r}")
    try:
        return dict(p.split("=", 1) for p in parts[1:])
    except ValueError as exc:
        raise FormatError(f"malformed {head} line {line!r}") from exc


def _ints(s: str) -> list[int]:
    return [int(x) for x in s.split(",")] if s else []


def write_matrix(A, F: GF, kind: str = "ext", name: str | None = None) -> list[str]:
    rows = len(A)
    cols = len(A[0]) if A else 0
    header = f"MATRIX rows={rows} cols={cols} field={kind}"
    if name:
        header += f" name={name}"
    fmt = F.to_str if kind == "ext" else str
    return [header] + [" ".join(fmt(a) for a in row) for row in A if cols]


def read_matrix(lines: Iterator[str], F: GF, header: str | None = None):
    header = header if header is not None else next(lines)
    kv = _kv(header, "MATRIX")
    rows, cols, kind = int(kv["rows"]), int(kv["cols"]), kv["field"]
    if cols == 0:
        return [[] for _ in range(rows)], kind
    parse = F.from_str if kind == "ext" else (lambda s: int(s) % F.q)
    A = []
    for _ in range(rows):
        tokens = next(lines).split()
        if len(tokens) != cols:
            raise FormatError(f"row has {len(tokens)} entries, expected {cols}")
        A.append([parse(t) for t in tokens])
    return A, kind


def code_line(code: GabidulinCode) -> str:
    F = code.field
    return (f"CODE kind={code.kind} n={code.n} k={code.k} ell={code.ell} "
            f"alpha={','.join(F.to_str(a) for a in code.alpha)} "
            f"t={','.join(map(str, code.twists))} h={','.join(map(str, code.hooks))} "
            f"eta={','.join(F.to_str(e) for e in code.etas)}")


def parse_code(line: str, F: GF) -> GabidulinCode:
    kv = _kv(line, "CODE")
    alpha = [F.from_str(a) for a in kv["alpha"].split(",")]
    k = int(kv["k"])
    if len(alpha) != int(kv["n"]):
        raise FormatError("alpha length does not match n")
    if kv["kind"] == "gab":
        return GabidulinCode(F, alpha, k)
    etas = [F.from_str(e) for e in kv.get("eta", "").split(",") if e]
    code = TwistedGabidulinCode(F, alpha, k, _ints(kv.get("h", "")), _ints(kv.get("t", "")), etas)
    if len(code.hooks) != int(kv["ell"]):
        raise FormatError("ell does not match the twist data")
    return code


def dump_code(code: GabidulinCode) -> str:
    return "\n".join([code.field.descriptor(), code_line(code)]) + "\n"


def dump_public(pk: GptPublicKey) -> str:
    F = pk.field
    lines = ["GPTPUB", F.descriptor(), f"PARAMS n={pk.n} lambda={pk.lam} k={pk.k} t={pk.t}"]
    lines += write_matrix(pk.G_pub, F, "ext", "Gpub")
    lines.append("END")
    return "\n".join(lines) + "\n"


def dump_secret(sk: GptSecretKey, t: int) -> str:
    F, code = sk.field, sk.code
    lam = len(sk.P) - code.n
    lines = ["GPTSEC", F.descriptor(),
             f"PARAMS n={code.n} lambda={lam} k={code.k} t={t} s={sk.s}", code_line(code)]
    lines += write_matrix(sk.S, F, "ext", "S")
    lines += write_matrix(sk.X, F, "ext", "X")
    lines += write_matrix(sk.P, F, "base", "P")
    lines.append("END")
    return "\n".join(lines) + "\n"


def _lines(text: str) -> Iterator[str]:
    return iter([ln for ln in text.splitlines() if ln.strip()])


def load_public(text: str) -> GptPublicKey:
    it = _lines(text)
    if next(it).strip() != "GPTPUB":
        raise FormatError("not a GPTPUB block")
    F = parse_descriptor(next(it))
    kv = _kv(next(it), "PARAMS")
    G, _ = read_matrix(it, F)
    return GptPublicKey(F, G, int(kv["n"]), int(kv["lambda"]), int(kv["k"]), int(kv["t"]))


def load_secret(text: str) -> tuple[GptSecretKey, int]:
    it = _lines(text)
    if next(it).strip() != "GPTSEC":
        raise FormatError("not a GPTSEC block")
    F = parse_descriptor(next(it))
    kv = _kv(next(it), "PARAMS")
    code = parse_code(next(it), F)
    S, _ = read_matrix(it, F)
    X, _ = read_matrix(it, F)
    P, _ = read_matrix(it, F)
    return GptSecretKey(S, X, P, code, int(kv["s"])), int(kv["t"])


def load_any(text: str):
    """Public key, or (field, code) from a FIELD + CODE file."""
    it = _lines(text)
    first = next(it).strip()
    if first == "GPTPUB":
        return load_public(text)
    if first == "GPTSEC":
        return load_secret(text)[0].code
    F = parse_descriptor(first)
    return parse_code(next(it), F)


def dump_vector(v, F: GF) -> str:
    return "\n".join(write_matrix([list(v)], F, "ext")) + "\n"


def load_vector(text: str, F: GF) -> list[int]:
    A, _ = read_matrix(_lines(text), F)
    if len(A) != 1:
        raise FormatError("expected a single-row MATRIX")
    return A[0]
