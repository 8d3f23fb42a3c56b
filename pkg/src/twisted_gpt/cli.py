"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 decoding or
attack failure. Every failure prints one diagnostic line on stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import linalg as la
from .attacks import exponential_attack, overbeck_applicability, overbeck_attack
from .codes import (
    DecodingFailure,
    bruteforce_min_distance,
    bruteforce_rank_decode,
    chain_field,
    gab_decode,
    random_gabidulin,
    sample_resistant_code,
    sample_twisted_code,
)
from .field import GF
from .gpt import GptPublicKey, decrypt, encrypt, keygen
from .params import PAPER_TABLE, SystemParams, feasible_params, render_table
from .qsum import classify_profile, predicted_profile, profile
from . import serialize as ser


class UsageError(Exception):
    pass


class AttackFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _range(text: str) -> range:
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi or lo) + 1)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _matrix_of(obj) -> tuple[GF, la.Matrix]:
    if isinstance(obj, GptPublicKey):
        return obj.field, obj.G_pub
    return obj.field, obj.generator()


def cmd_keygen(a, rng) -> int:
    if a.family == "gab":
        F = GF(a.q, a.m or a.n)
        code = random_gabidulin(a.n, a.k, F, rng)
    else:
        F = chain_field(a.q, a.s0 or a.n, a.ell)
        code = sample_resistant_code(a.n, a.k, a.ell, F, rng)
    s = a.s if a.lam else 0
    pk, sk = keygen(code, a.lam, s, rng)
    _write(a.pub, ser.dump_public(pk))
    _write(a.sec, ser.dump_secret(sk, pk.t))
    return 0


def cmd_encrypt(a, rng) -> int:
    pk = ser.load_public(_read(a.pub))
    F = pk.field
    if a.random_message:
        msg = [F.random(rng) for _ in range(pk.k)]
        _write(a.message, ser.dump_vector(msg, F))
    else:
        msg = ser.load_vector(_read(a.message), F)
    _write(a.out, ser.dump_vector(encrypt(msg, pk, rng), F))
    return 0


def cmd_decrypt(a, rng) -> int:
    sk, t = ser.load_secret(_read(a.sec))
    F = sk.field
    c = ser.load_vector(_read(a.ciphertext), F)
    _write(a.out, ser.dump_vector(decrypt(c, sk, t, guard=a.guard_value), F))
    return 0


def cmd_qsum_profile(a, rng) -> int:
    F, G = _matrix_of(ser.load_any(_read(a.file)))
    p = profile(G, F)
    print(p.report(str(classify_profile(p))))
    return 0


def cmd_distinguish(a, rng) -> int:
    F, G = _matrix_of(ser.load_any(_read(a.file)))
    p = profile(G, F)
    c = classify_profile(p)
    app = overbeck_applicability(G, F)
    line = f"class={c} critical_i={app.critical_i} dualdim={app.dual_dim} moore={str(app.moore_structured).lower()}"
    if c.diagnostic:
        line += f" note={c.diagnostic.replace(' ', '_')}"
    print(line)
    return 0


def cmd_attack(a, rng) -> int:
    pk = ser.load_public(_read(a.file))
    if a.kind == "overbeck":
        report = overbeck_attack(pk, rng)
    else:
        report = exponential_attack(pk, a.budget, rng)
    print(report.line())
    if not report.success:
        raise AttackFailed(f"{report.attack} failed: dualdim={report.dual_dimension} ({report.detail})")
    if report.recovered_points is not None:
        print("alpha=" + ",".join(pk.field.to_str(x) for x in report.recovered_points))
    return 0


def cmd_params(a, rng) -> int:
    if a.action == "table":
        rows = list(PAPER_TABLE) if a.paper else []
        for spec in a.row or []:
            kv = dict(item.split("=", 1) for item in spec.split(","))
            system = kv.pop("system")
            rows.append(SystemParams(system, **{k: int(v) for k, v in kv.items()}))
        print(render_table(rows))
        return 0
    found = feasible_params(_range(a.n), _range(a.k), _range(a.ell), a.max_key, a.min_bits,
                            q=a.q, lam=a.lam, s=a.s, s0_extra=a.s0_extra)
    print(render_table(found))
    return 0


def selftest(guard: int, rng: random.Random) -> list[tuple[str, bool]]:
    """Small brute-force oracle checks."""
    out = []
    F4 = GF(2, 4)
    gab = random_gabidulin(4, 2, F4, rng)
    out.append(("gabidulin_mrd", bruteforce_min_distance(gab, guard) == 3))
    tw = sample_twisted_code(4, 2, 1, chain_field(2, 4, 1), rng)
    out.append(("twisted_mrd", bruteforce_min_distance(tw, guard) == 3))
    ok = True
    for _ in range(20):
        y = [F4.random(rng) for _ in range(4)]
        try:
            fast = gab_decode(gab, y).codeword
        except DecodingFailure:
            fast = None
        try:
            slow = bruteforce_rank_decode(gab, y, gab.radius, guard).codeword
        except DecodingFailure:
            slow = None
        ok &= fast == slow
    out.append(("decoder_vs_bruteforce", ok))
    res = sample_resistant_code(8, 3, 1, chain_field(2, 8, 1), rng, verify_profile=False)
    out.append(("qsum_theorem", profile(res.generator(), res.field).dims == predicted_profile("twisted_resistant", 8, 3, 1)))
    return out


def cmd_selftest(a, rng) -> int:
    results = selftest(a.guard_value, rng)
    for name, ok in results:
        print(f"check={name} ok={str(ok).lower()}")
    if not all(ok for _, ok in results):
        raise ValueError("selftest failed: " + ",".join(n for n, ok in results if not ok))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twisted-gpt", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--guard", type=int, default=20, help="log2 of the enumeration guard (default 20)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kg = sub.add_parser("keygen", help="generate a GPT key pair")
    kg.add_argument("--family", choices=("gab", "twisted"), default="gab")
    kg.add_argument("--q", type=int, default=2)
    kg.add_argument("--n", type=int, required=True)
    kg.add_argument("--k", type=int, required=True)
    kg.add_argument("--m", type=int, help="extension degree for gab (default n)")
    kg.add_argument("--ell", type=int, default=1, help="number of twists for twisted")
    kg.add_argument("--s0", type=int, help="base of the doubling chain for twisted (default n)")
    kg.add_argument("--lam", type=int, default=0)
    kg.add_argument("--s", type=int, default=1)
    kg.add_argument("--pub", required=True)
    kg.add_argument("--sec", required=True)
    kg.set_defaults(func=cmd_keygen)

    en = sub.add_parser("encrypt", help="encrypt a message with a public key")
    en.add_argument("--pub", required=True)
    en.add_argument("--message", required=True)
    en.add_argument("--random-message", action="store_true", help="write a random message to --message first")
    en.add_argument("--out")
    en.set_defaults(func=cmd_encrypt)

    de = sub.add_parser("decrypt", help="decrypt a ciphertext with a secret key")
    de.add_argument("--sec", required=True)
    de.add_argument("--ciphertext", required=True)
    de.add_argument("--out")
    de.set_defaults(func=cmd_decrypt)

    qp = sub.add_parser("qsum-profile", help="q-sum dimension profile of a code or public key")
    qp.add_argument("file")
    qp.set_defaults(func=cmd_qsum_profile)

    di = sub.add_parser("distinguish", help="classify a code or public key")
    di.add_argument("file")
    di.set_defaults(func=cmd_distinguish)

    at = sub.add_parser("attack", help="run a structural attack on a public key")
    at.add_argument("kind", choices=("overbeck", "exhaustive"))
    at.add_argument("file")
    at.add_argument("--budget", type=int)
    at.set_defaults(func=cmd_attack)

    pa = sub.add_parser("params", help="key-size table and parameter search")
    pa.add_argument("action", choices=("table", "search"))
    pa.add_argument("--paper", action="store_true", help="use the reference comparison rows")
    pa.add_argument("--row", action="append", help="system=NAME,k=..,n=.. (repeatable)")
    pa.add_argument("--n", default="8:32")
    pa.add_argument("--k", default="2:30")
    pa.add_argument("--ell", default="1:3")
    pa.add_argument("--max-key", type=float, default=10_000.0, help="bytes")
    pa.add_argument("--min-bits", type=float, default=80.0)
    pa.add_argument("--q", type=int, default=2)
    pa.add_argument("--lam", type=int, default=0)
    pa.add_argument("--s", type=int, default=1)
    pa.add_argument("--s0-extra", type=int, default=0)
    pa.set_defaults(func=cmd_params)

    st = sub.add_parser("selftest", help="run the brute-force oracle checks")
    st.set_defaults(func=cmd_selftest)
    return p


def cli_main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.guard < 0:
        print("usage error: --guard must be non-negative", file=sys.stderr)
        return 1
    args.guard_value = 1 << args.guard
    rng = random.Random(args.seed)
    try:
        return args.func(args, rng)
    except (DecodingFailure, AttackFailed) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError, OSError, StopIteration, KeyError, TypeError) as exc:
        msg = str(exc) or type(exc).__name__
        print(f"validation: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
