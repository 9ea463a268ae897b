"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 degenerate attack instance,
3 a factor of n turned up (printed on stderr).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import keyfile
from .attacks import AttackError, Method, RecoveredKey, attack_decrypt_message, cayley_hamilton_attack, linear_algebra_attack
from .bench import run_bench
from .cayley_purser import CpEnvelope, CpPrivateKey, CpPublicKey, EncryptMode, MalformedPayload, cp_keygen, decrypt_message, encrypt_message
from .census import NotPrime, TooLarge, format_table
from .demos import DEMOS
from .matrix import FactorFound
from .ringmath import NotInvertible, default_rng, seeded_rng
from .slavin import (
    SlavinBreak,
    SlavinCiphertext,
    SlavinPrivateKey,
    SlavinPublicKey,
    SymmetricAuthFailure,
    slavin_attack,
    slavin_attack_decrypt,
    slavin_decrypt,
    slavin_encrypt,
    slavin_keygen,
)

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_FACTOR = 0, 1, 2, 3
SAFE_BITS = 1024


class InputError(Exception):
    pass


def _read_bytes(path: str) -> bytes:
    return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _read_text(path: str) -> str:
    return _read_bytes(path).decode("ascii", errors="replace")


def _write_text(path: str, text: str) -> None:
    _write_bytes(path, text.encode("ascii"))


def _load(path: str, *types):
    obj = keyfile.loads(_read_text(path))
    if types and not isinstance(obj, types):
        raise InputError(f"{path}: expected {' or '.join(t.__name__ for t in types)}, got {type(obj).__name__}")
    return obj


def _rng(args):
    return default_rng() if args.seed is None else seeded_rng(args.seed)


def cmd_keygen(args) -> int:
    if args.bits < SAFE_BITS:
        print(f"warning: {args.bits}-bit modulus is for experiments only", file=sys.stderr)
    gen = cp_keygen if args.scheme == "cp" else slavin_keygen
    pk, sk = gen(args.bits, _rng(args))
    _write_text(args.pub, keyfile.dumps(pk))
    _write_text(args.prv, keyfile.dumps(sk))
    return EXIT_OK


def cmd_encrypt(args) -> int:
    msg = _read_bytes(args.infile)
    if args.scheme == "cp":
        pk = _load(args.key, CpPublicKey)
        ct = encrypt_message(pk, msg, EncryptMode(args.mode), _rng(args))
    else:
        pk = _load(args.key, SlavinPublicKey)
        ct = slavin_encrypt(pk, msg, _rng(args))
    _write_text(args.outfile, keyfile.dumps(ct))
    return EXIT_OK


def cmd_decrypt(args) -> int:
    if args.scheme == "cp":
        key = _load(args.key, CpPrivateKey, RecoveredKey)
        ct = _load(args.infile, CpEnvelope)
        if isinstance(key, RecoveredKey):
            msg = attack_decrypt_message(key, ct)
        else:
            msg = decrypt_message(key.C, ct)
    else:
        key = _load(args.key, SlavinPrivateKey, SlavinBreak)
        ct = _load(args.infile, SlavinCiphertext)
        if isinstance(key, SlavinBreak):
            msg = slavin_attack_decrypt(key, ct)
        else:
            msg = slavin_decrypt(key.C, ct)
    _write_bytes(args.outfile, msg)
    return EXIT_OK


def cmd_attack_cp(args) -> int:
    pk = _load(args.pub, CpPublicKey)
    if Method(args.method) is Method.LINEAR_ALGEBRA:
        rk = linear_algebra_attack(pk)
    else:
        rk = cayley_hamilton_attack(pk, fallback=not args.no_fallback)
    sys.stdout.write(keyfile.dumps(rk))
    return EXIT_OK


def cmd_attack_slavin(args) -> int:
    pk = _load(args.pub, SlavinPublicKey)
    brk = slavin_attack(pk)
    sys.stdout.write(keyfile.dumps(brk))
    if args.ct is not None:
        ct = _load(args.ct, SlavinCiphertext)
        msg = slavin_attack_decrypt(brk, ct)
        if args.out is not None:
            _write_bytes(args.out, msg)
    return EXIT_OK


def cmd_census(args) -> int:
    print(format_table(args.q, args.enumerate))
    return EXIT_OK


def cmd_bench(args) -> int:
    rep = run_bench(args.bits, args.iters, _rng(args))
    print(rep.to_text())
    if args.kv:
        print()
        print(rep.to_kv())
    return EXIT_OK


def cmd_demo(args) -> int:
    print(DEMOS[args.example]())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpbreak", description="Cayley-Purser and Slavin schemes and their breaks")
    parser.add_argument("--seed", type=int, default=None, help="deterministic RNG seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--scheme", choices=["cp", "slavin"], default="cp")
    p.add_argument("--bits", type=int, default=1024)
    p.add_argument("--pub", required=True)
    p.add_argument("--prv", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a file under a public key")
    p.add_argument("--scheme", choices=["cp", "slavin"], default="cp")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--out", dest="outfile", default="-")
    p.add_argument("--mode", choices=[m.value for m in EncryptMode], default=EncryptMode.POWER.value)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt with a private or recovered key")
    p.add_argument("--scheme", choices=["cp", "slavin"], default="cp")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--out", dest="outfile", default="-")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("attack-cp", help="recover a working CP key from a public key")
    p.add_argument("pub")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.LINEAR_ALGEBRA.value)
    p.add_argument("--no-fallback", action="store_true", help="fail instead of falling back to the linear attack")
    p.set_defaults(func=cmd_attack_cp)

    p = sub.add_parser("attack-slavin", help="break a Slavin public key, optionally decrypting a ciphertext")
    p.add_argument("pub")
    p.add_argument("ct", nargs="?")
    p.add_argument("-o", "--out", help="write the recovered plaintext here")
    p.set_defaults(func=cmd_attack_slavin)

    p = sub.add_parser("census", help="conjugacy classes of GL(2,q)")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="cross-check by brute force (q <= 13)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bench", help="time CP against textbook RSA")
    p.add_argument("--bits", type=int, default=1024)
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--kv", action="store_true", help="also print a key=value block")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("demo", help="replay a worked toy example")
    p.add_argument("example", type=int, choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FactorFound as exc:
        print(f"factor found: {exc.g} (n = {exc.g} * {exc.n // exc.g})", file=sys.stderr)
        return EXIT_FACTOR
    except NotInvertible as exc:
        if exc.is_factor:
            print(f"factor found: {exc.g} (n = {exc.g} * {exc.n // exc.g})", file=sys.stderr)
            return EXIT_FACTOR
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AttackError as exc:
        print(f"attack degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InputError, keyfile.KeyFileError, MalformedPayload, SymmetricAuthFailure, NotPrime, TooLarge, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
