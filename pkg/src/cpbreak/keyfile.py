"""Line-oriented text formats for keys, ciphertexts and recovered keys.

Line 1 is a magic string, line 2 the decimal modulus, then one item per
line. Matrices are four decimal entries in row-major order.
"""

from __future__ import annotations

from .attacks import Method, RecoveredKey
from .cayley_purser import CpEnvelope, CpPrivateKey, CpPublicKey
from .matrix import Mat2
from .slavin import SlavinBreak, SlavinCiphertext, SlavinPrivateKey, SlavinPublicKey

CP_PUB = "CP-PUB-1"
CP_PRV = "CP-PRV-1"
CP_CT = "CP-CT-1"
CP_REC = "CP-REC-1"
SLV_PUB = "SLV-PUB-1"
SLV_PRV = "SLV-PRV-1"
SLV_CT = "SLV-CT-1"
SLV_REC = "SLV-REC-1"


class KeyFileError(ValueError):
    pass


def dumps(obj) -> str:
    if isinstance(obj, (CpPublicKey, SlavinPublicKey)):
        magic = CP_PUB if isinstance(obj, CpPublicKey) else SLV_PUB
        lines = [magic, obj.n, obj.A, obj.B, obj.G]
    elif isinstance(obj, (CpPrivateKey, SlavinPrivateKey)):
        magic = CP_PRV if isinstance(obj, CpPrivateKey) else SLV_PRV
        lines = [magic, obj.n, obj.C, obj.p, obj.q, obj.r]
    elif isinstance(obj, CpEnvelope):
        lines = [CP_CT, obj.E.n, obj.E, *obj.blocks]
    elif isinstance(obj, SlavinCiphertext):
        lines = [SLV_CT, obj.E.n, obj.E, obj.Y.hex()]
    elif isinstance(obj, RecoveredKey):
        alpha = "-" if obj.alpha is None else obj.alpha
        lines = [CP_REC, obj.C_prime.n, obj.C_prime, obj.method.value, alpha]
    elif isinstance(obj, SlavinBreak):
        lines = [SLV_REC, obj.C_prime.n, obj.C_prime, obj.mu_squared]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(str(x) for x in lines) + "\n"


def _int(line: str) -> int:
    try:
        return int(line)
    except ValueError:
        raise KeyFileError(f"expected a decimal integer, got {line!r}") from None


def loads(text: str):
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) < 3:
        raise KeyFileError("truncated file")
    magic = lines[0]
    n = _int(lines[1])
    if n < 2:
        raise KeyFileError("modulus must be >= 2")
    body = lines[2:]

    def mat(i: int) -> Mat2:
        try:
            return Mat2.parse(body[i], n)
        except (IndexError, ValueError) as exc:
            raise KeyFileError(f"bad matrix on line {i + 3}: {exc}") from None

    def need(k: int) -> None:
        if len(body) != k:
            raise KeyFileError(f"{magic}: expected {k} lines after the modulus, got {len(body)}")

    if magic in (CP_PUB, SLV_PUB):
        need(3)
        cls = CpPublicKey if magic == CP_PUB else SlavinPublicKey
        return cls(mat(0), mat(1), mat(2))
    if magic in (CP_PRV, SLV_PRV):
        need(4)
        cls = CpPrivateKey if magic == CP_PRV else SlavinPrivateKey
        key = cls(mat(0), _int(body[1]), _int(body[2]), _int(body[3]))
        if key.p * key.q != n:
            raise KeyFileError("p*q does not match the modulus")
        return key
    if magic == CP_CT:
        if len(body) < 2:
            raise KeyFileError("ciphertext needs E and at least one block")
        return CpEnvelope(mat(0), tuple(mat(i) for i in range(1, len(body))))
    if magic == SLV_CT:
        need(2)
        try:
            return SlavinCiphertext(mat(0), bytes.fromhex(body[1]))
        except ValueError:
            raise KeyFileError("Y is not valid hex") from None
    if magic == CP_REC:
        need(3)
        try:
            method = Method(body[1])
        except ValueError:
            raise KeyFileError(f"unknown method {body[1]!r}") from None
        alpha = None if body[2] == "-" else _int(body[2])
        return RecoveredKey(mat(0), method, alpha)
    if magic == SLV_REC:
        need(2)
        return SlavinBreak(mat(0), _int(body[1]))
    raise KeyFileError(f"unknown magic {magic!r}")
