import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpbreak.cayley_purser import (
    CpCiphertext,
    EncryptMode,
    MalformedPayload,
    check_private_key,
    cp_decrypt,
    cp_encrypt,
    cp_encrypt_with,
    cp_key_from_params,
    cp_keygen,
    decode_bytes,
    decrypt_message,
    encode_bytes,
    encrypt_message,
    entry_bytes,
    session_keys,
    session_matrix,
)
from cpbreak.matrix import Mat2, commutes, count_ops, mat_pow
from cpbreak.ringmath import rand_unit

N1 = 28757
MODES = list(EncryptMode)


def _rand_mat(n, rng):
    return Mat2(n, *(rng.randrange(n) for _ in range(4)))


def test_example1_keygen(ex1_keys):
    pk, sk = ex1_keys
    assert pk.B == Mat2(N1, 11947, 1712, 4630, 14946)
    assert pk.G == Mat2(N1, 1438, 1433, 20759, 24068)
    assert check_private_key(pk, sk)


def test_key_from_params_rejects_commuting():
    with pytest.raises(ValueError):
        cp_key_from_params(193, 149, Mat2.identity(N1), Mat2(N1, 2, 1, 1, 1), 3)


def test_keygen_invariants(cp64_keys):
    for pk, sk in cp64_keys:
        assert not commutes(pk.A, sk.C)
        assert sk.C @ pk.B == pk.A.inv() @ sk.C
        assert sk.p != sk.q and sk.p * sk.q == pk.n
        assert pk.n.bit_length() in (63, 64)
        assert not pk.G.is_scalar()
        assert 2 <= sk.r <= 2**16
        assert check_private_key(pk, sk)


def test_small_r_regime():
    pk, sk = cp_keygen(32, random.Random(8), r_range=(2, 50))
    assert sk.r <= 50


def test_power_mode_recomputed(ex1_keys):
    pk, sk = ex1_keys
    D = mat_pow(pk.G, 12345)
    X = Mat2(N1, 5, 6, 7, 8)
    ct = cp_encrypt_with(pk, D, X)
    Dinv = D.inv()
    E = Dinv @ pk.A @ D
    K = Dinv @ pk.B @ D
    assert ct.E == E
    assert ct.Y == K @ X @ K
    L = sk.C.inv() @ E @ sk.C
    assert L @ K == Mat2.identity(N1)


@pytest.mark.parametrize("mode", MODES)
def test_roundtrip_identity(ex1_keys, mode, rng):
    pk, sk = ex1_keys
    I = Mat2.identity(N1)
    assert cp_decrypt(sk.C, cp_encrypt(pk, I, mode, rng)) == I


@pytest.mark.parametrize("mode", MODES)
def test_roundtrip_random(cp64_keys, mode, rng):
    for pk, sk in cp64_keys:
        for _ in range(10):
            X = _rand_mat(pk.n, rng)
            assert cp_decrypt(sk.C, cp_encrypt(pk, X, mode, rng)) == X


def test_singular_plaintext(cp64_keys, rng):
    pk, sk = cp64_keys[0]
    for X in (Mat2(pk.n, 0, 0, 0, 0), Mat2(pk.n, 1, 1, 1, 1), Mat2(pk.n, 2, 4, 1, 2)):
        assert not X.is_invertible()
        for mode in MODES:
            assert cp_decrypt(sk.C, cp_encrypt(pk, X, mode, rng)) == X


def test_scalar_multiple_decrypts_identically(cp64_keys, rng):
    pk, sk = cp64_keys[1]
    X = _rand_mat(pk.n, rng)
    ct = cp_encrypt(pk, X, rng=rng)
    for _ in range(20):
        mu = rand_unit(pk.n, rng)
        assert cp_decrypt(sk.C.scale(mu), ct) == cp_decrypt(sk.C, ct) == X


def test_lincomb_session_commutes(cp64_keys, rng):
    pk, sk = cp64_keys[2]
    for _ in range(50):
        D = session_matrix(pk, EncryptMode.LINEAR_COMBINATION, rng)
        assert commutes(D, pk.G) and commutes(D, sk.C)
        E, K = session_keys(pk, D)
        assert E != pk.A
        assert sk.C.inv() @ E @ sk.C @ K == Mat2.identity(pk.n)


def test_lincomb_never_exponentiates(cp64_keys, rng):
    pk, _ = cp64_keys[0]
    with count_ops() as ops:
        for _ in range(20):
            cp_encrypt(pk, _rand_mat(pk.n, rng), EncryptMode.LINEAR_COMBINATION, rng)
    assert ops["mat_pow"] == 0
    with count_ops() as ops:
        cp_encrypt(pk, _rand_mat(pk.n, rng), EncryptMode.POWER, rng)
    assert ops["mat_pow"] >= 1


def test_ciphertext_hides_A(cp64_keys, rng):
    pk, _ = cp64_keys[3]
    for mode in MODES:
        for _ in range(20):
            assert cp_encrypt(pk, Mat2.identity(pk.n), mode, rng).E != pk.A


# ---- byte encoding --------------------------------------------------------

N24 = (1 << 26) + 15  # 27-bit modulus, 3 bytes per entry


def test_entry_width():
    assert entry_bytes(N24) == 3
    assert entry_bytes(2**24) == 3
    assert entry_bytes(2**24 - 1) == 2


def test_encode_empty():
    blocks = encode_bytes(b"", N24)
    assert len(blocks) == 1
    assert decode_bytes(blocks, N24) == b""


def test_encode_layout():
    (m,) = encode_bytes(b"AB", N24)
    stream = b"".join(v.to_bytes(3, "big") for v in m.entries)
    assert stream == (2).to_bytes(8, "big") + b"AB" + b"\x00" * 2


def test_encode_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        encode_bytes(b"x", 200)


def test_decode_malformed():
    (m,) = encode_bytes(b"AB", N24)
    bad = Mat2(N24, m.a, m.b + 1, m.c, m.d)  # length field += 2**16
    with pytest.raises(MalformedPayload):
        decode_bytes([bad], N24)
    with pytest.raises(MalformedPayload):
        decode_bytes([Mat2(N24, 2**24, 0, 0, 0)], N24)


@settings(max_examples=50)
@given(st.binary(max_size=300), st.integers(2**24, 2**200))
def test_encode_roundtrip(msg, n):
    assert decode_bytes(encode_bytes(msg, n), n) == msg


def test_message_roundtrip_128bit():
    rng = random.Random(128)
    pk, sk = cp_keygen(128, rng)
    msg = rng.randbytes(1024)
    for mode in MODES:
        env = encrypt_message(pk, msg, mode, rng)
        assert decrypt_message(sk.C, env) == msg
