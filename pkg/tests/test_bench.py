import math
import random

import pytest

from cpbreak.bench import RSA_E, BenchReport, rsa_decrypt, rsa_encrypt, rsa_keygen, run_bench
from cpbreak.matrix import count_ops


@pytest.fixture(scope="module")
def rsa():
    return rsa_keygen(128, random.Random(1))


def test_rsa_roundtrip(rsa):
    rng = random.Random(2)
    for _ in range(100):
        m = rng.randrange(rsa.n)
        assert rsa_decrypt(rsa, rsa_encrypt(rsa, m)) == m


def test_rsa_fixed_points(rsa):
    assert rsa_encrypt(rsa, 0) == 0
    assert rsa_encrypt(rsa, 1) == 1


def test_rsa_exponents(rsa):
    assert rsa.e == RSA_E
    assert rsa.d * rsa.e % math.lcm(rsa.p - 1, rsa.q - 1) == 1
    with pytest.raises(ValueError):
        rsa_keygen(32)


def test_small_bench_report():
    rep = run_bench(128, 10, random.Random(3))
    assert rep.iterations == 10
    assert set(rep.means) == {"cp_encrypt_power", "cp_encrypt_lincomb", "cp_decrypt", "rsa_encrypt", "rsa_decrypt"}
    assert all(v > 0 for v in rep.means.values())
    assert rep.rsa_dec_over_cp_dec > 0
    kv = dict(line.split("=") for line in rep.to_kv().splitlines())
    assert kv["modulus_bits"] == "128"
    assert "rsa_decrypt / cp_decrypt" in rep.to_text()
    with pytest.raises(ValueError):
        run_bench(128, 5)


def test_report_ratios():
    rep = BenchReport(8, 10, {"cp_decrypt": 1.0, "rsa_decrypt": 4.0, "cp_encrypt_lincomb": 2.0, "rsa_encrypt": 1.0})
    assert rep.rsa_dec_over_cp_dec == 4.0
    assert rep.rsa_enc_over_cp_lincomb == 0.5
