"""Run both Cayley-Purser attacks and the Slavin attack over many random keys.

    python scripts/attack_sweep.py --bits 128 --keys 200 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from cpbreak.attacks import build_cp_system, cayley_hamilton_attack, linear_algebra_attack
from cpbreak.cayley_purser import cp_keygen
from cpbreak.matrix import is_scalar_multiple, nullspace
from cpbreak.slavin import slavin_attack, slavin_keygen


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bits", type=int, default=128)
    ap.add_argument("--keys", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    dims = Counter()
    outcomes = Counter()
    t_la = t_ch = t_slv = 0.0
    for _ in range(args.keys):
        pk, sk = cp_keygen(args.bits, rng)
        dims[nullspace(build_cp_system(pk.A, pk.B, pk.G)).dim] += 1
        t0 = time.perf_counter()
        la = linear_algebra_attack(pk)
        t1 = time.perf_counter()
        ch = cayley_hamilton_attack(pk)
        t2 = time.perf_counter()
        t_la += t1 - t0
        t_ch += t2 - t1
        is_scalar_multiple(la.C_prime, sk.C)
        is_scalar_multiple(ch.C_prime, sk.C)
        outcomes[ch.method.value] += 1

        spk, ssk = slavin_keygen(args.bits, rng)
        t0 = time.perf_counter()
        brk = slavin_attack(spk)
        t_slv += time.perf_counter() - t0
        is_scalar_multiple(brk.C_prime, ssk.C)

    k = args.keys
    print(f"{k} keys at {args.bits} bits")
    print(f"joint nullspace dimension histogram: {dict(dims)}")
    print(f"Cayley-Hamilton attack resolved by: {dict(outcomes)}")
    print(f"mean time  linear-algebra {t_la / k * 1e6:.0f}us  cayley-hamilton {t_ch / k * 1e6:.0f}us  slavin {t_slv / k * 1e6:.0f}us")


if __name__ == "__main__":
    main()
