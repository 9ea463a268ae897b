"""Cayley-Purser vs textbook RSA across modulus sizes.

    python scripts/bench_report.py --bits 512 1024 2048 --iters 50
"""

import argparse
import random

from cpbreak.bench import run_bench


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bits", type=int, nargs="+", default=[512, 1024, 2048])
    ap.add_argument("--iters", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for bits in args.bits:
        print(run_bench(bits, args.iters, rng).to_text())
        print()


if __name__ == "__main__":
    main()
