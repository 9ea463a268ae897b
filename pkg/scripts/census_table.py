"""Conjugacy-class census of GL(2,q), plus the size profile of GL(2,pq) classes.

    python scripts/census_table.py --q 3 5 7 11 13 --p 223 --pq 173
"""

import argparse

from cpbreak.census import census_by_formula, format_table, gl2_order


def composite_profile(p, q):
    """Fraction of GL(2,pq) lying in classes of each size (sizes multiply across CRT)."""
    n = p * q
    rows = []
    for rp in census_by_formula(p):
        for rq in census_by_formula(q):
            size = rp.class_size * rq.class_size
            count = rp.class_count * rq.class_count
            rows.append((f"{rp.case.value}x{rq.case.value}", size, count, size * count))
    total = gl2_order(p) * gl2_order(q)
    print(f"GL(2,{n}): order {total}, n^2 = {n * n}")
    print(f"{'cases':<8}{'size/n^2':>12}{'share of group':>16}")
    for label, size, count, elems in sorted(rows, key=lambda r: -r[3]):
        print(f"{label:<8}{size / n**2:>12.4f}{elems / total:>16.4%}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5, 7, 11, 13])
    ap.add_argument("--p", type=int, default=223)
    ap.add_argument("--pq", type=int, default=173, help="second prime of the composite modulus")
    args = ap.parse_args()
    for q in args.q:
        print(format_table(q, enumerate_classes=q <= 13))
        print()
    composite_profile(args.p, args.pq)


if __name__ == "__main__":
    main()
