"""Table the size of P_k coefficients and timings of the three derivation
routes up to a given K.

    python scripts/pk_growth.py --max-k 40
"""
import argparse
import time

from stirpoly import build_pk_sequence, build_stirling_table
from stirpoly.pk import required_table_size


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=30)
    args = ap.parse_args()
    K = args.max_k

    t0 = time.perf_counter()
    table = build_stirling_table(required_table_size(K))
    t1 = time.perf_counter()
    interp = build_pk_sequence(K, "interp", table=table)
    t2 = time.perf_counter()
    rec = build_pk_sequence(K, "recursion")
    t3 = time.perf_counter()
    assert rec.polys == interp.polys

    print(f"table {t1 - t0:.3f}s  interp {t2 - t1:.3f}s  recursion {t3 - t2:.3f}s")
    print(f"{'k':>3} {'P_k(0)':>30} {'max denominator':>20}")
    for k, p in enumerate(interp.polys):
        den = max(c.denominator for c in p.coeffs)
        print(f"{k:>3} {str(p(0)):>30} {den:>20}")


if __name__ == "__main__":
    main()
