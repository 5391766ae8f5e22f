"""Compare both sign variants of the Bernoulli-coefficient recursion against
interpolated P_k and print where each one fails.

    python scripts/resolve_eq11_sign.py --max-m 30
"""
import argparse

from stirpoly import build_pk_sequence, pk_next_via_eq11, resolve_eq11_sign


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=15)
    args = ap.parse_args()

    res = resolve_eq11_sign(args.max_m)
    for s in (1, -1):
        bad = list(res.failures[s])
        print(f"sign {s:+d}: {'ok' if not bad else f'fails at m = {bad}'}")
    print(f"winner: {res.variant}")

    # size of the discrepancy for the printed variant, which should be
    # exactly 2^(m+2) n B_{m+1}(0)
    seq = build_pk_sequence(args.max_m + 1)
    for m in res.failures[1][:5]:
        diff = pk_next_via_eq11(m, seq, sign=1) - seq[m + 1]
        print(f"  m={m}: printed - oracle = {diff.to_text('n')}")


if __name__ == "__main__":
    main()
