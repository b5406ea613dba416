#!/usr/bin/env python3
"""Write a synthetic Maass coefficient file that passes the parser's Hecke checks.

nu(p) = 2 cos(theta_p) with theta_p drawn from a seeded RNG, extended to prime
powers by nu(p^{k+1}) = nu(p) nu(p^k) - nu(p^{k-1}) and multiplicatively to all n.
The result is not an automorphic form.
"""
import argparse
import math
import random


def factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=80)
    ap.add_argument("--r", default="13.7797513519")
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--prec", default="1e-13")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    prime_power = {}
    for p in range(2, args.n_max + 1):
        if len(factor(p)) == 1 and factor(p).get(p) == 1:
            a = 2.0 * math.cos(rng.uniform(0.0, math.pi))
            seq = [1.0, a]
            while p ** len(seq) <= args.n_max:
                seq.append(a * seq[-1] - seq[-2])
            prime_power[p] = seq
    print("# SYNTHETIC test fixture: Hecke-consistent coefficients, not an automorphic form.")
    print(f"# generated by tools/make_synthetic_maass.py --n-max {args.n_max} --r {args.r} --seed {args.seed}")
    print(f"R {args.r} parity even prec {args.prec}")
    for n in range(1, args.n_max + 1):
        v = 1.0
        for p, k in factor(n).items():
            v *= prime_power[p][k]
        print(f"{n} {v:.17g}")


if __name__ == "__main__":
    main()
