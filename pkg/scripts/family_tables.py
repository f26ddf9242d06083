#!/usr/bin/env python3
"""Sweep the torus, pretzel, and repeated-sum families and print the
resulting code parameter tables.

Usage: python scripts/family_tables.py [--max-torus-b 9] [--max-pretzel-p 7]
"""

import argparse

from knotcode.fields import FqField
from knotcode.generators import builtin, connected_sum, pretzel_diagram, torus_diagram
from knotcode.coloring import knot_determinant
from knotcode.codes import code_from_diagram, min_distance


def torus_table(max_b: int):
    print("== torus knots T(2,b), code over F_p for the smallest p | b ==")
    print(f"{'knot':>10} {'det':>5} {'q':>3} {'[n,k,d]':>12} {'rate':>6}")
    for b in range(3, max_b + 1, 2):
        d = torus_diagram(2, b)
        det = knot_determinant(d)
        p = min(f for f in range(2, det + 1) if det % f == 0)
        field = FqField(p)
        c = code_from_diagram(d, field, -1)
        dist = min_distance(c)
        print(f"{f'T(2,{b})':>10} {det:>5} {p:>3} {f'[{c.n},{c.k},{dist}]':>12} {c.k / c.n:>6.3f}")


def pretzel_table(max_p: int):
    print("\n== pretzel knots P(p,p,p) over F_p: [3p, 3, 2p-2] ==")
    print(f"{'knot':>12} {'det':>6} {'[n,k,d]':>12} {'rate':>6}")
    for p in range(3, max_p + 1, 2):
        d = pretzel_diagram([p, p, p])
        field = FqField(p)
        c = code_from_diagram(d, field, -1)
        dist = min_distance(c)
        print(f"{f'P({p},{p},{p})':>12} {knot_determinant(d):>6} {f'[{c.n},{c.k},{dist}]':>12} {c.k / c.n:>6.3f}")


def sum_table(max_m: int):
    print("\n== m-fold trefoil sums over F_3: [3m, m+1, 2], rate -> 1/3 ==")
    print(f"{'m':>3} {'[n,k,d]':>12} {'rate':>6}")
    F3 = FqField(3)
    d = builtin("trefoil")
    for m in range(1, max_m + 1):
        c = code_from_diagram(d, F3, -1)
        dist = min_distance(c)
        print(f"{m:>3} {f'[{c.n},{c.k},{dist}]':>12} {c.k / c.n:>6.3f}")
        if m < max_m:
            d = connected_sum(d, 0, builtin("trefoil"), 0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-torus-b", type=int, default=9)
    ap.add_argument("--max-pretzel-p", type=int, default=7)
    ap.add_argument("--max-sum-m", type=int, default=5)
    args = ap.parse_args()
    torus_table(args.max_torus_b)
    pretzel_table(args.max_pretzel_p)
    sum_table(args.max_sum_m)


if __name__ == "__main__":
    main()
