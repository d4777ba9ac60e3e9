#!/usr/bin/env python3
"""Tabulate classical and Sq¹-refined invariants of T(n,n) torus links.

Usage: python3 scripts/torus_table.py [max_n]
"""

import sys

from khs import SQ1, TorusLinkSpec, refined_invariants, torus_link

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
print("link            p  q    s  r_plus  s_plus  formula")
for n in range(2, max_n + 1):
    for qr in range(0, n // 2 + 1):
        p = n - qr
        d = torus_link(TorusLinkSpec(n, qr))
        res = refined_invariants(d, SQ1)
        formula = (p - qr) ** 2 - 2 * p + 1
        print(f"T({n},{n})_{{{p},{qr}}}   {p}  {qr}  {res.s_classical:>3}  "
              f"{res.r_plus:>6}  {res.s_plus:>6}  {formula:>7}")
