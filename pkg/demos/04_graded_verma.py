"""Graded baby Vermas Z^chi(M) over a simple g_0bar-module M.

The even part of gl(2|1) is gl(2) + gl(1); M(lambda) is the simple head of
the even baby Verma, and Z^chi(M) is induced with g_1 acting by zero.  The
odd factor f1 of the simplicity polynomial decides simplicity of Z^chi(M).
"""

import itertools

from glmn import (make_field, build_algebra, Character, Weight,
                  build_baby_verma, build_simple_g0_module,
                  build_graded_verma, f_formula, f1_direct, is_simple)

F = make_field(5)
alg = build_algebra(2, 1, F)
chi = Character(alg, {})
rs = alg.root_system()

rows = []
for coords in [(0, 0, 0), (1, 0, 3), (2, 1, 0), (3, 3, 1), (4, 2, 2)]:
    lam = Weight(F, coords)
    M = build_simple_g0_module(alg, chi, lam)
    ZM = build_graded_verma(alg, chi, M)
    Z = build_baby_verma(alg, chi, lam)
    f1 = f1_direct(Z).idx
    verdict = bool(is_simple(ZM))
    rows.append((coords, M.dim, ZM.dim, f1, verdict))

print("lambda      dim M  dim Z(M)  f1   Z(M) simple?")
for coords, dm, dz, f1, verdict in rows:
    print(f"{str(coords):<12}{dm:<7}{dz:<10}{F.format_index(f1):<5}{verdict}")

# Full-scan statistics: Z^chi(M(lambda)) is simple for exactly the lambda
# with f1(lambda) != 0 (both odd linear factors nonzero), 80 of 125.
count = 0
for coords in itertools.product(range(5), repeat=3):
    if f_formula(rs, Weight(F, coords)).f1.idx != 0:
        count += 1
print(f"\nweights with f1 != 0: {count} / 125")
