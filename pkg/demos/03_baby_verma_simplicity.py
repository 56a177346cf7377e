"""Baby Verma modules Z^chi(lambda) and the simplicity polynomial.

For gl(2|1) with chi = 0 we scan all 125 weights of X = F_5^3, compare the
matrix-level scalar f_direct with the closed formula
    [(l1 - l2 + 1)^4 - 1] (l1 + l3 + 1)(l2 + l3),
and cross-check against the spinning oracle.
"""

import itertools

from glmn import (make_field, build_algebra, Character, Weight,
                  build_baby_verma, f_direct, f_formula, is_simple,
                  maximal_vectors)

F = make_field(5)
alg = build_algebra(2, 1, F)
chi = Character(alg, {})
rs = alg.root_system()

simple = 0
agree = True
for coords in itertools.product(range(5), repeat=3):
    lam = Weight(F, coords)
    Z = build_baby_verma(alg, chi, lam)
    fd = f_direct(Z).idx
    ff = f_formula(rs, lam).f_formula.idx
    verdict = bool(is_simple(Z))
    simple += verdict
    agree = agree and (fd == ff) and (verdict == (fd != 0))

print(f"dim Z^0(lambda) = {Z.dim} for every lambda (5 * 2^2)")
print(f"simple baby Vermas: {simple} / 125")
print(f"f_direct == f_formula and oracle == (f != 0) everywhere: {agree}")

# A non-simple example in detail: lambda = (0, 1, 4) has l2 = l1 + 1 and
# l1 + l3 + 1 = 0, so every factor of the formula vanishes.
lam = Weight(F, [0, 1, 4])
Z = build_baby_verma(alg, chi, lam)
print(f"\nlambda = (0,1,4): f = {F.format_index(f_direct(Z).idx)}")
for w, sub, par in maximal_vectors(Z):
    print(f"  maximal line(s) of weight {[int(c) for c in w.coords]} "
          f"parity {par}: dim {sub.dim}")
