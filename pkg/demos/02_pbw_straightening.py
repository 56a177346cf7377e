"""Straightening words into the PBW basis of u(g, chi).

The reduced enveloping algebra of gl(m|n) has basis f^a h^b e^c with odd
exponents < 2 and even exponents < p; products are computed by the
super-commutation rules plus the chi-dependent p-th power reductions.
"""

from glmn import (make_field, build_algebra, Character, Weight,
                  ReductionContext, PBWElement, normalize, multiply,
                  ad_action, hc_gamma)
from glmn.enveloping import evaluate_cartan

F = make_field(5)
alg = build_algebra(1, 1, F)
ctx = ReductionContext(alg, Character(alg, {}))

print("u(gl(1|1), 0) has", len(ctx.admissible_monomials()),
      "PBW monomials (5^2 * 2^2)")

# The odd pair e = E(1,2), f = E(2,1): straightening e*f produces the
# coroot minus the reversed product.
ef = normalize(ctx, [(1, 2), (2, 1)])
print("\ne f  =", ef.dump())

# Odd squares collapse to half the self-bracket; for these root vectors
# that is zero.
print("f f  =", normalize(ctx, [(2, 1), (2, 1)]).dump() or "0")

# With a nonzero character the p-th powers of Cartan elements pick up the
# shift h^p = h + chi(h)^p.
chi = Character(alg, {(1, 1): 2})
ctx_chi = ReductionContext(alg, chi)
h5 = normalize(ctx_chi, [(1, 1)] * 5)
print("\nwith chi(E11) = 2:  h1^5 =", h5.dump())

# ad acts by super derivations.
u = normalize(ctx, [(2, 1), (1, 1)])
print("\nad E(1,1) applied to f h1:", ad_action(ctx, alg.unit_matrix(1, 1), u).dump())

# The Harish-Chandra projection keeps the pure Cartan part of weight-zero
# elements; evaluating it at a weight gives the scalar by which the
# element acts on a highest weight line.
g = hc_gamma(ctx, ef)
lam = Weight(F, [2, 4])
print("\ngamma(e f) =", g.dump())
print("gamma(e f) at lambda = (2, 4):",
      F.format_index(evaluate_cartan(ctx, g, lam).idx), "(= l1 + l2)")
